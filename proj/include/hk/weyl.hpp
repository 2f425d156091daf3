#ifndef HK_WEYL_HPP
#define HK_WEYL_HPP

#include "hk/numeric.hpp"
#include "hk/errors.hpp"

#include <array>
#include <optional>
#include <string>

namespace hk::weyl {

using Mat3 = std::array<std::array<double, 3>, 3>;
using Mat3i = std::array<std::array<long long, 3>, 3>;

Mat3 matmul(const Mat3& a, const Mat3& b);
double det3(const Mat3& g);

/// Spectral parameter mu in C^3 with mu1+mu2+mu3 = 0, weight d, and the
/// d >= 2 reduction mu = ((d-1)/2 + r, -(d-1)/2 + r, -2r).
struct SpectralParameter {
    std::array<Cplx, 3> mu{};
    int d = 0;
    std::optional<Cplx> r;

    static SpectralParameter make(Cplx mu1, Cplx mu2, Cplx mu3, int d = 0);
    static SpectralParameter from_r(int d, Cplx r);

    bool tempered(double tol = 1e-9) const;
    void validate() const;  // throws InvariantError
};

enum class WeylId { I = 0, w2, w3, w4, w5, wl };

struct WeylElement {
    WeylId id;
    /// perm p: (mu^w)[j] = mu[p[j]]
    std::array<int, 3> perm;
    int sign;  // sgn of the permutation
    Mat3 matrix;
    const char* name;
};

const WeylElement& weyl_elem(WeylId id);
const std::array<WeylElement, 6>& weyl_all();
/// The even subgroup {I, w4, w5}.
const std::array<WeylId, 3>& weyl3();
WeylId weyl_mul(WeylId a, WeylId b);

SpectralParameter weyl_act_mu(const SpectralParameter& mu, WeylId w);

struct SignPair {
    int v1 = 1, v2 = 1;  // each exactly +-1; diag(v1*v2, v1, 1)
};

/// chi_{(d,d,0)^w} evaluated on diag(v1 v2, v1, 1).
int chi_d_w(int d, WeylId w, SignPair v);

struct PluckerCoords {
    long long A1, B1, C1, A2, B2, C2;
};
struct PluckerCoordsD {
    double A1, B1, C1, A2, B2, C2;
};

PluckerCoords plucker(const Mat3i& g);
PluckerCoordsD plucker(const Mat3& g);

/// Coordinates of g = s * u(u1,u2,u3) * t(t1,t2) * z(z1) * w5 * v(v1,v3).
struct BruhatW5Factorization {
    double s, t1, t2, z1, u1, u2, u3, v1, v3;
};

/// Requires B1(g)*A2(g) != 0 and det(g) != 0; throws DegenerateCell otherwise.
BruhatW5Factorization bruhat_w5_decompose(const Mat3& g);

/// Rebuild the product of the factorization (including the scalar s).
Mat3 bruhat_w5_recompose(const BruhatW5Factorization& f);

/// Assemble the group element from unipotent/torus coordinates directly.
Mat3 assemble_w5(double t1, double t2, double z1, double u1, double u2, double u3,
                 double v1, double v3);

} // namespace hk::weyl

#endif
