#ifndef HK_SPECFUN_HPP
#define HK_SPECFUN_HPP

#include "hk/numeric.hpp"
#include "hk/errors.hpp"

#include <string>
#include <vector>

namespace hk::sf {

/// Gamma(z); throws PoleError at z in -N_0.
Cplx gamma_c(Cplx z);

/// log Gamma(z); imaginary part may differ from the principal branch by 2 pi k,
/// which is harmless because values are only ever exponentiated or subtracted.
Cplx lgamma_c(Cplx z);

/// digamma
Cplx digamma_c(Cplx z);

/// log(sin(pi z)) in the same loose-branch sense as lgamma_c; overflow safe.
Cplx lsin_pi(Cplx z);

/// Q(d,s) = Gamma((d-1)/2 + s) / Gamma((d+1)/2 - s), via log-gamma differences.
Cplx q_factor(int d, Cplx s);
Scaled q_factor_scaled(int d, Cplx s);

/// J_nu(x) for complex order, x > 0.  Series for small x, uniform Debye-type
/// asymptotics otherwise.  The plain value can reach e^{pi |Im nu| / 2}.
Cplx bessel_j(Cplx nu, double x);

/// J_nu(x) = value * exp(logScale) with logScale = pi |Im nu| / 2 peeled off.
Scaled bessel_j_scaled(Cplx nu, double x);

/// Y_nu(x), x > 0.
Cplx bessel_y(Cplx nu, double x);

/// d/dnu J_nu(x).
Cplx bessel_j_dnu(Cplx nu, double x);

/// Truncated power series sum_{k<=N} (-1)^k (x/2)^{nu+2k} / (k! Gamma(nu+k+1)).
Cplx bessel_j_series_partial(Cplx nu, double x, int N);

/// Empirical bound certificate: worstRatio = max |quantity| / bound over grid.
struct BoundCertificate {
    std::string boundName;
    double worstRatio = 0.0;
    double constant = 0.0;  // declared constant; pass iff worstRatio <= constant
    std::vector<std::array<double, 3>> worstPoint;
    bool pass() const { return worstRatio <= constant; }
};

} // namespace hk::sf

#endif
