#include "hk/weyl.hpp"

#include <cmath>

namespace hk::weyl {

Mat3 matmul(const Mat3& a, const Mat3& b) {
    Mat3 c{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
            c[i][j] = s;
        }
    return c;
}

double det3(const Mat3& g) {
    return g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) -
           g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
           g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
}

SpectralParameter SpectralParameter::make(Cplx mu1, Cplx mu2, Cplx mu3, int d) {
    SpectralParameter p;
    p.mu = {mu1, mu2, mu3};
    p.d = d;
    p.validate();
    return p;
}

SpectralParameter SpectralParameter::from_r(int d, Cplx r) {
    SpectralParameter p;
    double a = (d - 1) / 2.0;
    p.mu = {a + r, -a + r, -2.0 * r};
    p.d = d;
    p.r = r;
    return p;
}

bool SpectralParameter::tempered(double tol) const {
    if (d >= 2) {
        Cplx rr = r ? *r : -mu[2] / 2.0;
        return std::abs(rr.real()) <= tol;
    }
    return std::abs(mu[0].real()) <= tol && std::abs(mu[1].real()) <= tol &&
           std::abs(mu[2].real()) <= tol;
}

void SpectralParameter::validate() const {
    Cplx s = mu[0] + mu[1] + mu[2];
    if (std::abs(s) > 1e-12)
        throw InvariantError("spectral parameter: mu1+mu2+mu3 != 0");
    if (d < 0) throw InvariantError("spectral parameter: negative weight");
    if (d >= 2 && r) {
        double a = (d - 1) / 2.0;
        if (std::abs(mu[0] - (a + *r)) > 1e-12 || std::abs(mu[1] - (-a + *r)) > 1e-12 ||
            std::abs(mu[2] + 2.0 * *r) > 1e-12)
            throw InvariantError("spectral parameter: mu != mu^d(r)");
    }
}

namespace {

Mat3 mk(std::initializer_list<double> v) {
    Mat3 m{};
    auto it = v.begin();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = *it++;
    return m;
}

const std::array<WeylElement, 6>& table() {
    static const std::array<WeylElement, 6> t = {{
        {WeylId::I, {0, 1, 2}, +1, mk({1, 0, 0, 0, 1, 0, 0, 0, 1}), "I"},
        {WeylId::w2, {1, 0, 2}, -1, mk({0, -1, 0, -1, 0, 0, 0, 0, -1}), "w2"},
        {WeylId::w3, {0, 2, 1}, -1, mk({-1, 0, 0, 0, 0, -1, 0, -1, 0}), "w3"},
        {WeylId::w4, {2, 0, 1}, +1, mk({0, 1, 0, 0, 0, 1, 1, 0, 0}), "w4"},
        {WeylId::w5, {1, 2, 0}, +1, mk({0, 0, 1, 1, 0, 0, 0, 1, 0}), "w5"},
        {WeylId::wl, {2, 1, 0}, -1, mk({0, 0, -1, 0, -1, 0, -1, 0, 0}), "wl"},
    }};
    return t;
}

} // namespace

const WeylElement& weyl_elem(WeylId id) { return table()[static_cast<int>(id)]; }
const std::array<WeylElement, 6>& weyl_all() { return table(); }

const std::array<WeylId, 3>& weyl3() {
    static const std::array<WeylId, 3> w3s = {WeylId::I, WeylId::w4, WeylId::w5};
    return w3s;
}

WeylId weyl_mul(WeylId a, WeylId b) {
    const auto& pa = weyl_elem(a).perm;
    const auto& pb = weyl_elem(b).perm;
    std::array<int, 3> p = {pa[pb[0]], pa[pb[1]], pa[pb[2]]};
    for (const auto& e : table())
        if (e.perm == p) return e.id;
    throw InvariantError("weyl_mul: composition not in table");
}

SpectralParameter weyl_act_mu(const SpectralParameter& mu, WeylId w) {
    const auto& p = weyl_elem(w).perm;
    SpectralParameter out;
    out.mu = {mu.mu[p[0]], mu.mu[p[1]], mu.mu[p[2]]};
    out.d = mu.d;
    return out;
}

int chi_d_w(int d, WeylId w, SignPair v) {
    const auto& p = weyl_elem(w).perm;
    const int delta[3] = {d, d, 0};
    const int a[3] = {v.v1 * v.v2, v.v1, 1};
    int res = 1;
    for (int i = 0; i < 3; ++i)
        if ((delta[p[i]] & 1) && a[i] < 0) res = -res;
    return res;
}

PluckerCoords plucker(const Mat3i& g) {
    return {g[2][0],
            g[2][1],
            g[2][2],
            g[1][0] * g[2][1] - g[1][1] * g[2][0],
            g[1][2] * g[2][0] - g[1][0] * g[2][2],
            g[1][1] * g[2][2] - g[1][2] * g[2][1]};
}

PluckerCoordsD plucker(const Mat3& g) {
    return {g[2][0],
            g[2][1],
            g[2][2],
            g[1][0] * g[2][1] - g[1][1] * g[2][0],
            g[1][2] * g[2][0] - g[1][0] * g[2][2],
            g[1][1] * g[2][2] - g[1][2] * g[2][1]};
}

BruhatW5Factorization bruhat_w5_decompose(const Mat3& g) {
    PluckerCoordsD pc = plucker(g);
    double dg = det3(g);
    if (pc.B1 == 0.0 || pc.A2 == 0.0)
        throw DegenerateCell("bruhat_w5_decompose: B1(g)*A2(g) = 0");
    if (dg == 0.0) throw DegenerateCell("bruhat_w5_decompose: det(g) = 0");
    BruhatW5Factorization f;
    f.s = pc.B1;
    f.t1 = pc.A2 / (pc.B1 * pc.B1);
    f.t2 = g[2][1] * dg / (pc.A2 * pc.A2);
    f.z1 = pc.A1 / pc.B1;
    f.u1 = g[1][1] / pc.B1;
    f.u2 = (g[0][0] * g[2][1] - g[0][1] * g[2][0]) / pc.A2;
    f.u3 = g[0][1] / pc.B1;
    f.v1 = -pc.B2 / pc.A2;
    f.v3 = -pc.C2 / pc.A2;
    return f;
}

Mat3 assemble_w5(double t1, double t2, double z1, double u1, double u2, double u3,
                 double v1, double v3) {
    Mat3 u = mk({1, u2, u3, 0, 1, u1, 0, 0, 1});
    Mat3 t = mk({t1 * t2, 0, 0, 0, t1, 0, 0, 0, 1});
    Mat3 z = mk({1, 0, 0, 0, 1, 0, 0, z1, 1});
    Mat3 w5 = weyl_elem(WeylId::w5).matrix;
    Mat3 v = mk({1, 0, v3, 0, 1, v1, 0, 0, 1});
    return matmul(matmul(matmul(matmul(u, t), z), w5), v);
}

Mat3 bruhat_w5_recompose(const BruhatW5Factorization& f) {
    Mat3 g = assemble_w5(f.t1, f.t2, f.z1, f.u1, f.u2, f.u3, f.v1, f.v3);
    for (auto& row : g)
        for (auto& x : row) x *= f.s;
    return g;
}

} // namespace hk::weyl
