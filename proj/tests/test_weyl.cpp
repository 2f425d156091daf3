#include "doctest.h"

#include "hk/weyl.hpp"

#include <random>

using namespace hk;
using namespace hk::weyl;

namespace {

Mat3 random_matrix(std::mt19937_64& rng, int lo = -100, int hi = 100) {
    Mat3 g{};
    for (auto& row : g)
        for (auto& x : row) x = static_cast<double>(irand(rng, lo, hi));
    return g;
}

Mat3i to_int(const Mat3& g) {
    Mat3i m{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = static_cast<long long>(g[i][j]);
    return m;
}

} // namespace

TEST_CASE("weyl element orders and signs") {
    CHECK(weyl_mul(WeylId::w2, WeylId::w2) == WeylId::I);
    CHECK(weyl_mul(WeylId::w3, WeylId::w3) == WeylId::I);
    CHECK(weyl_mul(WeylId::wl, WeylId::wl) == WeylId::I);
    CHECK(weyl_mul(WeylId::w4, weyl_mul(WeylId::w4, WeylId::w4)) == WeylId::I);
    CHECK(weyl_mul(WeylId::w5, weyl_mul(WeylId::w5, WeylId::w5)) == WeylId::I);
    CHECK(weyl_elem(WeylId::w4).sign == 1);
    CHECK(weyl_elem(WeylId::w2).sign == -1);
}

TEST_CASE("matrix representatives realize the permutation action") {
    // conjugation of diag(a1,a2,a3) by the stored matrix permutes entries as
    // the stored perm claims
    for (const auto& w : weyl_all()) {
        Mat3 y{};
        y[0][0] = 2.0; y[1][1] = 3.0; y[2][2] = 5.0;
        // w y w^{-1}: for signed permutation matrices, w^{-1} = transpose up to sign^2
        Mat3 wt{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) wt[i][j] = w.matrix[j][i];
        double n2 = 0.0; // matrices are +-permutations; w w^T = I
        (void)n2;
        Mat3 conj = matmul(matmul(w.matrix, y), wt);
        SpectralParameter mu = SpectralParameter::make({std::log(2.0), 0}, {std::log(3.0), 0},
                                                       {-std::log(6.0), 0});
        SpectralParameter muw = weyl_act_mu(mu, w.id);
        // p_{mu^w}(y) = p_mu(w y w^{-1}) with p_mu(diag a) = prod |a_i|^{mu_i}
        double lhs = 0.0, rhs = 0.0;
        for (int i = 0; i < 3; ++i) {
            lhs += muw.mu[i].real() * std::log(std::abs(y[i][i]));
            rhs += mu.mu[i].real() * std::log(std::abs(conj[i][i]));
        }
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("weyl action examples") {
    SpectralParameter mu = SpectralParameter::make({0.1, 1.0}, {0.2, -0.4}, {-0.3, -0.6});
    SUBCASE("identity") {
        auto r = weyl_act_mu(mu, WeylId::I);
        CHECK(r.mu == mu.mu);
    }
    SUBCASE("w2 swaps the first two coordinates") {
        auto r = weyl_act_mu(mu, WeylId::w2);
        CHECK(r.mu[0] == mu.mu[1]);
        CHECK(r.mu[1] == mu.mu[0]);
        CHECK(r.mu[2] == mu.mu[2]);
    }
    SUBCASE("w4 has order three on mu") {
        auto r = weyl_act_mu(weyl_act_mu(weyl_act_mu(mu, WeylId::w4), WeylId::w4), WeylId::w4);
        for (int i = 0; i < 3; ++i) CHECK(std::abs(r.mu[i] - mu.mu[i]) < 1e-15);
    }
}

TEST_CASE("weyl action is compatible with the group law") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        auto a = static_cast<WeylId>(irand(rng, 0, 5));
        auto b = static_cast<WeylId>(irand(rng, 0, 5));
        Cplx m1{urand(rng, -1, 1), 0.3}, m2{urand(rng, -1, 1), -0.1};
        SpectralParameter mu = SpectralParameter::make(m1, m2, -m1 - m2);
        auto lhs = weyl_act_mu(weyl_act_mu(mu, a), b);
        auto rhs = weyl_act_mu(mu, weyl_mul(a, b));
        for (int i = 0; i < 3; ++i) CHECK(std::abs(lhs.mu[i] - rhs.mu[i]) < 1e-15);
    }
}

TEST_CASE("chi_d_w basics") {
    CHECK(chi_d_w(3, WeylId::I, {+1, +1}) == 1);
    // chi_{(d,d,0)} on diag(v1 v2, v1, 1) is sgn(v2)^d
    for (int d : {0, 1, 2, 3, 7}) {
        for (int v1 : {-1, 1})
            for (int v2 : {-1, 1}) {
                int expect = (d % 2 == 0 || v2 > 0) ? 1 : -1;
                CHECK(chi_d_w(d, WeylId::I, {v1, v2}) == expect);
            }
    }
    // even d kills all signs for every w
    for (const auto& w : weyl_all())
        for (int v1 : {-1, 1})
            for (int v2 : {-1, 1}) CHECK(chi_d_w(4, w.id, {v1, v2}) == 1);
}

TEST_CASE("chi_d_w is multiplicative in v") {
    for (const auto& w : weyl_all())
        for (int d : {0, 1, 2, 3})
            for (int a1 : {-1, 1})
                for (int a2 : {-1, 1})
                    for (int b1 : {-1, 1})
                        for (int b2 : {-1, 1}) {
                            int lhs = chi_d_w(d, w.id, {a1 * b1, a2 * b2});
                            int rhs = chi_d_w(d, w.id, {a1, a2}) * chi_d_w(d, w.id, {b1, b2});
                            CHECK(lhs == rhs);
                        }
}

TEST_CASE("plucker coordinates") {
    SUBCASE("identity matrix") {
        Mat3i g{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
        auto p = plucker(g);
        CHECK(p.A1 == 0); CHECK(p.B1 == 0); CHECK(p.C1 == 1);
        CHECK(p.A2 == 0); CHECK(p.B2 == 0); CHECK(p.C2 == 1);
    }
    SUBCASE("w5 representative") {
        auto p = plucker(to_int(weyl_elem(WeylId::w5).matrix));
        CHECK(p.B1 == 1);
        CHECK(p.A2 == 1);
        CHECK(p.A1 == 0); CHECK(p.C1 == 0); CHECK(p.B2 == 0); CHECK(p.C2 == 0);
    }
    SUBCASE("Plucker relation holds exactly on random integer matrices") {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 10000; ++trial) {
            Mat3i g{};
            for (auto& row : g)
                for (auto& x : row) x = irand(rng, -100, 100);
            auto p = plucker(g);
            CHECK(p.A1 * p.C2 + p.B1 * p.B2 + p.C1 * p.A2 == 0);
        }
    }
}

TEST_CASE("bruhat w5 decomposition") {
    std::mt19937_64 rng(23);
    SUBCASE("degenerate cell rejected") {
        Mat3 g{{{1, 0, 0}, {0, 1, 0}, {1, 0, 1}}};  // B1 = 0
        CHECK_THROWS_AS((void)bruhat_w5_decompose(g), DegenerateCell);
    }
    SUBCASE("parameter round trip") {
        for (int trial = 0; trial < 200; ++trial) {
            double t1 = urand(rng, 0.2, 3.0) * (irand(rng, 0, 1) ? 1 : -1);
            double t2 = urand(rng, 0.2, 3.0) * (irand(rng, 0, 1) ? 1 : -1);
            double z1 = urand(rng, -2, 2), u1 = urand(rng, -2, 2), u2 = urand(rng, -2, 2);
            double u3 = urand(rng, -2, 2), v1 = urand(rng, -2, 2), v3 = urand(rng, -2, 2);
            Mat3 g = assemble_w5(t1, t2, z1, u1, u2, u3, v1, v3);
            auto f = bruhat_w5_decompose(g);
            CHECK(f.s == doctest::Approx(1.0).epsilon(1e-10));
            CHECK(f.t1 == doctest::Approx(t1).epsilon(1e-10));
            CHECK(f.t2 == doctest::Approx(t2).epsilon(1e-10));
            CHECK(f.z1 == doctest::Approx(z1).epsilon(1e-10).scale(1.0));
            CHECK(f.u1 == doctest::Approx(u1).epsilon(1e-10).scale(1.0));
            CHECK(f.u2 == doctest::Approx(u2).epsilon(1e-10).scale(1.0));
            CHECK(f.u3 == doctest::Approx(u3).epsilon(1e-10).scale(1.0));
            CHECK(f.v1 == doctest::Approx(v1).epsilon(1e-10).scale(1.0));
            CHECK(f.v3 == doctest::Approx(v3).epsilon(1e-10).scale(1.0));
        }
    }
    SUBCASE("recomposition reproduces random integer matrices") {
        int done = 0;
        while (done < 200) {
            Mat3 g = random_matrix(rng, -20, 20);
            auto p = plucker(g);
            if (p.B1 == 0.0 || p.A2 == 0.0 || det3(g) == 0.0) continue;
            auto f = bruhat_w5_decompose(g);
            Mat3 h = bruhat_w5_recompose(f);
            double scale = 0.0, err = 0.0;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    scale = std::max(scale, std::abs(g[i][j]));
                    err = std::max(err, std::abs(g[i][j] - h[i][j]));
                }
            CHECK(err <= 1e-10 * std::max(1.0, scale) * 1e2);
            ++done;
        }
    }
}
