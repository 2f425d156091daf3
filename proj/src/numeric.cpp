#include "hk/numeric.hpp"
#include "hk/errors.hpp"

#include <map>
#include <mutex>
#include <cstdlib>

namespace hk {

GaussLegendre::GaussLegendre(int n) : x(n), w(n) {
    // Newton iteration on Legendre polynomials, standard construction.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(PI * (i + 0.75) / (n + 0.5));
        double z1 = 2.0, pp = 0.0;
        while (std::abs(z - z1) > 1e-15) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            z1 = z;
            z = z1 - p0 / pp;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[n - 1 - i] = w[i];
    }
}

const GaussLegendre& gl_rule(int n) {
    static std::map<int, GaussLegendre> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, GaussLegendre(n)).first;
    return it->second;
}

namespace {

Cplx gl_apply(const std::function<Cplx(double)>& f, double a, double b, int n,
              long long* evals) {
    const GaussLegendre& r = gl_rule(n);
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    KahanSum s;
    for (int i = 0; i < n; ++i) s.add(f(mid + half * r.x[i]) * r.w[i]);
    if (evals) *evals += n;
    return s.total() * half;
}

Cplx adaptive_rec(const std::function<Cplx(double)>& f, double a, double b,
                  double tol, int depth, long long* evals, long long& budget) {
    Cplx coarse = gl_apply(f, a, b, 16, evals);
    double m = 0.5 * (a + b);
    Cplx fine = gl_apply(f, a, m, 16, evals) + gl_apply(f, m, b, 16, evals);
    budget -= 48;
    double err = std::abs(fine - coarse);
    double floor = 5e-14 * (std::abs(fine) + std::abs(coarse));
    if (err <= std::max(tol, floor) || depth <= 0) {
        if (depth <= 0 && err > std::max(64.0 * tol, 1e-10 * (std::abs(fine) + 1.0)))
            throw NoConvergence("adaptive_integrate: refinement stalled at [" + std::to_string(a) + ", " + std::to_string(b) + "] err=" + std::to_string(err) + " tol=" + std::to_string(tol));
        return fine;
    }
    if (budget <= 0) throw NoConvergence("adaptive_integrate: panel budget exceeded");
    return adaptive_rec(f, a, m, tol * 0.5, depth - 1, evals, budget) +
           adaptive_rec(f, m, b, tol * 0.5, depth - 1, evals, budget);
}

} // namespace

Cplx adaptive_integrate(const std::function<Cplx(double)>& f, double a, double b,
                        double tol, int maxDepth, long long* evals) {
    if (a == b) return {0.0, 0.0};
    long long budget = 40'000'000;
    return adaptive_rec(f, a, b, tol, maxDepth, evals, budget);
}

Cplx tanh_sinh_integrate(const std::function<Cplx(double)>& f, double a, double b,
                         double tol) {
    // x = mid + half*tanh((pi/2) sinh t); levels double the node density.
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double tmax = 6.5;
    auto node = [&](double t, double& x, double& w) {
        double st = std::sinh(t);
        double ch = std::cosh(t);
        double u = std::tanh(0.5 * PI * st);
        x = mid + half * u;
        double sech = 1.0 / std::cosh(0.5 * PI * st);
        w = half * 0.5 * PI * ch * sech * sech;
    };
    Cplx prev(0.0);
    double h = 1.0;
    KahanSum s;
    {
        double x, w;
        node(0.0, x, w);
        s.add(f(x) * w);
    }
    for (double t = h; t < tmax; t += h) {
        double x, w;
        node(t, x, w);
        if (x > a && x < b && w > 1e-300) s.add(f(x) * w);
        node(-t, x, w);
        if (x > a && x < b && w > 1e-300) s.add(f(x) * w);
    }
    prev = s.total() * h;
    for (int level = 1; level <= 12; ++level) {
        h *= 0.5;
        KahanSum add;
        for (double t = h; t < tmax; t += 2.0 * h) {
            double x, w;
            node(t, x, w);
            if (x > a && x < b && w > 1e-300) add.add(f(x) * w);
            node(-t, x, w);
            if (x > a && x < b && w > 1e-300) add.add(f(x) * w);
        }
        Cplx cur = prev * 0.5 + add.total() * h;
        if (level >= 3 && std::abs(cur - prev) <= tol) return cur;
        prev = cur;
    }
    return prev;
}

std::vector<std::vector<double>> fd_weights(double x0, const std::vector<double>& grid, int m) {
    // Fornberg's algorithm (Math. Comp. 51, 1988).
    const int n = static_cast<int>(grid.size()) - 1;
    std::vector<std::vector<std::vector<double>>> d(
        n + 1, std::vector<std::vector<double>>(n + 1, std::vector<double>(m + 1, 0.0)));
    d[0][0][0] = 1.0;
    double c1 = 1.0;
    for (int i = 1; i <= n; ++i) {
        double c2 = 1.0;
        for (int j = 0; j < i; ++j) {
            double c3 = grid[i] - grid[j];
            c2 *= c3;
            for (int k = 0; k <= std::min(i, m); ++k) {
                d[i][j][k] = ((grid[i] - x0) * d[i - 1][j][k] -
                              (k > 0 ? k * d[i - 1][j][k - 1] : 0.0)) / c3;
            }
        }
        for (int k = 0; k <= std::min(i, m); ++k) {
            d[i][i][k] = (c1 / c2) * ((k > 0 ? k * d[i - 1][i - 1][k - 1] : 0.0) -
                                      (grid[i - 1] - x0) * d[i - 1][i - 1][k]);
        }
        c1 = c2;
    }
    std::vector<std::vector<double>> out(m + 1, std::vector<double>(n + 1));
    for (int k = 0; k <= m; ++k)
        for (int j = 0; j <= n; ++j) out[k][j] = d[n][j][k];
    return out;
}

} // namespace hk
