#ifndef HK_NUMERIC_HPP
#define HK_NUMERIC_HPP

#include <complex>
#include <cmath>
#include <functional>
#include <vector>
#include <random>
#include <limits>

namespace hk {

using Cplx = std::complex<double>;

inline constexpr double PI = 3.14159265358979323846264338327950288;

/// e(x) = exp(2*pi*i*x)
inline Cplx e_of(double x) {
    double t = 2.0 * PI * x;
    return {std::cos(t), std::sin(t)};
}
inline Cplx e_of(Cplx x) {
    return std::exp(Cplx(0.0, 2.0 * PI) * x);
}

inline double sgn(double x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); }

/// Complex value carried as value * exp(logScale).  Keeps gamma/sine products
/// representable when the exponential parts only cancel at the very end.
struct Scaled {
    Cplx value{0.0, 0.0};
    double logScale{0.0};

    static Scaled zero() { return {Cplx(0.0), 0.0}; }
    static Scaled from(Cplx v) { return {v, 0.0}; }
    /// exp(w), w complex, as a Scaled with unit-magnitude value.
    static Scaled expval(Cplx w) {
        return {std::exp(Cplx(0.0, w.imag())), w.real()};
    }

    bool is_zero() const { return value == Cplx(0.0); }

    Scaled& normalize() {
        if (is_zero()) { logScale = 0.0; return *this; }
        double a = std::abs(value);
        value /= a;
        logScale += std::log(a);
        return *this;
    }

    Cplx to_complex() const {
        if (is_zero()) return {0.0, 0.0};
        return value * std::exp(logScale);
    }

    friend Scaled operator*(const Scaled& a, const Scaled& b) {
        return {a.value * b.value, a.logScale + b.logScale};
    }
    friend Scaled operator*(const Scaled& a, Cplx c) { return {a.value * c, a.logScale}; }
    friend Scaled operator*(Cplx c, const Scaled& a) { return {a.value * c, a.logScale}; }
    friend Scaled operator/(const Scaled& a, const Scaled& b) {
        return {a.value / b.value, a.logScale - b.logScale};
    }
    friend Scaled operator+(const Scaled& a, const Scaled& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.logScale >= b.logScale)
            return {a.value + b.value * std::exp(b.logScale - a.logScale), a.logScale};
        return {b.value + a.value * std::exp(a.logScale - b.logScale), b.logScale};
    }
    friend Scaled operator-(const Scaled& a, const Scaled& b) {
        return a + Scaled{-b.value, b.logScale};
    }
    Scaled operator-() const { return {-value, logScale}; }
};

/// Neumaier compensated accumulator for complex sums.
struct KahanSum {
    double sr = 0.0, si = 0.0, cr = 0.0, ci = 0.0;
    void add(Cplx z) {
        addPart(sr, cr, z.real());
        addPart(si, ci, z.imag());
    }
    Cplx total() const { return {sr + cr, si + ci}; }
private:
    static void addPart(double& s, double& c, double x) {
        double t = s + x;
        if (std::abs(s) >= std::abs(x)) c += (s - t) + x;
        else c += (x - t) + s;
        s = t;
    }
};

/// Gauss-Legendre rule on [-1,1]; nodes/weights computed once per order.
struct GaussLegendre {
    std::vector<double> x, w;
    explicit GaussLegendre(int n);
};
const GaussLegendre& gl_rule(int n);

/// Adaptive complex-valued integration of f on [a,b] by GL(16) bisection.
/// `tol` is an absolute tolerance for the whole interval.
Cplx adaptive_integrate(const std::function<Cplx(double)>& f, double a, double b,
                        double tol, int maxDepth = 38, long long* evals = nullptr);

/// tanh-sinh rule on (a,b); robust for integrable endpoint singularities.
Cplx tanh_sinh_integrate(const std::function<Cplx(double)>& f, double a, double b,
                         double tol);

/// Fornberg finite-difference weights for derivative order m on given nodes,
/// evaluated at x0.  Returns weights for orders 0..m (rows).
std::vector<std::vector<double>> fd_weights(double x0, const std::vector<double>& grid, int m);

/// Uniform double in [lo,hi).
inline double urand(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}
inline long long irand(std::mt19937_64& rng, long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

} // namespace hk

#endif
