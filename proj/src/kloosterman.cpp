#include "hk/kloosterman.hpp"
#include "hk/errors.hpp"

#include <numeric>
#include <random>

namespace hk::sums {

long long gcd_ll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long long mod_norm(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

namespace {

// ax + by = g with g = gcd(a,b)
long long ext_gcd(long long a, long long b, long long& x, long long& y) {
    if (b == 0) {
        x = (a >= 0) ? 1 : -1;
        y = 0;
        return a >= 0 ? a : -a;
    }
    long long x1, y1;
    long long g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

using i128 = __int128;

long long mod_norm128(i128 a, long long m) {
    i128 r = a % m;
    if (r < 0) r += m;
    return static_cast<long long>(r);
}

/// Accumulates exact phases num/den (mod 1) grouped by numerator.
struct PhaseAccumulator {
    long long den;
    std::vector<long long> counts;
    bool keep;
    std::vector<Phase> kept;
    long long n = 0;

    PhaseAccumulator(long long den_, bool keep_)
        : den(den_), counts(static_cast<size_t>(den_), 0), keep(keep_) {}

    void add(i128 num) {
        long long r = mod_norm128(num, den);
        ++counts[static_cast<size_t>(r)];
        ++n;
        if (keep) kept.push_back({r, den});
    }

    SumResult finish() const {
        KahanSum s;
        for (long long r = 0; r < den; ++r)
            if (counts[static_cast<size_t>(r)] != 0)
                s.add(e_of(static_cast<double>(r) / static_cast<double>(den)) *
                      static_cast<double>(counts[static_cast<size_t>(r)]));
        SumResult out;
        out.value = s.total();
        out.termCount = n;
        if (keep) out.phases = kept;
        return out;
    }
};

} // namespace

long long mod_inverse(long long a, long long m) {
    a = mod_norm(a, m);
    long long x, y;
    long long g = ext_gcd(a, m, x, y);
    if (g != 1) throw InvariantError("mod_inverse: not a unit");
    return mod_norm(x, m);
}

SumResult kl2(long long m, long long n, long long c, bool keepPhases) {
    if (c < 1) throw InvariantError("kl2: c must be >= 1");
    PhaseAccumulator acc(c, keepPhases);
    for (long long x = 0; x < c; ++x) {
        if (gcd_ll(x, c) != 1 && c != 1) continue;
        long long y = (c == 1) ? 0 : mod_inverse(x, c);
        acc.add(i128(m) * x + i128(n) * y);
    }
    return acc.finish();
}

SumResult kl3(long long n1, long long m1, long long m2, long long c, bool keepPhases) {
    if (c < 1) throw InvariantError("kl3: c must be >= 1");
    PhaseAccumulator acc(c, keepPhases);
    if (c == 1) {
        acc.add(0);
        return acc.finish();
    }
    std::vector<long long> inv(static_cast<size_t>(c), -1);
    for (long long x = 1; x < c; ++x)
        if (gcd_ll(x, c) == 1) inv[static_cast<size_t>(x)] = mod_inverse(x, c);
    for (long long x = 1; x < c; ++x) {
        if (inv[static_cast<size_t>(x)] < 0) continue;
        for (long long y = 1; y < c; ++y) {
            if (inv[static_cast<size_t>(y)] < 0) continue;
            long long z = mod_norm128(i128(inv[static_cast<size_t>(x)]) *
                                          inv[static_cast<size_t>(y)],
                                      c);
            acc.add(i128(n1) * x + i128(m1) * y + i128(m2) * z);
        }
    }
    return acc.finish();
}

SumResult s_w5(IndexPair m, IndexPair n, ModuliPair c, bool keepPhases) {
    long long c1 = c[0], c2 = c[1];
    if (c1 == 0 || c2 == 0) throw InvariantError("s_w5: c1 c2 = 0");
    long long a1 = std::abs(c1), a2 = std::abs(c2);
    // compatibility: m1 c2 = n2 c1^2 and c1 | c2
    if (i128(m[0]) * c2 != i128(n[1]) * c1 * c1 || a2 % a1 != 0) return SumResult{};
    long long q = a2 / a1;          // |c2/c1|
    long long qs = c2 / c1;         // signed c2/c1
    long long L = a1 * q;           // lcm(|c1|, |c2/c1|) divides this
    // signed denominators enter through the sign of the numerator weights
    long long w1 = (L / a1) * (c1 > 0 ? 1 : -1);   // L/c1
    long long w2 = (L / q) * (qs > 0 ? 1 : -1);    // L/(c2/c1)
    PhaseAccumulator acc(L, keepPhases);
    for (long long x1 = 0; x1 < a1; ++x1) {
        if (a1 != 1 && gcd_ll(x1, a1) != 1) continue;
        long long xb1 = (a1 == 1) ? 0 : mod_inverse(x1, a1);
        for (long long x2 = 0; x2 < a2; ++x2) {
            if (q != 1 && gcd_ll(x2, q) != 1) continue;
            long long xb2 = (q == 1) ? 0 : mod_inverse(mod_norm(x2, q), q);
            i128 num = i128(m[0]) * xb1 % L * x2 % L * w1 + i128(m[1]) * xb2 * w2 +
                       i128(n[0]) * x1 * w1;
            acc.add(num);
        }
    }
    return acc.finish();
}

SumResult s_w4(IndexPair m, IndexPair n, ModuliPair c, bool keepPhases) {
    return s_w5({m[1], m[0]}, {n[1], n[0]}, {c[1], c[0]}, keepPhases);
}

SumResult s_wl(IndexPair m, IndexPair n, ModuliPair c, std::uint64_t ySelector) {
    long long c1 = std::abs(c[0]), c2 = std::abs(c[1]);
    if (c1 == 0 || c2 == 0) throw InvariantError("s_wl: c1 c2 = 0");
    std::mt19937_64 rng(ySelector);
    long long L = c1 * c2;
    PhaseAccumulator acc(L, false);

    // solve Y*B + Z*C == 1 (mod cc); requires gcd(B,C,cc) = 1
    auto pick_yz = [&](long long B, long long C, long long cc, long long& Y, long long& Z) {
        long long x, y;
        long long g = ext_gcd(B, C, x, y);
        if (g == 0) { // B = C = 0 only when cc = 1
            Y = 0; Z = 0;
            return;
        }
        long long w = (cc == 1) ? 0 : mod_inverse(mod_norm(g, cc), cc);
        Y = mod_norm128(i128(x) * w, cc);
        Z = mod_norm128(i128(y) * w, cc);
        if (ySelector != 0) {
            // shift within the solution coset
            long long t = static_cast<long long>(rng() % 97) - 48;
            Y = mod_norm128(Y + i128(t) * C, cc);
            Z = mod_norm128(Z - i128(t) * B, cc);
        }
    };

    for (long long B1 = 0; B1 < c1; ++B1)
        for (long long C1 = 0; C1 < c1; ++C1) {
            if (gcd_ll(gcd_ll(B1, C1), c1) != 1) continue;
            long long Y1, Z1;
            pick_yz(B1, C1, c1, Y1, Z1);
            for (long long B2 = 0; B2 < c2; ++B2)
                for (long long C2 = 0; C2 < c2; ++C2) {
                    if (gcd_ll(gcd_ll(B2, C2), c2) != 1) continue;
                    if (mod_norm128(i128(c1) * C2 + i128(B1) * B2 + i128(c2) * C1, L) != 0)
                        continue;
                    long long Y2, Z2;
                    pick_yz(B2, C2, c2, Y2, Z2);
                    // (m1 B1 + n1 (Y1 c2 - Z1 B2))/c1 + (m2 B2 + n2 (Y2 c1 - Z2 B1))/c2
                    i128 num = (i128(m[0]) * B1 + i128(n[0]) * (i128(Y1) * c2 - i128(Z1) * B2)) * c2 +
                               (i128(m[1]) * B2 + i128(n[1]) * (i128(Y2) * c1 - i128(Z2) * B1)) * c1;
                    acc.add(num);
                }
        }
    return acc.finish();
}

} // namespace hk::sums
