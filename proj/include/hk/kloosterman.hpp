#ifndef HK_KLOOSTERMAN_HPP
#define HK_KLOOSTERMAN_HPP

#include "hk/numeric.hpp"

#include <array>
#include <optional>
#include <vector>
#include <cstdint>

namespace hk::sums {

using IndexPair = std::array<long long, 2>;
using ModuliPair = std::array<long long, 2>;

/// Exact rational phase x/den, kept modulo 1.
struct Phase {
    long long num;
    long long den;
};

struct SumResult {
    Cplx value{0.0, 0.0};
    long long termCount = 0;
    std::optional<std::vector<Phase>> phases;
};

long long mod_norm(long long a, long long m);
long long mod_inverse(long long a, long long m);  // m >= 1, gcd(a,m) = 1
long long gcd_ll(long long a, long long b);

/// Kl_2(m,n,c) = sum_{xy == 1 (c)} e((m x + n y)/c).
SumResult kl2(long long m, long long n, long long c, bool keepPhases = false);

/// Kl_3(n1,m1,m2,c) = sum_{xyz == 1 (c)} e((n1 x + m1 y + m2 z)/c).
SumResult kl3(long long n1, long long m1, long long m2, long long c,
              bool keepPhases = false);

/// w5-cell Kloosterman sum; zero unless m1 c2 = n2 c1^2 and c1 | c2.
/// Negative moduli use |c_i| residue systems with signed denominators.
SumResult s_w5(IndexPair m, IndexPair n, ModuliPair c, bool keepPhases = false);

/// w4 sum = w5 sum under the duality swap of indices and moduli.
SumResult s_w4(IndexPair m, IndexPair n, ModuliPair c, bool keepPhases = false);

/// Long-element Kloosterman sum over Plucker pairs (B1,C1) mod c1, (B2,C2) mod c2
/// with c1 C2 + B1 B2 + c2 C1 == 0 (mod c1 c2).  `ySelector` re-randomizes the
/// auxiliary (Y_i,Z_i) choices; the value must not depend on it.
SumResult s_wl(IndexPair m, IndexPair n, ModuliPair c, std::uint64_t ySelector = 0);

} // namespace hk::sums

#endif
