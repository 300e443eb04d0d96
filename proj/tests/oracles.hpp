#pragma once

// Brute-force reference computations used by the tests. Everything here
// works directly from integer Chern roots and shares no code path with the
// library's Newton / Stirling route.

#include "bundle_census/exact.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace bundle_census::oracle {

/// C(d, r) for any integer d, as prod_{i<r} (d - i) / r! (exact division).
inline BigInt choose(std::int64_t d, std::int64_t r) {
    BigInt num = 1;
    BigInt den = 1;
    for (std::int64_t i = 0; i < r; ++i) {
        num *= BigInt(d - i);
        den *= BigInt(i + 1);
    }
    return num / den;
}

inline BigInt sum_choose(const std::vector<std::int64_t>& roots, std::int64_t r) {
    BigInt total = 0;
    for (auto d : roots) total += choose(d, r);
    return total;
}

inline BigInt power_sum(const std::vector<std::int64_t>& roots, unsigned k) {
    BigInt total = 0;
    for (auto d : roots) {
        BigInt term = 1;
        for (unsigned i = 0; i < k; ++i) term *= d;
        total += term;
    }
    return total;
}

/// e_1..e_n by summing products over all subsets.
inline std::vector<BigInt> elementary_by_subsets(const std::vector<std::int64_t>& roots) {
    const std::size_t n = roots.size();
    std::vector<BigInt> e(n, BigInt(0));
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        BigInt product = 1;
        std::size_t size = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if ((mask >> i) & 1U) {
                product *= roots[i];
                ++size;
            }
        }
        e[size - 1] += product;
    }
    return e;
}

/// Coefficients of x (x-1) ... (x-r+1), lowest degree first.
inline std::vector<BigInt> falling_factorial_coefficients(unsigned r) {
    std::vector<BigInt> poly{BigInt(1)};
    for (unsigned i = 0; i < r; ++i) {
        std::vector<BigInt> next(poly.size() + 1, BigInt(0));
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] += poly[k];
            next[k] -= BigInt(i) * poly[k];
        }
        poly = std::move(next);
    }
    return poly;
}

/// Rank-2 existence on CP^3 in closed form: B_2 = C(c1,2) - c2 is always
/// integral and B_3 = C(c1,3) + c2 (2 - c1) / 2, so S_3 holds iff c1 c2 is even.
inline bool rank_two_on_cp3_exists(std::int64_t c1, std::int64_t c2) { return (c1 * c2) % 2 == 0; }

inline std::vector<std::int64_t> random_roots(std::mt19937_64& rng, std::size_t n, std::int64_t bound) {
    std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
    std::vector<std::int64_t> roots(n);
    for (auto& d : roots) d = dist(rng);
    return roots;
}

inline std::vector<BigInt> to_big(const std::vector<std::int64_t>& values) {
    return {values.begin(), values.end()};
}

} // namespace bundle_census::oracle
