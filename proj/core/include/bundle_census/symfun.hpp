#pragma once

// Exact conversions from Chern data (elementary symmetric functions of the
// Chern roots) to power sums and to sums of binomial coefficients of the
// roots. The roots themselves are never computed here.

#include "bundle_census/chern_vector.hpp"
#include "bundle_census/exact.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace bundle_census {

/// Power sums p_1, ..., p_R of the n Chern roots.
struct PowerSums {
    std::size_t n = 0;
    std::vector<BigInt> values; // values[k - 1] == p_k

    const BigInt& p(std::size_t k) const { return values.at(k - 1); }
};

/// Memoized triangle of signed Stirling numbers of the first kind,
///   x (x - 1) ... (x - r + 1) = sum_k s(r, k) x^k.
/// Grows on demand. Not synchronized: keep one per thread.
class StirlingTable {
public:
    const BigInt& operator()(std::size_t r, std::size_t k);

private:
    void extend_to(std::size_t r);

    std::vector<std::vector<BigInt>> rows_{{BigInt(1)}};
};

/// s(r, k). Throws DomainError for negative arguments or k > r. Backed by a
/// thread-local StirlingTable.
BigInt stirling_first(long r, long k);

/// p_1 .. p_R from e_1 .. e_n via Newton's identities; e_i = 0 for i > n.
PowerSums newton_power_sums(std::span<const BigInt> elementary, std::size_t max_degree);
PowerSums newton_power_sums(const ChernVector& c, std::size_t max_degree);

/// B_r = sum_j C(delta_j, r) = (1 / r!) sum_{k=1}^r s(r, k) p_k, where the
/// delta_j are the roots of y^n + e_1 y^{n-1} + ... + e_n. Requires r >= 1.
ExactRational binomial_sum(std::span<const BigInt> elementary, std::size_t r);
ExactRational binomial_sum(const ChernVector& c, std::size_t r);

/// B_1 .. B_R sharing one power-sum evaluation.
std::vector<ExactRational> binomial_sums(std::span<const BigInt> elementary, std::size_t max_degree);

/// e_1 .. e_n of the given values, i.e. the Chern classes of the sum of
/// line bundles O(d_1) + ... + O(d_n).
std::vector<BigInt> elementary_symmetric(std::span<const BigInt> roots);

} // namespace bundle_census
