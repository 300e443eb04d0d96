#pragma once

// Total Chern classes in H^*(CP^m; Z) = Z[t] / (t^{m+1}).

#include "bundle_census/chern_vector.hpp"
#include "bundle_census/exact.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace bundle_census {

/// 1 + c_1 t + ... + c_m t^m in Z[t] / (t^{m+1}).
class ChernPolynomial {
public:
    /// The unit 1 in dimension `dim`.
    explicit ChernPolynomial(std::size_t dim);
    /// `coeffs` must have length dim + 1 with coeffs[0] == 1.
    ChernPolynomial(std::size_t dim, std::vector<BigInt> coeffs);

    std::size_t dim() const { return coeffs_.size() - 1; }
    std::span<const BigInt> coeffs() const { return coeffs_; }
    const BigInt& operator[](std::size_t degree) const { return coeffs_.at(degree); }

    friend bool operator==(const ChernPolynomial&, const ChernPolynomial&) = default;

private:
    std::vector<BigInt> coeffs_;
};

ChernPolynomial total_chern(const ChernVector& v);

/// Whitney product c(E + F) = c(E) c(F). Throws DomainError when the
/// ambient dimensions differ.
ChernPolynomial whitney_sum(const ChernPolynomial& a, const ChernPolynomial& b);

/// Chern classes of E (x) O(d):
///   c_k' = sum_{i=0}^k C(n - i, k - i) c_i d^{k - i},  c_0 = 1.
ChernVector twist_by_line(const ChernVector& v, const BigInt& d);

/// Chern classes of the dual bundle: c_i -> (-1)^i c_i.
ChernVector dual(const ChernVector& v);

/// Chern classes of O(d_1) + ... + O(d_n) on CP^dim.
ChernVector line_bundle_sum(std::size_t dim, std::span<const BigInt> degrees);

} // namespace bundle_census
