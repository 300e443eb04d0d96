#pragma once

#include "bundle_census/exact.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace bundle_census {

/// Chern classes (c_1, ..., c_n) of a rank-n bundle on CP^m, each class read
/// as an integer multiple of t^i for the hyperplane class t.
///
/// Only c_1 .. c_min(n,m) are stored: c_i vanishes for i > n by rank and for
/// i > m because H^{2i}(CP^m) = 0.
class ChernVector {
public:
    /// `classes` must hold between min(rank, dim) and rank entries; entries
    /// past min(rank, dim) are dropped. Throws DomainError otherwise.
    ChernVector(std::size_t rank, std::size_t dim, std::vector<BigInt> classes);

    std::size_t rank() const { return rank_; }
    std::size_t dim() const { return dim_; }
    std::span<const BigInt> classes() const { return classes_; }

    /// c_i for i >= 1, zero past the stored range.
    const BigInt& c(std::size_t i) const;

    /// Classes padded with zeros (or truncated) to exactly `length` entries.
    std::vector<BigInt> padded(std::size_t length) const;

    friend bool operator==(const ChernVector&, const ChernVector&) = default;

private:
    std::size_t rank_;
    std::size_t dim_;
    std::vector<BigInt> classes_;
};

} // namespace bundle_census
