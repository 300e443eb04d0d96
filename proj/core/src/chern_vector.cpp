#include "bundle_census/chern_vector.hpp"

#include <algorithm>
#include <string>

namespace bundle_census {

ChernVector::ChernVector(std::size_t rank, std::size_t dim, std::vector<BigInt> classes)
    : rank_(rank), dim_(dim), classes_(std::move(classes)) {
    if (rank_ == 0) throw DomainError("ChernVector: rank must be at least 1");
    if (dim_ == 0) throw DomainError("ChernVector: dimension must be at least 1");
    const std::size_t stored = std::min(rank_, dim_);
    if (classes_.size() < stored || classes_.size() > rank_) {
        throw DomainError("ChernVector: rank " + std::to_string(rank_) + " on CP^" + std::to_string(dim_) +
                          " takes between " + std::to_string(stored) + " and " + std::to_string(rank_) +
                          " classes, got " + std::to_string(classes_.size()));
    }
    classes_.resize(stored);
}

const BigInt& ChernVector::c(std::size_t i) const {
    static const BigInt zero = 0;
    if (i == 0) throw DomainError("ChernVector::c: classes are indexed from 1");
    return i <= classes_.size() ? classes_[i - 1] : zero;
}

std::vector<BigInt> ChernVector::padded(std::size_t length) const {
    std::vector<BigInt> out(length, BigInt(0));
    std::copy_n(classes_.begin(), std::min(length, classes_.size()), out.begin());
    return out;
}

} // namespace bundle_census
