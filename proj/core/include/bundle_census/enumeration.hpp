#pragma once

// Existence and counting of complex topological bundles on CP^m with
// prescribed Chern classes.

#include "bundle_census/chern_vector.hpp"
#include "bundle_census/exact.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace bundle_census {

struct BinomialSumEntry {
    std::size_t r = 0;
    ExactRational value;
    bool integral = false;

    friend bool operator==(const BinomialSumEntry&, const BinomialSumEntry&) = default;
};

/// Outcome of testing the Schwarzenberger condition S_N: for every
/// 2 <= r <= N the sum of C(delta_j, r) over the N Chern roots is an integer.
struct SchwarzenbergerReport {
    std::size_t n_condition = 0;
    std::vector<BinomialSumEntry> values; // exactly r = 2 .. N, in order
    bool satisfied = true;

    /// Entries whose value is not an integer.
    std::vector<BinomialSumEntry> failures() const;

    friend bool operator==(const SchwarzenbergerReport&, const SchwarzenbergerReport&) = default;
};

enum class Regime {
    line_bundle,  // rank 1
    stable_range, // rank >= dim
    corank_one,   // dim == rank + 1
    unsupported,
};

std::string_view to_string(Regime regime);
std::optional<Regime> parse_regime(std::string_view text);

struct BundleCount {
    /// Number of isomorphism classes; empty when the regime is unsupported.
    std::optional<unsigned> count;
    Regime regime = Regime::unsupported;
    /// Set only for count 2 in the corank-one regime: exactly one of the two
    /// classes extends to CP^{n+2}.
    bool one_class_extends = false;
    std::optional<SchwarzenbergerReport> report;
};

/// Evaluates S_N on `classes`, which must have exactly N >= 1 entries. Callers
/// with fewer classes pad with zeros themselves.
SchwarzenbergerReport check_schwarzenberger(std::span<const BigInt> classes, std::size_t n_condition);

/// Existence of a rank-n bundle on CP^{n+1}: S_{n+1} on (c_1, ..., c_n, 0).
/// Requires v.dim() == v.rank() + 1.
SchwarzenbergerReport exists_rank_n_on_cp_n_plus_1(const ChernVector& v);

/// Dispatches on (rank, dim): line_bundle, stable_range, corank_one,
/// unsupported, in that order.
BundleCount count_bundles(const ChernVector& v);

/// The corank-one count applied directly, bypassing regime dispatch. Requires
/// v.dim() == v.rank() + 1.
BundleCount count_corank_one(const ChernVector& v);

/// A stable class on CP^{n+1} given by `classes` = (c_1, ..., c_{n+1}) has a
/// rank-n representative iff c_{n+1} == 0. Requires dim == rank + 1 and
/// classes.size() == dim.
bool reduce_stable(std::span<const BigInt> classes, std::size_t rank, std::size_t dim);

} // namespace bundle_census
