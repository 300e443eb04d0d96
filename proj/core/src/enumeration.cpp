#include "bundle_census/enumeration.hpp"

#include "bundle_census/symfun.hpp"

#include <string>

namespace bundle_census {

namespace {

void require_corank_one(const ChernVector& v, const char* what) {
    if (v.dim() != v.rank() + 1) {
        throw DomainError(std::string(what) + ": expected dim == rank + 1, got rank " + std::to_string(v.rank()) +
                          " on CP^" + std::to_string(v.dim()));
    }
}

} // namespace

std::vector<BinomialSumEntry> SchwarzenbergerReport::failures() const {
    std::vector<BinomialSumEntry> out;
    for (const auto& entry : values) {
        if (!entry.integral) out.push_back(entry);
    }
    return out;
}

std::string_view to_string(Regime regime) {
    switch (regime) {
    case Regime::line_bundle: return "line_bundle";
    case Regime::stable_range: return "stable_range";
    case Regime::corank_one: return "corank_one";
    case Regime::unsupported: return "unsupported";
    }
    return "unsupported";
}

std::optional<Regime> parse_regime(std::string_view text) {
    for (Regime r : {Regime::line_bundle, Regime::stable_range, Regime::corank_one, Regime::unsupported}) {
        if (to_string(r) == text) return r;
    }
    return std::nullopt;
}

SchwarzenbergerReport check_schwarzenberger(std::span<const BigInt> classes, std::size_t n_condition) {
    if (n_condition == 0) throw DomainError("check_schwarzenberger: N must be at least 1");
    if (classes.size() != n_condition) {
        throw DomainError("check_schwarzenberger: S_" + std::to_string(n_condition) + " needs exactly " +
                          std::to_string(n_condition) + " classes, got " + std::to_string(classes.size()));
    }
    SchwarzenbergerReport report;
    report.n_condition = n_condition;
    if (n_condition < 2) return report;

    auto sums = binomial_sums(classes, n_condition);
    for (std::size_t r = 2; r <= n_condition; ++r) {
        BinomialSumEntry entry{r, std::move(sums[r - 1]), false};
        entry.integral = entry.value.is_integer();
        report.satisfied = report.satisfied && entry.integral;
        report.values.push_back(std::move(entry));
    }
    return report;
}

SchwarzenbergerReport exists_rank_n_on_cp_n_plus_1(const ChernVector& v) {
    require_corank_one(v, "exists_rank_n_on_cp_n_plus_1");
    const std::vector<BigInt> padded = v.padded(v.rank() + 1);
    return check_schwarzenberger(padded, v.rank() + 1);
}

BundleCount count_corank_one(const ChernVector& v) {
    require_corank_one(v, "count_corank_one");
    BundleCount result;
    result.regime = Regime::corank_one;
    result.report = exists_rank_n_on_cp_n_plus_1(v);
    if (!result.report->satisfied) {
        result.count = 0;
        return result;
    }
    const bool rank_even = v.rank() % 2 == 0;
    const bool c1_even = v.c(1) % 2 == 0;
    if (rank_even && c1_even) {
        result.count = 2;
        result.one_class_extends = true;
    } else {
        result.count = 1;
    }
    return result;
}

BundleCount count_bundles(const ChernVector& v) {
    if (v.rank() == 1) {
        BundleCount result;
        result.regime = Regime::line_bundle;
        result.count = 1;
        return result;
    }
    if (v.rank() >= v.dim()) {
        // Rank >= dim: bundles are determined by their Chern classes, and
        // exist iff the m = dim nonzero classes satisfy S_m. Classes of
        // degree > m vanish, and padding with zero roots does not change
        // any B_r with r <= m.
        BundleCount result;
        result.regime = Regime::stable_range;
        result.report = check_schwarzenberger(v.classes(), v.dim());
        result.count = result.report->satisfied ? 1U : 0U;
        return result;
    }
    if (v.dim() == v.rank() + 1) return count_corank_one(v);
    return BundleCount{};
}

bool reduce_stable(std::span<const BigInt> classes, std::size_t rank, std::size_t dim) {
    if (dim != rank + 1) throw DomainError("reduce_stable: expected dim == rank + 1");
    if (classes.size() != dim) {
        throw DomainError("reduce_stable: expected " + std::to_string(dim) + " classes, got " +
                          std::to_string(classes.size()));
    }
    return classes[rank] == 0;
}

} // namespace bundle_census
