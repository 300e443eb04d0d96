#pragma once

// Exhaustive evaluation of count_bundles over a box of Chern-class tuples.

#include "bundle_census/enumeration.hpp"
#include "bundle_census/exact.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bundle_census {

enum class OutputFormat { json, csv, table };

struct ClassBounds {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
};

struct SweepSpec {
    std::size_t rank = 1;
    std::size_t dim = 1;
    /// One interval per stored class, i.e. min(rank, dim) of them.
    std::vector<ClassBounds> bounds;
    OutputFormat format = OutputFormat::table;

    /// Throws DomainError when rank/dim are zero, the interval count is wrong
    /// or some lo > hi.
    void validate() const;
    BigInt tuple_count() const;
};

struct ResultRecord {
    std::vector<BigInt> classes;
    std::optional<unsigned> count;
    Regime regime = Regime::unsupported;
    bool one_class_extends = false;
    /// (r, B_r) for every r with B_r not an integer.
    std::vector<std::pair<std::size_t, ExactRational>> failing_r;

    friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

ResultRecord make_record(std::vector<BigInt> classes, const BundleCount& count);

/// Evaluates one tuple of a (rank, dim) box.
ResultRecord evaluate_tuple(std::size_t rank, std::size_t dim, std::vector<BigInt> classes);

/// All tuples of the box in lexicographic order (c_1 most significant). The
/// output is identical for every `jobs` >= 1.
std::vector<ResultRecord> run_sweep(const SweepSpec& spec, unsigned jobs = 1);

/// "0", "1", "2", "unknown" -> number of records.
using SweepSummary = std::map<std::string, std::size_t>;
SweepSummary summarize(const std::vector<ResultRecord>& records);

std::string count_label(const std::optional<unsigned>& count);

} // namespace bundle_census
