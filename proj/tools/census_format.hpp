#pragma once

// Serialization of reports and sweep records: JSON, CSV and plain tables.
// Exact rationals always travel as "p/q" strings; integers are bare JSON
// numbers only inside the 53-bit safe range.

#include "bundle_census/enumeration.hpp"
#include "bundle_census/numeric_oracle.hpp"
#include "bundle_census/sweep.hpp"

#include <json.hpp>

#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace bundle_census::format {

nlohmann::json integer_to_json(const BigInt& value);
BigInt integer_from_json(const nlohmann::json& j);

nlohmann::json rational_to_json(const ExactRational& value);
ExactRational rational_from_json(const nlohmann::json& j);

nlohmann::json record_to_json(const ResultRecord& record);
/// Inverse of record_to_json. Throws std::invalid_argument on schema errors.
ResultRecord record_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(std::span<const BigInt> classes, const SchwarzenbergerReport& report);
nlohmann::json count_to_json(const ChernVector& v, const BundleCount& count);

/// "(c_1,c_2,...)".
std::string tuple_string(std::span<const BigInt> classes);

void write_report_table(std::ostream& out, std::span<const BigInt> classes, const SchwarzenbergerReport& report);
void write_count_table(std::ostream& out, const ChernVector& v, const BundleCount& count);

void write_sweep(std::ostream& out, const SweepSpec& spec, const std::vector<ResultRecord>& records);

/// One CSV row: classes;..., count, regime, r=B_r;..., extension flag.
std::string csv_row(const ResultRecord& record);
inline constexpr const char* csv_header = "classes,count,regime,failing_r,extension";

struct DiagnosticRow {
    std::size_t r = 0;
    ExactRational exact;
    NumericBinomialSum numeric;
    Agreement agreement;
};

void write_diagnostics(std::ostream& out, std::span<const BigInt> classes, const NumericRoots& roots,
                       const std::vector<DiagnosticRow>& rows);

} // namespace bundle_census::format
