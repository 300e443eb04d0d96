#include "census_format.hpp"

#include <algorithm>
#include <cstdio>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace bundle_census::format {

using nlohmann::json;

json integer_to_json(const BigInt& value) {
    if (fits_in_safe_integer(value)) return value.convert_to<std::int64_t>();
    return value.str();
}

BigInt integer_from_json(const json& j) {
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) return parse_big_int(j.get<std::string>());
    throw std::invalid_argument("expected an integer, got " + j.dump());
}

json rational_to_json(const ExactRational& value) {
    if (value.is_integer()) return integer_to_json(value.numerator());
    return value.to_string();
}

ExactRational rational_from_json(const json& j) {
    if (j.is_string()) return ExactRational::parse(j.get<std::string>());
    return ExactRational(integer_from_json(j));
}

namespace {

json classes_to_json(std::span<const BigInt> classes) {
    json out = json::array();
    for (const auto& c : classes) out.push_back(integer_to_json(c));
    return out;
}

json count_value(const std::optional<unsigned>& count) {
    if (count) return *count;
    return "unknown";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string general(double value, int precision) {
    std::ostringstream os;
    os << std::setprecision(precision) << value;
    return os.str();
}

std::string failing_list(const ResultRecord& record, char sep) {
    std::string out;
    for (const auto& [r, value] : record.failing_r) {
        if (!out.empty()) out += sep;
        out += std::to_string(r) + "=" + value.to_string();
    }
    return out;
}

std::string extension_note(std::size_t rank) {
    return "exactly one of the two classes extends to CP^" + std::to_string(rank + 2);
}

} // namespace

json record_to_json(const ResultRecord& record) {
    json failing = json::array();
    for (const auto& [r, value] : record.failing_r) failing.push_back({{"r", r}, {"B_r", value.to_string()}});
    return {{"classes", classes_to_json(record.classes)},
            {"count", count_value(record.count)},
            {"regime", std::string(to_string(record.regime))},
            {"extension", record.one_class_extends},
            {"failing_r", std::move(failing)}};
}

ResultRecord record_from_json(const json& j) {
    try {
        ResultRecord record;
        for (const auto& c : j.at("classes")) record.classes.push_back(integer_from_json(c));
        const json& count = j.at("count");
        if (count.is_number_unsigned()) {
            record.count = count.get<unsigned>();
        } else if (count != "unknown") {
            throw std::invalid_argument("bad count " + count.dump());
        }
        const auto regime = parse_regime(j.at("regime").get<std::string>());
        if (!regime) throw std::invalid_argument("bad regime " + j.at("regime").dump());
        record.regime = *regime;
        record.one_class_extends = j.at("extension").get<bool>();
        for (const auto& entry : j.at("failing_r")) {
            record.failing_r.emplace_back(entry.at("r").get<std::size_t>(), rational_from_json(entry.at("B_r")));
        }
        return record;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed record: ") + e.what());
    }
}

json report_to_json(std::span<const BigInt> classes, const SchwarzenbergerReport& report) {
    json values = json::array();
    for (const auto& entry : report.values) {
        values.push_back({{"r", entry.r}, {"B_r", rational_to_json(entry.value)}, {"integral", entry.integral}});
    }
    return {{"N", report.n_condition},
            {"classes", classes_to_json(classes)},
            {"values", std::move(values)},
            {"satisfied", report.satisfied}};
}

json count_to_json(const ChernVector& v, const BundleCount& count) {
    json out = {{"rank", v.rank()},
                {"dim", v.dim()},
                {"classes", classes_to_json(v.classes())},
                {"count", count_value(count.count)},
                {"regime", std::string(to_string(count.regime))},
                {"extension", count.one_class_extends}};
    if (count.one_class_extends) out["note"] = extension_note(v.rank());
    if (count.report) out["report"] = report_to_json(v.padded(count.report->n_condition), *count.report);
    return out;
}

std::string tuple_string(std::span<const BigInt> classes) {
    std::string out = "(";
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (i > 0) out += ",";
        out += classes[i].str();
    }
    return out + ")";
}

void write_report_table(std::ostream& out, std::span<const BigInt> classes, const SchwarzenbergerReport& report) {
    out << "S_" << report.n_condition << " on " << tuple_string(classes) << "\n";
    std::size_t width = 3;
    for (const auto& entry : report.values) width = std::max(width, entry.value.to_string().size());
    out << pad("r", 4) << pad("B_r", width + 2) << "integral\n";
    for (const auto& entry : report.values) {
        out << pad(std::to_string(entry.r), 4) << pad(entry.value.to_string(), width + 2) << yes_no(entry.integral)
            << "\n";
    }
    out << (report.satisfied ? "satisfied" : "not satisfied") << "\n";
}

void write_count_table(std::ostream& out, const ChernVector& v, const BundleCount& count) {
    out << "rank " << v.rank() << " on CP^" << v.dim() << ", classes " << tuple_string(v.classes()) << "\n";
    out << "regime: " << to_string(count.regime) << "\n";
    out << "count: " << count_label(count.count) << "\n";
    if (count.report) {
        out << "S_" << count.report->n_condition << ": " << (count.report->satisfied ? "satisfied" : "not satisfied");
        for (const auto& entry : count.report->failures()) out << " [B_" << entry.r << " = " << entry.value.to_string() << "]";
        out << "\n";
    }
    if (count.one_class_extends) out << "note: " << extension_note(v.rank()) << "\n";
}

std::string csv_row(const ResultRecord& record) {
    std::string classes;
    for (std::size_t i = 0; i < record.classes.size(); ++i) {
        if (i > 0) classes += ';';
        classes += record.classes[i].str();
    }
    return classes + "," + count_label(record.count) + "," + std::string(to_string(record.regime)) + "," +
           failing_list(record, ';') + "," + (record.one_class_extends ? "1" : "0");
}

void write_sweep(std::ostream& out, const SweepSpec& spec, const std::vector<ResultRecord>& records) {
    const SweepSummary summary = summarize(records);
    switch (spec.format) {
    case OutputFormat::json: {
        json bounds = json::array();
        for (const auto& b : spec.bounds) bounds.push_back({b.lo, b.hi});
        out << "{\"rank\":" << spec.rank << ",\"dim\":" << spec.dim << ",\"bounds\":" << bounds.dump()
            << ",\"records\":[";
        for (std::size_t i = 0; i < records.size(); ++i) {
            out << (i == 0 ? "\n" : ",\n") << record_to_json(records[i]).dump();
        }
        json totals = {{"total", records.size()}};
        for (const auto& [label, n] : summary) totals[label] = n;
        out << "\n],\"summary\":" << totals.dump() << "}\n";
        break;
    }
    case OutputFormat::csv:
        out << csv_header << "\n";
        for (const auto& record : records) out << csv_row(record) << "\n";
        out << "# total=" << records.size();
        for (const auto& [label, n] : summary) out << " count_" << label << "=" << n;
        out << "\n";
        break;
    case OutputFormat::table: {
        std::size_t width = 7;
        for (const auto& record : records) width = std::max(width, tuple_string(record.classes).size());
        out << pad("classes", width + 2) << pad("count", 9) << pad("regime", 14) << pad("extends", 9) << "failing_r\n";
        for (const auto& record : records) {
            const std::string failing = failing_list(record, ' ');
            out << pad(tuple_string(record.classes), width + 2) << pad(count_label(record.count), 9)
                << pad(std::string(to_string(record.regime)), 14) << pad(yes_no(record.one_class_extends), 9)
                << (failing.empty() ? "-" : failing) << "\n";
        }
        out << "total " << records.size() << ":";
        for (const auto& [label, n] : summary) out << " count " << label << " = " << n << ";";
        out << "\n";
        break;
    }
    }
}

void write_diagnostics(std::ostream& out, std::span<const BigInt> classes, const NumericRoots& roots,
                       const std::vector<DiagnosticRow>& rows) {
    out << "classes " << tuple_string(classes) << ", " << roots.roots.size() << " roots\n";
    for (const auto& root : roots.roots) {
        out << "  delta = " << general(root.real(), 12) << (root.imag() < 0 ? " - " : " + ")
            << general(std::abs(root.imag()), 12) << "i\n";
    }
    out << "root residual " << general(roots.residual, 3) << " (threshold " << general(roots.residual_threshold, 3)
        << (roots.reliable ? ")" : ", unreliable)") << "\n";
    out << pad("r", 4) << pad("exact", 14) << pad("numeric", 22) << pad("|diff|", 12) << pad("tolerance", 12)
        << "status\n";
    for (const auto& row : rows) {
        const char* status = row.agreement.flagged ? "unreliable" : (row.agreement.agrees ? "agree" : "DISAGREE");
        out << pad(std::to_string(row.r), 4) << pad(row.exact.to_string(), 14)
            << pad(general(row.numeric.value.real(), 15), 22) << pad(general(row.agreement.difference, 3), 12)
            << pad(general(row.numeric.tolerance, 3), 12) << status << "\n";
    }
}

} // namespace bundle_census::format
