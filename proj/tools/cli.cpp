#include "cli.hpp"

#include "bundle_census/chern_vector.hpp"
#include "bundle_census/enumeration.hpp"
#include "bundle_census/numeric_oracle.hpp"
#include "bundle_census/symfun.hpp"
#include "bundle_census/sweep.hpp"
#include "census_format.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <thread>

namespace bundle_census::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        parts.push_back(trim(s.substr(start, pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

std::vector<BigInt> parse_classes(const std::string& text) {
    if (trim(text).empty()) throw UsageError("--classes: expected comma-separated integers");
    std::vector<BigInt> classes;
    for (const auto& token : split(text, ',')) {
        try {
            classes.push_back(parse_big_int(token));
        } catch (const std::invalid_argument&) {
            throw UsageError("--classes: '" + token + "' is not an integer");
        }
    }
    return classes;
}

std::int64_t parse_int64(const std::string& token, const std::string& what) {
    std::int64_t value = 0;
    const auto* begin = token.data();
    const auto* end = token.data() + token.size();
    if (!token.empty() && token.front() == '+') ++begin;
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || begin == end) throw UsageError(what + ": '" + token + "' is not an integer");
    return value;
}

std::vector<ClassBounds> parse_bounds(const std::string& text, std::size_t expected) {
    std::vector<ClassBounds> bounds;
    for (const auto& interval : split(text, ',')) {
        const auto colon = interval.find(':', interval.empty() ? 0 : 1);
        if (colon == std::string::npos) throw UsageError("--bounds: expected lo:hi, got '" + interval + "'");
        ClassBounds b{parse_int64(trim(interval.substr(0, colon)), "--bounds"),
                      parse_int64(trim(interval.substr(colon + 1)), "--bounds")};
        if (b.lo > b.hi) throw UsageError("--bounds: empty interval '" + interval + "'");
        bounds.push_back(b);
    }
    if (bounds.size() == 1 && expected > 1) bounds.resize(expected, bounds.front());
    if (bounds.size() != expected) {
        throw UsageError("--bounds: expected " + std::to_string(expected) + " intervals, got " +
                         std::to_string(bounds.size()));
    }
    return bounds;
}

OutputFormat parse_format(const std::string& text) {
    if (text == "json") return OutputFormat::json;
    if (text == "csv") return OutputFormat::csv;
    if (text == "table") return OutputFormat::table;
    throw UsageError("--format: expected json, csv or table, got '" + text + "'");
}

std::uint64_t tuple_cap(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv(kMaxTuplesEnv); env != nullptr && *env != '\0') {
        const std::string text = trim(env);
        std::uint64_t value = 0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc() || ptr != text.data() + text.size()) {
            throw UsageError(std::string(kMaxTuplesEnv) + ": '" + text + "' is not a non-negative integer");
        }
        return value;
    }
    return kDefaultMaxTuples;
}

std::vector<BigInt> classes_for_condition(const std::string& text, const std::optional<std::size_t>& n_condition) {
    auto classes = parse_classes(text);
    if (n_condition && *n_condition != classes.size()) {
        throw UsageError("S_" + std::to_string(*n_condition) + " takes exactly " + std::to_string(*n_condition) +
                         " classes, got " + std::to_string(classes.size()) + "; pad with zeros explicitly");
    }
    return classes;
}

struct Options {
    std::string classes;
    std::optional<std::size_t> n_condition;
    std::size_t rank = 0;
    std::size_t dim = 0;
    std::string bounds;
    std::string format;
    std::optional<std::uint64_t> max_tuples;
    unsigned jobs = std::max(1U, std::thread::hardware_concurrency());
};

int cmd_check(const Options& opt, std::ostream& out) {
    const auto classes = classes_for_condition(opt.classes, opt.n_condition);
    const auto report = check_schwarzenberger(classes, classes.size());
    if (parse_format(opt.format.empty() ? "table" : opt.format) == OutputFormat::json) {
        out << format::report_to_json(classes, report).dump(2) << "\n";
    } else {
        format::write_report_table(out, classes, report);
    }
    return report.satisfied ? kExitOk : kExitNegative;
}

int cmd_count(const Options& opt, std::ostream& out) {
    const ChernVector v(opt.rank, opt.dim, parse_classes(opt.classes));
    const BundleCount count = count_bundles(v);
    if (parse_format(opt.format.empty() ? "table" : opt.format) == OutputFormat::json) {
        out << format::count_to_json(v, count).dump(2) << "\n";
    } else {
        format::write_count_table(out, v, count);
    }
    return kExitOk;
}

int cmd_sweep(const Options& opt, std::ostream& out, std::ostream& err) {
    if (opt.rank == 0 || opt.dim == 0) throw UsageError("--rank and --dim must be at least 1");
    SweepSpec spec;
    spec.rank = opt.rank;
    spec.dim = opt.dim;
    spec.bounds = parse_bounds(opt.bounds, std::min(opt.rank, opt.dim));
    spec.format = parse_format(opt.format.empty() ? "table" : opt.format);
    spec.validate();

    const BigInt total = spec.tuple_count();
    const std::uint64_t cap = tuple_cap(opt.max_tuples);
    err << "sweep: " << total << " tuples (rank " << spec.rank << " on CP^" << spec.dim << ")\n";
    if (total > BigInt(cap)) {
        err << "sweep: refusing " << total << " tuples above the cap of " << cap << "; raise it with --max-tuples or "
            << kMaxTuplesEnv << "\n";
        return kExitUsage;
    }
    const auto records = run_sweep(spec, std::max(1U, opt.jobs));
    format::write_sweep(out, spec, records);
    return kExitOk;
}

int cmd_diagnose(const Options& opt, std::ostream& out) {
    const auto classes = classes_for_condition(opt.classes, opt.n_condition);
    const NumericRoots roots = find_roots(classes);
    const auto exact = binomial_sums(classes, classes.size());
    std::vector<format::DiagnosticRow> rows;
    bool all_agree = true;
    for (std::size_t r = 1; r <= classes.size(); ++r) {
        format::DiagnosticRow row;
        row.r = r;
        row.exact = exact[r - 1];
        row.numeric = binomial_sum_numeric(roots, r);
        row.agreement = compare_with_exact(row.exact, row.numeric);
        all_agree = all_agree && row.agreement.agrees;
        rows.push_back(std::move(row));
    }
    format::write_diagnostics(out, classes, roots, rows);
    return all_agree ? kExitOk : kExitNegative;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Existence and counts of complex vector bundles on CP^m with prescribed Chern classes",
                 "bundle_census"};
    app.require_subcommand(1);
    Options opt;

    auto* check = app.add_subcommand("check", "Test the Schwarzenberger condition S_N on N classes");
    check->add_option("--classes", opt.classes, "c_1,...,c_N")->required();
    check->add_option("--N", opt.n_condition, "Condition index; must equal the number of classes");
    check->add_option("--format", opt.format, "table or json");

    auto* count = app.add_subcommand("count", "Count rank-n bundles on CP^m with the given Chern classes");
    count->add_option("--rank", opt.rank, "Rank n")->required();
    count->add_option("--dim", opt.dim, "Ambient dimension m")->required();
    count->add_option("--classes", opt.classes, "c_1,...")->required();
    count->add_option("--format", opt.format, "table or json");

    auto* sweep = app.add_subcommand("sweep", "Tabulate counts over a box of class tuples");
    sweep->add_option("--rank", opt.rank, "Rank n")->required();
    sweep->add_option("--dim", opt.dim, "Ambient dimension m")->required();
    sweep->add_option("--bounds", opt.bounds, "lo:hi per class, comma separated (one interval applies to all)")
        ->required();
    sweep->add_option("--format", opt.format, "json, csv or table");
    sweep->add_option("--max-tuples", opt.max_tuples, "Refuse boxes larger than this");
    sweep->add_option("--jobs", opt.jobs, "Worker threads");

    auto* diagnose = app.add_subcommand("diagnose", "Compare exact B_r against the floating-point root oracle");
    diagnose->add_option("--classes", opt.classes, "c_1,...,c_N")->required();
    diagnose->add_option("--N", opt.n_condition, "Condition index; must equal the number of classes");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (check->parsed()) return cmd_check(opt, out);
        if (count->parsed()) return cmd_count(opt, out);
        if (sweep->parsed()) return cmd_sweep(opt, out, err);
        return cmd_diagnose(opt, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
    }
    return kExitUsage;
}

} // namespace bundle_census::cli
