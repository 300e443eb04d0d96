#include "census_format.hpp"
#include "cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <random>
#include <sstream>

using namespace bundle_census;

namespace {

struct Invocation {
    int code;
    std::string out;
    std::string err;
};

Invocation invoke(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class ScopedEnv {
public:
    ScopedEnv(const char* name, const char* value) : name_(name) { ::setenv(name, value, 1); }
    ~ScopedEnv() { ::unsetenv(name_); }
    ScopedEnv(const ScopedEnv&) = delete;
    ScopedEnv& operator=(const ScopedEnv&) = delete;

private:
    const char* name_;
};

} // namespace

TEST(Cli, GoldenExitCodes) {
    const std::vector<std::pair<std::vector<std::string>, int>> golden = {
        {{"check", "--classes", "0,0,0", "--N", "3"}, 0},
        {{"check", "--classes", "1,1,0", "--N", "3"}, 1},
        {{"check", "--classes", "5,6,0", "--N", "3"}, 0},
        {{"check", "--classes", "5,6,0"}, 0},
        {{"check", "--classes", "1,1", "--N", "3"}, 2},
        {{"check", "--classes", "1,z"}, 2},
        {{"check", "--classes", ""}, 2},
        {{"check"}, 2},
        {{"count", "--rank", "2", "--dim", "3", "--classes", "0,0"}, 0},
        {{"count", "--rank", "2", "--dim", "3", "--classes", "1,1"}, 0},
        {{"count", "--rank", "3", "--dim", "6", "--classes", "1,2,3"}, 0},
        {{"count", "--rank", "2", "--dim", "3", "--classes", "1"}, 2},
        {{"count", "--rank", "0", "--dim", "3", "--classes", "1"}, 2},
        {{"count", "--rank", "2", "--dim", "3", "--classes", "0,0", "--format", "xml"}, 2},
        {{"sweep", "--rank", "2", "--dim", "3", "--bounds", "-1:1,-1:1"}, 0},
        {{"sweep", "--rank", "2", "--dim", "3", "--bounds", "1:0,-1:1"}, 2},
        {{"sweep", "--rank", "2", "--dim", "3", "--bounds", "0:1,0:1,0:1"}, 2},
        {{"sweep", "--rank", "2", "--dim", "3", "--bounds", "0-1"}, 2},
        {{"diagnose", "--classes", "5,6,0", "--N", "3"}, 0},
        {{"diagnose", "--classes", "1,1,0", "--N", "3"}, 0},
        {{"diagnose", "--classes", "0,0,0"}, 0},
        {{"frobnicate"}, 2},
        {{}, 2},
        {{"--help"}, 0},
    };
    for (const auto& [args, code] : golden) {
        std::string joined;
        for (const auto& a : args) joined += a + " ";
        EXPECT_EQ(invoke(args).code, code) << joined;
    }
}

TEST(Cli, CheckPrintsExactValues) {
    const auto result = invoke({"check", "--classes", "1,1,0", "--N", "3"});
    EXPECT_NE(result.out.find("1/2"), std::string::npos);
    EXPECT_NE(result.out.find("not satisfied"), std::string::npos);

    const auto json = nlohmann::json::parse(invoke({"check", "--classes", "1,1,0", "--format", "json"}).out);
    EXPECT_EQ(json["N"], 3);
    EXPECT_EQ(json["satisfied"], false);
    EXPECT_EQ(json["values"][0]["B_r"], -1);
    EXPECT_EQ(json["values"][1]["B_r"], "1/2");
}

TEST(Cli, CountRendersRegimeAndNote) {
    const auto two = invoke({"count", "--rank", "2", "--dim", "3", "--classes", "0,0"});
    EXPECT_NE(two.out.find("count: 2"), std::string::npos);
    EXPECT_NE(two.out.find("exactly one of the two classes extends to CP^4"), std::string::npos);

    const auto json = nlohmann::json::parse(
        invoke({"count", "--rank", "4", "--dim", "5", "--classes", "1,0,0,0", "--format", "json"}).out);
    EXPECT_EQ(json["count"], 1);
    EXPECT_EQ(json["regime"], "corank_one");
    EXPECT_EQ(json["report"]["N"], 5);
    EXPECT_FALSE(json.contains("note"));

    const auto unknown = invoke({"count", "--rank", "3", "--dim", "6", "--classes", "1,2,3"});
    EXPECT_NE(unknown.out.find("count: unknown"), std::string::npos);
    EXPECT_NE(unknown.out.find("regime: unsupported"), std::string::npos);
}

TEST(Cli, ArbitraryPrecisionClasses) {
    const auto result =
        invoke({"check", "--classes", "100000000000000000000000000001,3,0", "--format", "json"});
    const auto json = nlohmann::json::parse(result.out);
    EXPECT_EQ(json["classes"][0], "100000000000000000000000000001");
    EXPECT_TRUE(json["values"][0]["B_r"].is_string());
}

TEST(Cli, SweepReportsSizeAndRefusesOversizeBoxes) {
    const std::vector<std::string> args = {"sweep", "--rank", "2", "--dim", "3", "--bounds", "-2:2"};
    const auto ok = invoke(args);
    EXPECT_EQ(ok.code, 0);
    EXPECT_NE(ok.err.find("25 tuples"), std::string::npos);

    auto capped = args;
    capped.insert(capped.end(), {"--max-tuples", "24"});
    const auto refused = invoke(capped);
    EXPECT_EQ(refused.code, 2);
    EXPECT_TRUE(refused.out.empty());

    {
        ScopedEnv env(cli::kMaxTuplesEnv, "10");
        EXPECT_EQ(invoke(args).code, 2);
        auto raised = args;
        raised.insert(raised.end(), {"--max-tuples", "25"});
        EXPECT_EQ(invoke(raised).code, 0);
    }
    {
        ScopedEnv env(cli::kMaxTuplesEnv, "ten");
        EXPECT_EQ(invoke(args).code, 2);
    }
}

TEST(Cli, SweepOutputIsByteIdenticalAcrossJobsAndRuns) {
    for (const char* fmt : {"json", "csv", "table"}) {
        const std::vector<std::string> base = {"sweep", "--rank", "3", "--dim", "4", "--bounds", "-3:3", "--format", fmt};
        auto one = base;
        one.insert(one.end(), {"--jobs", "1"});
        auto eight = base;
        eight.insert(eight.end(), {"--jobs", "8"});
        const auto a = invoke(one);
        const auto b = invoke(eight);
        const auto c = invoke(eight);
        EXPECT_EQ(a.code, 0);
        EXPECT_EQ(a.out, b.out) << fmt;
        EXPECT_EQ(b.out, c.out) << fmt;
    }
}

TEST(Cli, SweepCsvLayout) {
    const auto result = invoke({"sweep", "--rank", "2", "--dim", "3", "--bounds", "1:1,1:2", "--format", "csv"});
    std::istringstream lines(result.out);
    std::string line;
    std::getline(lines, line);
    EXPECT_EQ(line, format::csv_header);
    std::getline(lines, line);
    EXPECT_EQ(line, "1;1,0,corank_one,3=1/2,0");
    std::getline(lines, line);
    EXPECT_EQ(line, "1;2,1,corank_one,,0");
    std::getline(lines, line);
    EXPECT_EQ(line.rfind("# total=2", 0), 0U);
}

TEST(Cli, SweepJsonRoundTripsThroughRecords) {
    const auto result = invoke({"sweep", "--rank", "2", "--dim", "3", "--bounds", "-5:5", "--format", "json"});
    const auto doc = nlohmann::json::parse(result.out);
    SweepSpec spec;
    spec.rank = 2;
    spec.dim = 3;
    spec.bounds = {{-5, 5}, {-5, 5}};
    const auto expected = run_sweep(spec);
    ASSERT_EQ(doc["records"].size(), expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        ASSERT_EQ(format::record_from_json(doc["records"][i]), expected[i]);
    }
    EXPECT_EQ(doc["summary"]["total"], 121);
}

TEST(Format, RecordJsonRoundTrip) {
    std::mt19937_64 rng(0xf0f0);
    std::uniform_int_distribution<int> small(-50, 50);
    for (int trial = 0; trial < 300; ++trial) {
        ResultRecord record;
        const int n = 1 + trial % 6;
        for (int i = 0; i < n; ++i) {
            BigInt c = small(rng);
            if (trial % 5 == 0 && i == 0) c = (BigInt(1) << (40 + trial % 40)) * (trial % 2 ? 1 : -1);
            record.classes.push_back(c);
        }
        switch (trial % 4) {
        case 0: record.count = 0U; break;
        case 1: record.count = 1U; break;
        case 2: record.count = 2U; break;
        default: break;
        }
        record.regime = static_cast<Regime>(trial % 4);
        record.one_class_extends = trial % 3 == 0;
        for (int k = 0; k < trial % 3; ++k) {
            record.failing_r.emplace_back(3 + k, ExactRational(BigInt(small(rng)) * 2 + 1, BigInt(2 + k * 4)));
        }
        const auto text = format::record_to_json(record).dump();
        ASSERT_EQ(format::record_from_json(nlohmann::json::parse(text)), record) << text;
    }
}

TEST(Format, IntegersOutsideSafeRangeAreStrings) {
    const BigInt limit = (BigInt(1) << 53) - 1;
    EXPECT_TRUE(format::integer_to_json(limit).is_number_integer());
    EXPECT_TRUE(format::integer_to_json(-limit).is_number_integer());
    EXPECT_TRUE(format::integer_to_json(limit + 1).is_string());
    EXPECT_EQ(format::integer_from_json(format::integer_to_json(limit + 1)), limit + 1);
    EXPECT_EQ(format::rational_to_json(ExactRational(3, 6)), "1/2");
    EXPECT_THROW(format::record_from_json(nlohmann::json::parse(R"({"classes":[1]})")), std::invalid_argument);
}
