#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

namespace {

using nlohmann::json;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = bsac::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) v.push_back(line);
    return v;
}

void expect_single_line_diagnostic(const Result& r, const std::string& kind) {
    ASSERT_FALSE(r.err.empty());
    EXPECT_EQ(lines(r.err).size(), 1u) << r.err;
    const auto diag = json::parse(r.err);
    EXPECT_EQ(diag.at("error"), kind);
}

std::string write_temp(const std::string& name, const std::string& body) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << body;
    return path.string();
}

TEST(CliTest, ConstantsCsv) {
    const auto r = run({"constants"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.err.empty());
    const auto rows = lines(r.out);
    EXPECT_EQ(rows.front(), "name,value");
    auto has = [&](const std::string& row) { return std::find(rows.begin(), rows.end(), row) != rows.end(); };
    EXPECT_TRUE(has("c,1"));
    EXPECT_TRUE(has("ell,1"));
    EXPECT_TRUE(has("eps,0"));
    EXPECT_TRUE(has("f_dstar,1"));
    EXPECT_TRUE(has("M,153033008589/25000000000"));
}

TEST(CliTest, ConstantsJsonCarriesSchema) {
    const auto r = run({"--format", "json", "constants"});
    ASSERT_EQ(r.code, 0);
    const auto doc = json::parse(r.out);
    EXPECT_EQ(doc.at("schema"), 1);
    EXPECT_EQ(doc.at("command"), "constants");
    EXPECT_EQ(doc.at("constants").at("M"), "153033008589/25000000000");
    EXPECT_EQ(doc.at("generating_set").at("added_by_closure"), 2);
}

TEST(CliTest, BallRadiusOne) {
    const auto r = run({"ball", "--n", "1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(lines(r.out).size(), 6u);
}

TEST(CliTest, GlobalFlagsMayFollowCommand) {
    const auto a = run({"ball", "--n", "2", "--p", "3"});
    const auto b = run({"--p", "3", "ball", "--n", "2"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(CliTest, WordLength) {
    auto r = run({"len", "--element", "0/0:-3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(lines(r.out).at(1), "0,0,-3,found,3,20");
    r = run({"len", "--element", "64:0", "--max-r", "14", "--format", "json"});
    EXPECT_EQ(json::parse(r.out).at("word_length").at("length"), 12);
    r = run({"len", "--element", "0:9", "--max-r", "4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(lines(r.out).at(1), "0,0,9,not_found,,4");
}

TEST(CliTest, AcTable) {
    const auto r = run({"ac-table", "--n", "6", "--k", "2"});
    EXPECT_EQ(r.code, 0);
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 8u);
    EXPECT_EQ(rows[1], "0,2,0,,");
    EXPECT_EQ(rows[2], "1,2,2,0/0:-1,-1/0:0");
    EXPECT_EQ(rows[7].substr(0, 6), "6,2,6,");
}

TEST(CliTest, WorkerCountDoesNotChangeOutput) {
    const auto a = run({"--workers", "1", "ac-table", "--n", "7"});
    const auto b = run({"--workers", "4", "ac-table", "--n", "7"});
    EXPECT_EQ(a.out, b.out);
}

TEST(CliTest, AuditsPass) {
    EXPECT_EQ(run({"lemma1", "--n", "6"}).code, 0);
    EXPECT_EQ(run({"lemma2", "--r", "3", "--n", "5"}).code, 0);
    EXPECT_EQ(run({"lemma2", "--r", "5", "--n", "3"}).code, 0);
    const auto r = run({"lemma1", "--n", "3"});
    EXPECT_EQ(lines(r.out).size(), 5u);
}

TEST(CliTest, Witness) {
    const auto r = run({"witness", "--k", "3", "--j", "2", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = json::parse(r.out);
    EXPECT_EQ(doc.at("report").at("inside_distance"), 11);
    EXPECT_EQ(doc.at("report").at("family").at("radius"), 12);
    EXPECT_TRUE(doc.at("certificate").at("holds").get<bool>());
}

TEST(CliTest, UsageErrors) {
    expect_single_line_diagnostic(run({}), "usage");
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"ball"}).code, 2);
    EXPECT_EQ(run({"ball", "--n", "x"}).code, 2);
    EXPECT_EQ(run({"--format", "xml", "constants"}).code, 2);
    auto r = run({"len", "--element", "1/2"});
    EXPECT_EQ(r.code, 2);
    expect_single_line_diagnostic(r, "usage");
    r = run({"witness", "--k", "2", "--j", "2"});
    EXPECT_EQ(r.code, 2);
    expect_single_line_diagnostic(r, "usage");
    EXPECT_EQ(run({"--p", "1", "constants"}).code, 2);
    EXPECT_EQ(run({"ball", "--n", "1000"}).code, 2);
}

TEST(CliTest, BudgetExhaustion) {
    auto r = run({"--memory-budget", "20000", "ball", "--n", "12"});
    EXPECT_EQ(r.code, 3);
    EXPECT_TRUE(r.out.empty());
    expect_single_line_diagnostic(r, "budget");
    EXPECT_TRUE(json::parse(r.err).contains("completed_radius"));

    r = run({"--memory-budget", "100000", "ac-table", "--n", "12"});
    EXPECT_EQ(r.code, 3);
    EXPECT_GT(lines(r.out).size(), 2u);
    expect_single_line_diagnostic(r, "budget");
}

TEST(CliTest, ConfigFile) {
    const auto path = write_temp("bsac_cli_cfg.json", R"({
        "p": 2,
        "generators": [{"num": "2", "exp": 0, "c": 0}, {"num": 0, "exp": 0, "c": 1}],
        "memory_budget_bytes": 100000000,
        "max_radius": 10,
        "output_format": "json"
    })");
    auto r = run({"--config", path, "constants"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = json::parse(r.out);
    EXPECT_EQ(doc.at("constants").at("ell"), 3);
    EXPECT_EQ(doc.at("generating_set").at("generators").size(), 4u);
    EXPECT_EQ(run({"--config", path, "ball", "--n", "11"}).code, 2);

    const auto bad = write_temp("bsac_cli_bad.json", R"({"p": 2, "generators": [{"num": 1, "exp": 0, "c": 0}]})");
    r = run({"--config", bad, "constants"});
    EXPECT_EQ(r.code, 2);
    expect_single_line_diagnostic(r, "config");

    const auto typo = write_temp("bsac_cli_typo.json", R"({"p": 2, "gens": []})");
    EXPECT_EQ(run({"--config", typo, "constants"}).code, 2);
    const auto broken = write_temp("bsac_cli_broken.json", "{\"p\": ");
    expect_single_line_diagnostic(run({"--config", broken, "constants"}), "usage");
}

TEST(CliTest, MatchesGoldenFiles) {
    auto golden = [](const std::string& name) {
        std::ifstream in(std::string(BSAC_GOLDEN_DIR) + "/" + name);
        std::stringstream s;
        s << in.rdbuf();
        return s.str();
    };
    EXPECT_EQ(run({"constants"}).out, golden("constants.csv"));
    EXPECT_EQ(run({"ball", "--n", "6"}).out, golden("ball_n6.csv"));
    EXPECT_EQ(run({"ac-table", "--n", "8", "--k", "2"}).out, golden("ac_table_n8_k2.csv"));
}

}  // namespace
