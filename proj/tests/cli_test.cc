// Copyright 2026 The mmes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.h"
#include <nlohmann/json.hpp>
#include "mmes/catalog.h"
#include "mmes/statefile.h"

namespace mmes::cli {
namespace {

struct Captured {
    int code = 0;
    std::string out;
    std::string err;
};

template <typename Options, typename Fn>
Captured run(Fn fn, const Options &options) {
    std::ostringstream out, err;
    int code = fn(options, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string &name) {
    return std::filesystem::temp_directory_path() / ("mmes_cli_test_" + name);
}

TEST(Cli, VerifyCatalogPasses) {
    CommonOptions o;
    auto r = run(run_verify_catalog, o);
    EXPECT_EQ(r.code, kExitOk) << r.err;
    EXPECT_NE(r.out.find("borras6_printed"), std::string::npos);
    EXPECT_NE(r.out.find("PrintedWithTypo"), std::string::npos);
    EXPECT_NE(r.out.find("29/70"), std::string::npos);
    EXPECT_NE(r.out.find("catalog verified"), std::string::npos);
}

TEST(Cli, VerifyCatalogJsonIsDeterministic) {
    CommonOptions o;
    o.format = Format::kJson;
    auto a = run(run_verify_catalog, o);
    auto b = run(run_verify_catalog, o);
    EXPECT_EQ(a.out, b.out);
    auto doc = nlohmann::json::parse(a.out);
    EXPECT_TRUE(doc["passed"].get<bool>());
    EXPECT_EQ(doc["catalog"].size(), catalog_names().size());
}

TEST(Cli, AnalyzeStateFiles) {
    auto hs_path = temp_file("hs4.json");
    write_state_file(hs_path, catalog_state("hs4").state);
    AnalyzeOptions o;
    o.path = hs_path.string();
    o.common.format = Format::kJson;
    auto r = run(run_analyze, o);
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_NEAR(doc["pi_me"].get<double>(), 1.0 / 3, 1e-12);
    EXPECT_EQ(doc["verdict"], "MMES");

    std::vector<Complex> ghz5(32, 0);
    ghz5[0] = ghz5[31] = 1;
    auto ghz_path = temp_file("ghz5.json");
    write_state_file(ghz_path, make_state(5, ghz5, Normalization::kRescale));
    o.path = ghz_path.string();
    doc = nlohmann::json::parse(run(run_analyze, o).out);
    EXPECT_NEAR(doc["pi_me"].get<double>(), 0.5, 1e-12);
    EXPECT_EQ(doc["verdict"], "NotMMES");
    std::filesystem::remove(hs_path);
    std::filesystem::remove(ghz_path);
}

TEST(Cli, AnalyzeTextAndDepth) {
    AnalyzeOptions o;
    o.catalog_name = "zha8_printed";
    auto r = run(run_analyze, o);
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_NE(r.out.find("3/35"), std::string::npos);
    EXPECT_NE(r.out.find("uniformity  3"), std::string::npos);
    o.depth = 9;
    EXPECT_EQ(run(run_analyze, o).code, kExitUsage);
    o.depth = 2;
    o.common.format = Format::kCsv;
    r = run(run_analyze, o);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1 + 8 + 28);
}

TEST(Cli, AnalyzeReportsParseErrors) {
    auto path = temp_file("dup.json");
    std::ofstream(path) << R"({"n": 1, "amplitudes": [{"basis": "0", "re": 1}, {"basis": "0", "re": 1}]})";
    AnalyzeOptions o;
    o.path = path.string();
    auto r = run(run_analyze, o);
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_NE(r.err.find("duplicate basis \"0\""), std::string::npos) << r.err;
    o.path = "/nonexistent.json";
    EXPECT_EQ(run(run_analyze, o).code, kExitUsage);
    o.path.clear();
    EXPECT_EQ(run(run_analyze, o).code, kExitUsage);
    std::filesystem::remove(path);
}

TEST(Cli, InvariantsDump) {
    AnalyzeOptions o;
    o.catalog_name = "bell2";
    o.depth = 2;
    o.common.format = Format::kCsv;
    auto r = run(run_invariants, o);
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_NE(r.out.find("2,12,3"), std::string::npos) << r.out;
}

TEST(Cli, SearchWritesBestState) {
    SearchOptions o;
    o.n = 2;
    o.restarts = 1;
    o.common.output = temp_file("search.json").string();
    o.common.format = Format::kJson;
    auto r = run(run_search, o);
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_NEAR(doc["pi_me"].get<double>(), 0.5, 1e-6);
    auto best = read_state_file(o.common.output);
    EXPECT_NEAR(avg_subsystem_purity(best), 0.5, 1e-6);
    EXPECT_EQ(run(run_search, o).out, r.out);
    std::filesystem::remove(o.common.output);
    o.n = 1;
    EXPECT_EQ(run(run_search, o).code, kExitUsage);
}

TEST(Cli, Reports) {
    ReportOptions o;
    o.kind = "table1";
    auto r = run(run_report, o);
    ASSERT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("7,unknown"), std::string::npos);
    o.kind = "fig2";
    o.common.format = Format::kJson;
    EXPECT_NO_THROW(nlohmann::json::parse(run(run_report, o).out));
    o.kind = "fig3";
    EXPECT_EQ(run(run_report, o).code, kExitUsage);
    o.kind = "table1";
    o.common.output = "/nonexistent/dir/out.csv";
    EXPECT_EQ(run(run_report, o).code, kExitUsage);
}

}  // namespace
}  // namespace mmes::cli
