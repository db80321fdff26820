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

#include <sstream>

#include "mmes/error.h"
#include "mmes/report.h"

namespace mmes {
namespace {

std::vector<std::vector<std::string>> parse_csv(const std::string &text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream cell_stream(line);
        std::string cell;
        while (std::getline(cell_stream, cell, ',')) {
            cells.push_back(cell);
        }
        if (!line.empty() && line.back() == ',') {
            cells.emplace_back();
        }
        rows.push_back(std::move(cells));
    }
    return rows;
}

TEST(Table1, MatchesTabulatedBounds) {
    auto rows = table1_rows();
    ASSERT_EQ(rows.size(), 7U);
    const std::vector<std::optional<Rational>> want = {Rational(1, 2), Rational(1, 2), Rational(1, 3),
                                                       Rational(1, 4), Rational(1, 8), std::nullopt,
                                                       Rational(6, 70)};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        EXPECT_EQ(rows[i].n, static_cast<int>(i) + 2);
        EXPECT_EQ(rows[i].C, want[i]);
        EXPECT_EQ(rows[i].naive_bound, Rational(1, std::int64_t{1} << ((i + 2) / 2)));
    }
    auto csv = parse_csv(table1_csv());
    ASSERT_EQ(csv.size(), 8U);
    EXPECT_EQ(csv[6][1], "unknown");
    EXPECT_EQ(csv[7][0], "8");
    EXPECT_EQ(csv[7][1], "3/35");
    EXPECT_EQ(csv[7][3], "1/16");
}

TEST(Fig1, BestCatalogStatePerN) {
    auto rows = fig1_rows();
    ASSERT_EQ(rows.size(), 7U);
    EXPECT_FALSE(rows[5].state.has_value());  // n = 7
    EXPECT_EQ(rows[6].state, "zha8_printed");
    EXPECT_NEAR(*rows[6].pi_me, 6.0 / 70, 1e-12);
    EXPECT_NEAR(*rows[2].pi_me, 1.0 / 3, 1e-12);
    for (const auto &r : rows) {
        if (r.pi_me) {
            EXPECT_GE(*r.pi_me, to_double(r.naive_bound) - 1e-12);
        }
    }
}

TEST(Fig2, BasisProbabilityCounts) {
    auto data = fig2_data();
    ASSERT_EQ(data.names.size(), 4U);
    const std::vector<std::pair<int, double>> want = {{16, 1.0 / 16}, {2, 0.5}, {64, 1.0 / 64}, {64, 1.0 / 64}};
    for (std::size_t s = 0; s < data.names.size(); ++s) {
        int nonzero = 0;
        double total = 0;
        for (double p : data.probabilities[s]) {
            total += p;
            if (p > 1e-12) {
                ++nonzero;
                EXPECT_NEAR(p, want[s].second, 1e-12) << data.names[s];
            }
        }
        EXPECT_EQ(nonzero, want[s].first) << data.names[s];
        EXPECT_NEAR(total, 1, 1e-12);
    }
    auto csv = parse_csv(fig2_csv());
    ASSERT_EQ(csv.size(), 1U + 256U + 2U);
    EXPECT_EQ(csv[0][0], "basis");
    EXPECT_EQ(csv[1][0], "00000000");
    EXPECT_EQ(csv[256][0], "11111111");
    EXPECT_EQ(csv[257][0], "pi_me");
}

TEST(VerifyCatalog, AllEntriesPassTheirChecks) {
    for (const auto &c : verify_catalog()) {
        EXPECT_TRUE(c.passed) << c.name;
        if (c.name == "borras6_printed") {
            EXPECT_EQ(c.status, CatalogStatus::kPrintedWithTypo);
            EXPECT_FALSE(c.report.has_value());
        }
        if (c.name == "ghz8") {
            EXPECT_NEAR(*c.report->K_paper, 29.0 / 70, 1e-12);
        }
        if (c.name == "zha8_constructed") {
            EXPECT_FALSE(c.mismatches.empty());
        }
        if (c.name == "zha8_printed") {
            EXPECT_TRUE(c.mismatches.empty());
            EXPECT_EQ(c.report->verdict, Verdict::kMMES);
        }
    }
}

TEST(VerifyCatalog, TightToleranceStillDetectsMismatch) {
    auto c = check_catalog_entry("zha8_constructed", 1e-12);
    EXPECT_TRUE(c.passed);
    EXPECT_GE(c.mismatches.size(), 3U);
    EXPECT_THROW(check_catalog_entry("nope"), Error);
}

}  // namespace
}  // namespace mmes
