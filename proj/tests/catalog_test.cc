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

#include <cmath>

#include "expect_error.h"
#include "mmes/catalog.h"
#include "mmes/optimizer.h"
#include "mmes/sampling.h"
#include "test_util.h"

namespace mmes {
namespace {

using testing::expect_error;

TEST(Catalog, EveryNamedEntryLoads) {
    for (const auto &name : catalog_names()) {
        if (name == "borras6_printed") {
            expect_error(ErrorCode::kMalformedSource, [&] { catalog_state(name); });
            continue;
        }
        auto e = catalog_state(name);
        EXPECT_EQ(e.name, name);
        EXPECT_NEAR(e.state.norm_squared(), 1, 1e-12) << name;
    }
    expect_error(ErrorCode::kUnknownName, [] { catalog_state("w3"); });
}

TEST(Catalog, GhzTwoIsBell) {
    auto a = catalog_state("ghz2").state;
    auto b = catalog_state("bell2").state;
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_EQ(a[i], b[i]);
    }
}

TEST(Catalog, NamedStateValues) {
    auto brown = catalog_state("brown5").state;
    EXPECT_NEAR(avg_subsystem_purity(brown), 0.25, 1e-12);
    EXPECT_EQ(uniformity_degree(brown), 2);
    EXPECT_NEAR(sigma_me(brown), 0, 1e-12);
    auto zha = catalog_state("zha8_printed").state;
    EXPECT_NEAR(avg_subsystem_purity(zha), 6.0 / 70, 1e-12);
    EXPECT_EQ(uniformity_degree(zha), 3);
    EXPECT_NEAR(sigma_me(zha), 0.054045, 1e-6);
    auto hs = catalog_state("hs4").state;
    for (int q = 2; q <= 4; ++q) {
        EXPECT_NEAR(subsystem_purity(hs, {1, q}), 1.0 / 3, 1e-12);
    }
    auto bp = catalog_state("bellprod8").state;
    EXPECT_NEAR(subsystem_purity(bp, {1, 3, 5, 7}), 1.0 / 16, 1e-12);
    EXPECT_NEAR(avg_subsystem_purity(bp), 19.0 / 70, 1e-12);
}

TEST(Catalog, PrintedEightQubitProfile) {
    auto zha = catalog_state("zha8_printed").state;
    int quarter = 0, eighth = 0, sixteenth = 0;
    for (const auto &s : subsets_of_size(8, 4)) {
        if (!s.contains(1)) {
            continue;
        }
        double p = subsystem_purity(zha, s);
        quarter += std::abs(p - 0.25) < 1e-12;
        eighth += std::abs(p - 0.125) < 1e-12;
        sixteenth += std::abs(p - 0.0625) < 1e-12;
    }
    EXPECT_EQ(quarter, 3);
    EXPECT_EQ(eighth, 4);
    EXPECT_EQ(sixteenth, 28);
    EXPECT_NEAR(subsystem_purity(zha, {1, 2, 3, 6}), 0.25, 1e-12);
    EXPECT_NEAR(subsystem_purity(zha, {1, 2, 4, 5}), 0.25, 1e-12);
    EXPECT_NEAR(subsystem_purity(zha, {1, 2, 7, 8}), 0.25, 1e-12);
}

TEST(RenderTerms, RejectsMalformedTerms) {
    expect_error(ErrorCode::kMalformedSource, [] { render_terms(2, {{1, 0, "00"}, {1, 0, "1"}}, 0.5); });
    expect_error(ErrorCode::kMalformedSource, [] { render_terms(2, {{1, 0, "00"}, {1, 0, "00"}}, 0.5); });
    expect_error(ErrorCode::kNotNormalized, [] { render_terms(2, {{1, 0, "00"}, {1, 0, "11"}}, 1); });
    auto bell = render_terms(2, {{1, 0, "00"}, {-1, 0, "11"}}, 1 / std::sqrt(2.0));
    EXPECT_LT(bell[3].real(), 0);
    EXPECT_NEAR(avg_subsystem_purity(bell), 0.5, 1e-12);
}

TEST(BorrasRepair, ExactlyOneCompletionSurvives) {
    auto report = borras6_repair();
    EXPECT_EQ(report.malformed_bits, "11000");
    EXPECT_EQ(report.candidates.size(), 7U);
    int accepted = 0;
    for (const auto &c : report.candidates) {
        accepted += c.accepted ? 1 : 0;
        EXPECT_EQ(c.bits.size(), 6U);
    }
    EXPECT_EQ(accepted, 1);
    EXPECT_EQ(report.chosen_bits, "110001");
    auto repaired = borras6_repaired();
    EXPECT_EQ(repaired.status, CatalogStatus::kRepaired);
    EXPECT_NEAR(avg_subsystem_purity(repaired.state), 0.125, 1e-10);
    EXPECT_EQ(uniformity_degree(repaired.state), 3);
}

TEST(LocalUnitary, U2468IsUnitary) {
    auto u = u2468();
    EXPECT_EQ(u.arity(), 4);
    EXPECT_LT(u.unitarity_deviation(), 1e-12);
    Eigen::MatrixXcd bad = Eigen::MatrixXcd::Identity(4, 4);
    bad(0, 1) = 0.5;
    expect_error(ErrorCode::kNotUnitary, [&] { LocalUnitary{bad}; });
    expect_error(ErrorCode::kNotUnitary, [] { LocalUnitary{Eigen::MatrixXcd::Identity(3, 3)}; });
}

TEST(ApplyLocalUnitary, IdentityAndErrors) {
    auto bp = catalog_state("bellprod8").state;
    LocalUnitary id{Eigen::MatrixXcd::Identity(16, 16)};
    auto same = apply_local_unitary(bp, QubitSubset{2, 4, 6, 8}, id);
    for (std::size_t i = 0; i < bp.dimension(); ++i) {
        EXPECT_EQ(same[i], bp[i]);
    }
    expect_error(ErrorCode::kArityMismatch, [&] { apply_local_unitary(bp, QubitSubset{2, 4, 6}, id); });
    expect_error(ErrorCode::kLabelOutOfRange, [&] { apply_local_unitary(bp, QubitSubset{2, 4, 6, 9}, id); });
}

TEST(ApplyLocalUnitary, MatchesDenseKroneckerOracle) {
    auto rng = make_rng(41);
    auto psi = haar_random_state(3, rng);
    Eigen::Matrix2cd a = haar_random_unitary2(rng);
    Eigen::Matrix2cd b = haar_random_unitary2(rng);
    // Two-qubit gate a (x) b on qubits (3, 1): qubit 3 is the gate's high bit.
    Eigen::MatrixXcd g(4, 4);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            g(i, j) = a(i >> 1, j >> 1) * b(i & 1, j & 1);
        }
    }
    std::vector<int> targets{3, 1};
    auto out = apply_local_unitary(psi, targets, LocalUnitary{g});
    for (std::size_t i = 0; i < 8; ++i) {
        Complex want = 0;
        for (std::size_t j = 0; j < 8; ++j) {
            if (((i >> 1) & 1U) != ((j >> 1) & 1U)) {
                continue;  // qubit 2 untouched
            }
            // label 1 is bit 2, label 3 is bit 0
            want += a(static_cast<int>(i & 1U), static_cast<int>(j & 1U)) *
                    b(static_cast<int>(i >> 2), static_cast<int>(j >> 2)) * psi[j];
        }
        EXPECT_NEAR(std::abs(out[i] - want), 0, 1e-12) << i;
    }
}

TEST(ApplyLocalUnitary, SingleQubitGatesPreservePurity) {
    auto rng = make_rng(42);
    auto psi = haar_random_state(6, rng);
    double before = avg_subsystem_purity(psi);
    for (int q = 1; q <= 6; ++q) {
        std::vector<int> t{q};
        psi = apply_local_unitary(psi, t, LocalUnitary{Eigen::MatrixXcd(haar_random_unitary2(rng))});
        EXPECT_NEAR(avg_subsystem_purity(psi), before, 1e-10);
    }
}

TEST(ReorderQubits, Examples) {
    std::vector<int> swap{2, 1};
    auto out = reorder_qubits(basis_state("01"), swap);
    EXPECT_NEAR(std::abs(out[0b10]), 1, 1e-15);
    auto rng = make_rng(43);
    auto psi = haar_random_state(4, rng);
    std::vector<int> identity{1, 2, 3, 4};
    auto same = reorder_qubits(psi, identity);
    for (std::size_t i = 0; i < psi.dimension(); ++i) {
        EXPECT_EQ(same[i], psi[i]);
    }
    std::vector<int> dup{1, 1, 3, 4};
    expect_error(ErrorCode::kNotABijection, [&] { reorder_qubits(psi, dup); });
    std::vector<int> short_layout{1, 2, 3};
    expect_error(ErrorCode::kNotABijection, [&] { reorder_qubits(psi, short_layout); });
}

// The printed 16x16 matrix applied to the Bell product gives a different state
// from the printed eight-qubit MMES. These values were computed independently
// and pin the discrepancy.
TEST(ConstructedEightQubit, DiffersFromPrintedState) {
    auto constructed = catalog_state("zha8_constructed");
    EXPECT_EQ(constructed.status, CatalogStatus::kPrintedWithTypo);
    EXPECT_NEAR(avg_subsystem_purity(constructed.state), 61.0 / 560, 1e-12);
    int nonzero = 0;
    for (const auto &a : constructed.state.amplitudes()) {
        if (std::abs(a) > 1e-12) {
            ++nonzero;
            EXPECT_NEAR(std::abs(a), 0.125, 1e-12);
        }
    }
    EXPECT_EQ(nonzero, 64);
    auto audit = compare_states(constructed.state, catalog_state("zha8_printed").state);
    EXPECT_NEAR(audit.overlap, 5.0 / 32, 1e-12);
    EXPECT_FALSE(audit.differences.empty());
    EXPECT_EQ(audit.differences.front().bits.size(), 8U);
}

TEST(CompareStates, IgnoresGlobalPhase) {
    auto rng = make_rng(44);
    auto psi = haar_random_state(3, rng);
    std::vector<Complex> rotated(psi.amplitudes().begin(), psi.amplitudes().end());
    for (auto &a : rotated) {
        a *= std::polar(1.0, 0.7);
    }
    auto audit = compare_states(psi, make_state(3, rotated));
    EXPECT_NEAR(audit.overlap, 1, 1e-12);
    EXPECT_TRUE(audit.differences.empty());
    EXPECT_EQ(bit_string(5, 4), "0101");
}

}  // namespace
}  // namespace mmes
