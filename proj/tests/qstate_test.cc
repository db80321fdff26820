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

#include "mmes/catalog.h"
#include "mmes/error.h"
#include "mmes/qstate.h"
#include "mmes/sampling.h"
#include "expect_error.h"
#include "test_util.h"

namespace mmes {
namespace {

using testing::oracle_reduced_density;
using testing::oracle_subsets;
using testing::expect_error;
using testing::oracle_subsystem_purity;

const double kS = 1 / std::sqrt(2.0);

PureState bell() {
    return make_state(2, {kS, 0, 0, kS});
}

TEST(QubitSubset, ValidatesLabels) {
    expect_error(ErrorCode::kInvalidSubset, [] { QubitSubset({2, 1}); });
    expect_error(ErrorCode::kInvalidSubset, [] { QubitSubset({0, 1}); });
    expect_error(ErrorCode::kInvalidSubset, [] { QubitSubset({1, 1}); });
    QubitSubset s{1, 3, 4};
    EXPECT_EQ(s.complement(5), (QubitSubset{2, 5}));
    EXPECT_TRUE(s.contains(3));
    EXPECT_FALSE(s.contains(2));
    EXPECT_EQ(s.str(), "134");
    EXPECT_EQ((QubitSubset{1, 2, 10}).str(), "1,2,10");
    EXPECT_EQ(s.index_mask(5), 0b10110U);
}

TEST(QubitSubset, SubsetsOfSizeMatchOracleOrder) {
    for (int n = 1; n <= 8; ++n) {
        for (int k = 0; k <= n; ++k) {
            auto got = subsets_of_size(n, k);
            auto want = oracle_subsets(n, k);
            ASSERT_EQ(got.size(), want.size());
            for (std::size_t i = 0; i < got.size(); ++i) {
                EXPECT_EQ(got[i].labels(), want[i]);
            }
        }
    }
}

TEST(MakeState, Examples) {
    auto b = bell();
    EXPECT_NEAR(std::abs(b[0]), kS, 1e-15);
    EXPECT_NEAR(std::abs(b[3]), kS, 1e-15);
    auto zero = make_state(1, {1, 0});
    EXPECT_EQ(zero.num_qubits(), 1);
    expect_error(ErrorCode::kWrongLength, [] { make_state(2, {1, 0, 0}); });
    expect_error(ErrorCode::kNotNormalized, [] { make_state(1, {1, 1}); });
    expect_error(ErrorCode::kZeroVector, [] { make_state(1, {0, 0}, Normalization::kRescale); });
    auto rescaled = make_state(1, {3, 4}, Normalization::kRescale);
    EXPECT_NEAR(rescaled.norm_squared(), 1, 1e-15);
    EXPECT_NEAR(rescaled[1].real(), 0.8, 1e-15);
    expect_error(ErrorCode::kQubitCountOutOfRange, [] { make_state(0, {1}); });
}

TEST(PartialTrace, Examples) {
    auto rho = partial_trace(bell(), {1});
    EXPECT_NEAR(std::abs(rho(0, 0) - 0.5), 0, 1e-15);
    EXPECT_NEAR(std::abs(rho(1, 1) - 0.5), 0, 1e-15);
    EXPECT_NEAR(std::abs(rho(0, 1)), 0, 1e-15);
    auto r0 = partial_trace(basis_state("00"), {1});
    EXPECT_NEAR(r0(0, 0).real(), 1, 1e-15);
    EXPECT_NEAR(purity(r0), 1.0, 1e-15);
    EXPECT_NEAR(purity(rho), 0.5, 1e-15);
    expect_error(ErrorCode::kEmptySubset, [] { partial_trace(bell(), QubitSubset{}); });
    expect_error(ErrorCode::kLabelOutOfRange, [] { partial_trace(bell(), {3}); });
}

TEST(PartialTrace, MatchesOracleOnRandomStates) {
    auto rng = make_rng(11);
    for (int n = 2; n <= 6; ++n) {
        auto psi = haar_random_state(n, rng);
        for (int k = 1; k <= n; ++k) {
            for (const auto &s : subsets_of_size(n, k)) {
                auto rho = partial_trace(psi, s);
                auto want = oracle_reduced_density(psi, s.labels());
                ASSERT_LT((rho.matrix() - want).cwiseAbs().maxCoeff(), 1e-12) << n << " " << s.str();
                EXPECT_TRUE(rho.is_valid());
            }
        }
    }
}

TEST(DensityMatrix, RejectsInvalidMatrices) {
    Eigen::MatrixXcd m(2, 2);
    m << 0.5, 0.1, 0.2, 0.5;
    EXPECT_THROW(DensityMatrix::from_matrix(m), Error);
    m << 1.5, 0, 0, -0.5;
    EXPECT_THROW(DensityMatrix::from_matrix(m), Error);
    m << 0.5, 0, 0, 0.5;
    EXPECT_NEAR(purity(DensityMatrix::from_matrix(m)), 0.5, 1e-15);
}

TEST(SubsystemPurity, Examples) {
    auto hs = catalog_state("hs4").state;
    EXPECT_NEAR(subsystem_purity(hs, {1, 2}), 1.0 / 3, 1e-12);
    auto yc = catalog_state("yc4").state;
    EXPECT_NEAR(subsystem_purity(yc, {1, 4}), 0.5, 1e-12);
    auto ghz3 = catalog_state("ghz3").state;
    EXPECT_NEAR(subsystem_purity(ghz3, {1}), 0.5, 1e-12);
    auto zha = catalog_state("zha8_printed").state;
    EXPECT_NEAR(subsystem_purity(zha, {1, 2, 3, 6}), 0.25, 1e-12);
    EXPECT_NEAR(subsystem_purity(zha, {1, 3, 4, 7}), 0.125, 1e-12);
}

TEST(SubsystemPurity, RandomStatesMatchOracleAndSymmetry) {
    auto rng = make_rng(12);
    for (int n = 2; n <= 7; ++n) {
        for (int trial = 0; trial < 3; ++trial) {
            auto psi = haar_random_state(n, rng);
            for (int k = 1; k < n; ++k) {
                for (const auto &s : subsets_of_size(n, k)) {
                    double p = subsystem_purity(psi, s);
                    ASSERT_NEAR(p, oracle_subsystem_purity(psi, s.labels()), 1e-12);
                    ASSERT_NEAR(p, subsystem_purity(psi, s.complement(n)), 1e-12);
                    ASSERT_GE(p, std::ldexp(1.0, -std::min<int>(k, n - k)) - 1e-12);
                    ASSERT_LE(p, 1 + 1e-12);
                }
            }
        }
    }
}

TEST(SubsystemPurity, InvariantUnderLocalUnitaries) {
    auto rng = make_rng(13);
    for (int n = 2; n <= 6; ++n) {
        auto psi = haar_random_state(n, rng);
        auto phi = apply_random_local_unitaries(psi, rng);
        EXPECT_NEAR(avg_subsystem_purity(psi), avg_subsystem_purity(phi), 1e-10);
        for (const auto &s : subsets_of_size(n, n / 2)) {
            EXPECT_NEAR(subsystem_purity(psi, s), subsystem_purity(phi, s), 1e-10);
        }
    }
}

TEST(SubsystemPurity, CovariantUnderQubitPermutation) {
    auto rng = make_rng(14);
    auto psi = haar_random_state(5, rng);
    std::vector<int> layout{3, 1, 5, 2, 4};
    auto phi = reorder_qubits(psi, layout);
    EXPECT_NEAR(avg_subsystem_purity(psi), avg_subsystem_purity(phi), 1e-12);
    // Position j+1 of psi carries canonical label layout[j] in phi.
    EXPECT_NEAR(subsystem_purity(phi, {1, 2}), subsystem_purity(psi, {2, 4}), 1e-12);
    EXPECT_NEAR(subsystem_purity(phi, {3}), subsystem_purity(psi, {1}), 1e-12);
    EXPECT_NEAR(subsystem_purity(phi, {1, 3, 5}), subsystem_purity(psi, {1, 2, 3}), 1e-12);
}

TEST(PurityProfile, Examples) {
    auto zha = catalog_state("zha8_printed").state;
    auto p3 = purity_profile(zha, 3);
    ASSERT_EQ(p3.size(), 56U);
    for (const auto &e : p3) {
        EXPECT_NEAR(e.purity, 0.125, 1e-12) << e.subset.str();
    }
    auto p1 = purity_profile(zha, 1);
    ASSERT_EQ(p1.size(), 8U);
    for (const auto &e : p1) {
        EXPECT_NEAR(e.purity, 0.5, 1e-12);
    }
    for (const auto &e : purity_profile(basis_state("0000"), 2)) {
        EXPECT_NEAR(e.purity, 1, 1e-12);
    }
    EXPECT_THROW(purity_profile(zha, 0), Error);
    EXPECT_THROW(purity_profile(zha, 9), Error);
}

TEST(AvgSubsystemPurity, Examples) {
    EXPECT_NEAR(avg_subsystem_purity(catalog_state("ghz8").state), 0.5, 1e-12);
    EXPECT_NEAR(avg_subsystem_purity(catalog_state("product8").state), 1, 1e-12);
    EXPECT_NEAR(avg_subsystem_purity(catalog_state("zha8_printed").state), 6.0 / 70, 1e-12);
    EXPECT_NEAR(avg_subsystem_purity(catalog_state("hs4").state), 1.0 / 3, 1e-12);
    expect_error(ErrorCode::kQubitCountOutOfRange, [] { avg_subsystem_purity(make_state(1, {1, 0})); });
}

TEST(AvgSubsystemPurity, PairedAverageAgreesForEvenN) {
    auto rng = make_rng(15);
    for (int n : {2, 4, 6, 8}) {
        auto psi = haar_random_state(n, rng);
        EXPECT_NEAR(avg_subsystem_purity(psi), avg_subsystem_purity_paired(psi), 1e-12);
        EXPECT_NEAR(avg_subsystem_purity(psi), testing::oracle_pi_me(psi), 1e-12);
    }
}

TEST(Uniformity, Examples) {
    EXPECT_EQ(uniformity_degree(catalog_state("zha8_printed").state), 3);
    EXPECT_EQ(uniformity_degree(catalog_state("brown5").state), 2);
    EXPECT_EQ(uniformity_degree(catalog_state("product8").state), 0);
    EXPECT_EQ(uniformity_degree(bell()), 1);
}

}  // namespace
}  // namespace mmes
