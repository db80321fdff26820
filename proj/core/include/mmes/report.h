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

#ifndef MMES_REPORT_H
#define MMES_REPORT_H

#include <optional>
#include <string>
#include <vector>

#include "mmes/catalog.h"
#include "mmes/criterion.h"
#include "mmes/rational.h"

namespace mmes {

// Lower bounds per qubit count (n = 2..8).

struct BoundRow {
    int n = 0;
    std::optional<Rational> C;  ///< absent where no bound is tabulated
    Rational naive_bound;       ///< 2^{-floor(n/2)}
};

std::vector<BoundRow> table1_rows();
std::string table1_csv();
std::string table1_json();

// Best catalog value of pi_ME per qubit count next to the naive bound.

struct BestStateRow {
    int n = 0;
    std::optional<std::string> state;
    std::optional<double> pi_me;
    Rational naive_bound;
};

std::vector<BestStateRow> fig1_rows();
std::string fig1_csv();
std::string fig1_json();

// Basis probabilities of the eight-qubit comparison states.

struct BasisProbabilities {
    std::vector<std::string> names;
    std::vector<std::vector<double>> probabilities;  ///< [state][basis index]
    std::vector<double> pi_me;
    Rational C;
};

BasisProbabilities fig2_data();
std::string fig2_csv();
std::string fig2_json();

/// Outcome of checking one catalog entry against its expected values.
struct CatalogCheck {
    std::string name;
    int n = 0;
    CatalogStatus status = CatalogStatus::kVerified;
    std::optional<CriterionReport> report;
    std::vector<std::string> mismatches;  ///< expected-value checks that failed
    std::vector<std::string> notes;
    bool passed = false;
};

/// Verified and Repaired entries pass when every expected value holds within
/// tol. PrintedWithTypo entries pass when the defect is detected: the malformed
/// source is rejected, or the constructed state visibly misses its expected values.
CatalogCheck check_catalog_entry(const std::string &name, double tol = kMixedTolerance);
std::vector<CatalogCheck> verify_catalog(double tol = kMixedTolerance);

}  // namespace mmes

#endif
