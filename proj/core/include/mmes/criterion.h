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

#ifndef MMES_CRITERION_H
#define MMES_CRITERION_H

#include <optional>
#include <string>
#include <vector>

#include "mmes/invariants.h"
#include "mmes/qstate.h"
#include "mmes/rational.h"

namespace mmes {

/// Whether a formula term sums F_B or I_B = 1 - F_B over all subsets of one size.
enum class TermKind { kF, kI };

struct FormulaTerm {
    int subset_size = 0;
    TermKind kind = TermKind::kF;
    Rational coefficient;
    std::vector<QubitSubset> only;  ///< restricts the sum to these subsets; empty means all of subset_size
};

/// The published "pi_ME = C + K" split for one qubit count, transcribed term by term.
struct CriterionFormula {
    int n = 0;
    Rational C;
    std::vector<FormulaTerm> terms;

    int max_subset_size() const;
};

/// Qubit counts with a published formula: 2, 3, 4, 5, 6, 8.
bool has_paper_formula(int n);

/// Throws kUnsupportedN for any other n.
const CriterionFormula &paper_formula(int n);

/// Tabulated lower bound C. Throws kUnknownBound for n = 7 and any n without a formula.
Rational paper_constant_C(int n);

/// Evaluates a formula's K on a table that covers its largest subset size.
double evaluate_K(const CriterionFormula &formula, const InvariantTable &table);

/// K as printed, evaluated on the state's invariants. Throws kUnsupportedN.
double paper_K(const PureState &state);

/// Weights w_b of pi_ME = 2^{-n_A} + sum_{|B| = b <= n_A} w_b F_B, with
/// w_b = 2^{-n_A} C(n-b, n_A-b) / C(n, n_A). Index 0 is unused and holds 0.
std::vector<Rational> exact_weights(int n);

struct ExactDecomposition {
    int n = 0;
    Rational baseline;                   ///< 2^{-floor(n/2)}
    std::vector<Rational> weight_by_size;  ///< see exact_weights
    double pi_me_direct = 0;
    double pi_me_reconstructed = 0;
    double K_exact = 0;  ///< sum_B w_B F_B = pi_me_reconstructed - baseline
    double residual = 0;  ///< |pi_me_reconstructed - pi_me_direct|

    Rational weight(const QubitSubset &subset) const;
};

ExactDecomposition exact_decomposition(const PureState &state);
ExactDecomposition exact_decomposition(const PureState &state, const InvariantTable &table);

struct AuditRecord {
    int n = 0;
    Rational C_paper;
    double K_paper = 0;
    double pi_me = 0;
    double delta = 0;  ///< (C_paper + K_paper) - pi_me

    /// The printed formula expanded into constant + sum_b c_b (sum of F over size b),
    /// next to the exact constant and weights.
    Rational effective_constant;
    std::vector<Rational> effective_coefficients;
    std::vector<Rational> exact_coefficients;
    std::vector<std::string> notes;
};

/// Expansion of a formula's I-terms into (constant, per-size F coefficient).
void expand_formula(const CriterionFormula &formula, Rational &constant, std::vector<Rational> &coefficients);

AuditRecord formula_audit(const PureState &state);

enum class Verdict { kMMES, kNotMMES, kUnknownBound };

std::string_view verdict_name(Verdict v);

struct PurityBin {
    double value = 0;
    int count = 0;
};

struct SizeHistogram {
    int size = 0;
    std::vector<PurityBin> bins;  ///< ascending by value, values merged within 1e-9
};

struct CriterionReport {
    int n = 0;
    double pi_me = 0;
    Rational naive_bound;
    std::optional<Rational> C_paper;
    std::optional<double> K_paper;
    double K_exact = 0;
    double decomposition_residual = 0;
    int uniformity = 0;
    Verdict verdict = Verdict::kUnknownBound;
    std::optional<double> audit_delta;
    std::vector<SizeHistogram> profile_summary;
};

std::vector<SizeHistogram> purity_histograms(const PureState &state, int max_size);

/// MMES iff a bound is tabulated for n and |pi_ME - C| <= tol; NotMMES when
/// pi_ME > C + tol; UnknownBound otherwise (untabulated n, or a value below C).
CriterionReport mmes_verdict(const PureState &state, double tol = kMixedTolerance);

}  // namespace mmes

#endif
