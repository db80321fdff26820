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

#include "mmes/criterion.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "mmes/error.h"

namespace mmes {

namespace {

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) {
        return 0;
    }
    std::int64_t out = 1;
    for (int i = 1; i <= k; ++i) {
        out = out * (n - k + i) / i;
    }
    return out;
}

Rational pow2_inverse(int k) {
    return Rational(1, std::int64_t{1} << k);
}

std::vector<CriterionFormula> build_paper_formulas() {
    using R = Rational;
    std::vector<CriterionFormula> out;
    // n = 2 prints K = F_1 (qubit 1 only).
    out.push_back({2, R(1, 2), {{1, TermKind::kF, R(1), {QubitSubset{1}}}}});
    out.push_back({3, R(1, 2), {{1, TermKind::kF, R(1, 6), {}}}});
    out.push_back(
        {4,
         R(1, 3),
         {
             {1, TermKind::kF, R(1, 6), {}},
             {1, TermKind::kI, R(1, 24), {}},
             {2, TermKind::kI, R(-1, 24), {}},
         }});
    // The printed pair list starts at "F_11"; read as all ten pairs.
    out.push_back({5, R(1, 4), {{1, TermKind::kF, R(1, 40), {}}, {2, TermKind::kF, R(1, 40), {}}}});
    out.push_back(
        {6,
         R(1, 8),
         {
             {1, TermKind::kF, R(1, 100), {}},
             {2, TermKind::kF, R(1, 100), {}},
             {3, TermKind::kF, R(1, 100), {}},
         }});
    out.push_back(
        {8,
         R(6, 70),
         {
             {1, TermKind::kF, R(11, 280), {}},
             {2, TermKind::kF, R(1, 70), {}},
             {3, TermKind::kF, R(1, 280), {}},
             {1, TermKind::kI, R(9, 1120), {}},
             {2, TermKind::kI, R(1, 1120), {}},
             {3, TermKind::kI, R(-1, 1120), {}},
             {4, TermKind::kI, R(-1, 1120), {}},
         }});
    return out;
}

const std::vector<CriterionFormula> &paper_formulas() {
    static const std::vector<CriterionFormula> formulas = build_paper_formulas();
    return formulas;
}

}  // namespace

int CriterionFormula::max_subset_size() const {
    int out = 0;
    for (const auto &t : terms) {
        out = std::max(out, t.subset_size);
    }
    return out;
}

bool has_paper_formula(int n) {
    const auto &all = paper_formulas();
    return std::any_of(all.begin(), all.end(), [n](const auto &f) {
        return f.n == n;
    });
}

const CriterionFormula &paper_formula(int n) {
    for (const auto &f : paper_formulas()) {
        if (f.n == n) {
            return f;
        }
    }
    throw Error(ErrorCode::kUnsupportedN, "no published C + K formula for n = " + std::to_string(n));
}

Rational paper_constant_C(int n) {
    if (!has_paper_formula(n)) {
        throw Error(ErrorCode::kUnknownBound, "lower bound C is not known for n = " + std::to_string(n));
    }
    return paper_formula(n).C;
}

double evaluate_K(const CriterionFormula &formula, const InvariantTable &table) {
    double k = 0;
    for (const auto &term : formula.terms) {
        double sum = 0;
        auto add = [&](const QubitSubset &subset) {
            double f = table.at(subset);
            sum += term.kind == TermKind::kF ? f : 1 - f;
        };
        if (term.only.empty()) {
            for (const auto &subset : subsets_of_size(formula.n, term.subset_size)) {
                add(subset);
            }
        } else {
            for (const auto &subset : term.only) {
                add(subset);
            }
        }
        k += to_double(term.coefficient) * sum;
    }
    return k;
}

double paper_K(const PureState &state) {
    const auto &formula = paper_formula(state.num_qubits());
    return evaluate_K(formula, invariant_table(state, formula.max_subset_size()));
}

std::vector<Rational> exact_weights(int n) {
    if (n < 2) {
        throw Error(ErrorCode::kQubitCountOutOfRange, "exact decomposition needs at least 2 qubits");
    }
    int half = n / 2;
    std::vector<Rational> w(static_cast<std::size_t>(half) + 1, Rational(0));
    for (int b = 1; b <= half; ++b) {
        w[b] = pow2_inverse(half) * Rational(binomial(n - b, half - b), binomial(n, half));
    }
    return w;
}

Rational ExactDecomposition::weight(const QubitSubset &subset) const {
    if (subset.empty() || subset.size() >= weight_by_size.size()) {
        return Rational(0);
    }
    return weight_by_size[subset.size()];
}

ExactDecomposition exact_decomposition(const PureState &state) {
    int n = state.num_qubits();
    if (n < 2) {
        throw Error(ErrorCode::kQubitCountOutOfRange, "exact decomposition needs at least 2 qubits");
    }
    return exact_decomposition(state, invariant_table(state, n / 2));
}

ExactDecomposition exact_decomposition(const PureState &state, const InvariantTable &table) {
    int n = state.num_qubits();
    ExactDecomposition d;
    d.n = n;
    d.baseline = pow2_inverse(n / 2);
    d.weight_by_size = exact_weights(n);
    if (table.max_size < n / 2) {
        throw Error(ErrorCode::kIncompleteTable, "exact decomposition needs invariants up to size floor(n/2)");
    }
    double k = 0;
    for (const auto &[subset, f] : table.values) {
        k += to_double(d.weight(subset)) * f;
    }
    d.K_exact = k;
    d.pi_me_reconstructed = to_double(d.baseline) + k;
    d.pi_me_direct = avg_subsystem_purity(state);
    d.residual = std::abs(d.pi_me_reconstructed - d.pi_me_direct);
    return d;
}

void expand_formula(const CriterionFormula &formula, Rational &constant, std::vector<Rational> &coefficients) {
    int n = formula.n;
    constant = formula.C;
    coefficients.assign(static_cast<std::size_t>(formula.max_subset_size()) + 1, Rational(0));
    for (const auto &term : formula.terms) {
        std::int64_t total = binomial(n, term.subset_size);
        std::int64_t count = term.only.empty() ? total : static_cast<std::int64_t>(term.only.size());
        // Spread a restricted sum evenly over its size class (exact for symmetric tables).
        Rational per_subset = term.coefficient * Rational(count, total);
        if (term.kind == TermKind::kF) {
            coefficients[term.subset_size] += per_subset;
        } else {
            constant += term.coefficient * Rational(count);
            coefficients[term.subset_size] -= per_subset;
        }
    }
}

AuditRecord formula_audit(const PureState &state) {
    int n = state.num_qubits();
    const auto &formula = paper_formula(n);
    AuditRecord a;
    a.n = n;
    a.C_paper = formula.C;
    auto table = invariant_table(state, std::max(formula.max_subset_size(), n / 2));
    a.K_paper = evaluate_K(formula, table);
    a.pi_me = avg_subsystem_purity(state);
    a.delta = to_double(a.C_paper) + a.K_paper - a.pi_me;
    expand_formula(formula, a.effective_constant, a.effective_coefficients);
    a.exact_coefficients = exact_weights(n);

    Rational baseline = pow2_inverse(n / 2);
    if (a.effective_constant != baseline) {
        a.notes.push_back(
            "expanded constant " + to_string(a.effective_constant) + " differs from exact " + to_string(baseline));
    }
    std::size_t sizes = std::max(a.effective_coefficients.size(), a.exact_coefficients.size());
    for (std::size_t b = 1; b < sizes; ++b) {
        Rational printed = b < a.effective_coefficients.size() ? a.effective_coefficients[b] : Rational(0);
        Rational exact = b < a.exact_coefficients.size() ? a.exact_coefficients[b] : Rational(0);
        if (printed != exact) {
            a.notes.push_back(
                "size-" + std::to_string(b) + " coefficient " + to_string(printed) + " differs from exact " +
                to_string(exact));
        }
    }
    for (const auto &term : formula.terms) {
        if (!term.only.empty()) {
            a.notes.push_back(
                "size-" + std::to_string(term.subset_size) +
                " term covers a subset of its size class; expansion averaged over the class");
        }
    }
    return a;
}

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::kMMES:
            return "MMES";
        case Verdict::kNotMMES:
            return "NotMMES";
        case Verdict::kUnknownBound:
            return "UnknownBound";
    }
    return "?";
}

std::vector<SizeHistogram> purity_histograms(const PureState &state, int max_size) {
    std::vector<SizeHistogram> out;
    for (int k = 1; k <= max_size && k <= state.num_qubits() - 1; ++k) {
        std::vector<double> values;
        for (const auto &entry : purity_profile(state, k)) {
            values.push_back(entry.purity);
        }
        std::sort(values.begin(), values.end());
        SizeHistogram h;
        h.size = k;
        for (double v : values) {
            if (!h.bins.empty() && v - h.bins.back().value <= 1e-9) {
                ++h.bins.back().count;
            } else {
                h.bins.push_back({v, 1});
            }
        }
        out.push_back(std::move(h));
    }
    return out;
}

CriterionReport mmes_verdict(const PureState &state, double tol) {
    int n = state.num_qubits();
    if (n < 2) {
        throw Error(ErrorCode::kQubitCountOutOfRange, "criterion needs at least 2 qubits");
    }
    CriterionReport r;
    r.n = n;
    r.naive_bound = pow2_inverse(n / 2);
    auto decomposition = exact_decomposition(state);
    r.pi_me = decomposition.pi_me_direct;
    r.K_exact = decomposition.K_exact;
    r.decomposition_residual = decomposition.residual;
    r.uniformity = uniformity_degree(state, tol);
    r.profile_summary = purity_histograms(state, n / 2);

    if (!has_paper_formula(n)) {
        r.verdict = Verdict::kUnknownBound;
        return r;
    }
    auto audit = formula_audit(state);
    r.C_paper = audit.C_paper;
    r.K_paper = audit.K_paper;
    r.audit_delta = audit.delta;
    double c = to_double(audit.C_paper);
    if (std::abs(r.pi_me - c) <= tol) {
        r.verdict = Verdict::kMMES;
    } else if (r.pi_me > c + tol) {
        r.verdict = Verdict::kNotMMES;
    } else {
        r.verdict = Verdict::kUnknownBound;
    }
    return r;
}

}  // namespace mmes
