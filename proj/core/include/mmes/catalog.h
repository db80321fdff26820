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

#ifndef MMES_CATALOG_H
#define MMES_CATALOG_H

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mmes/criterion.h"
#include "mmes/qstate.h"
#include "mmes/rational.h"

namespace mmes {

enum class CatalogStatus { kVerified, kPrintedWithTypo, kRepaired };

std::string_view status_name(CatalogStatus s);

/// Reference values a catalog state is expected to reproduce. Absent fields are not checked.
struct ExpectedValues {
    std::optional<Rational> pi_me;
    std::optional<Rational> pi_me_strictly_above;
    std::optional<Rational> K_paper;
    std::optional<Rational> K_exact;
    std::optional<int> uniformity;
    std::optional<Rational> sigma_me;
    std::optional<Verdict> verdict;
    std::vector<std::pair<QubitSubset, Rational>> subset_purities;
    std::string source;
};

struct CatalogEntry {
    std::string name;
    PureState state;
    ExpectedValues expected;
    CatalogStatus status = CatalogStatus::kVerified;
    std::string notes;
};

/// One transcribed ket term: sign * omega^omega_power |bits>, omega = e^{2 pi i / 3}.
struct SymbolicTerm {
    int sign = 1;
    int omega_power = 0;
    std::string bits;
};

/// Renders terms scaled by `normalizer` and validates unit norm. Throws
/// kMalformedSource when a ket has the wrong bit count or repeats a basis label.
PureState render_terms(int n, const std::vector<SymbolicTerm> &terms, double normalizer);

/// Names accepted by catalog_state: bell2, ghz<n>, product<n>, hs4, yc4, brown5,
/// borras6_printed, borras6_repaired, bellprod8, zha8_printed, zha8_constructed.
CatalogEntry catalog_state(std::string_view name);

/// The fixed list exercised by catalog verification.
std::vector<std::string> catalog_names();

/// The sixteen terms of the six-qubit state exactly as printed, including the
/// five-bit ket "11000".
std::vector<SymbolicTerm> borras6_printed_terms();

struct RepairCandidate {
    std::string bits;
    double norm = 0;
    double pi_me = 0;
    double K_exact = 0;
    bool accepted = false;
};

struct RepairReport {
    std::string malformed_bits;
    std::vector<RepairCandidate> candidates;  ///< distinct single-bit completions, ascending
    std::string chosen_bits;
};

/// Enumerates every single-bit completion of the malformed ket and keeps those
/// giving unit norm (no collision with another term) and K_exact < 1e-10.
RepairReport borras6_repair();

/// Throws kRepairFailed unless exactly one completion survives.
CatalogEntry borras6_repaired();

/// A unitary acting on `arity` qubits; the first target is the most significant bit of its index.
class LocalUnitary {
   public:
    /// Throws kNotUnitary when max |U^dagger U - I| exceeds 1e-12.
    explicit LocalUnitary(Eigen::MatrixXcd matrix);

    int arity() const noexcept {
        return arity_;
    }
    const Eigen::MatrixXcd &matrix() const noexcept {
        return matrix_;
    }
    double unitarity_deviation() const;

   private:
    int arity_ = 0;
    Eigen::MatrixXcd matrix_;
};

double unitarity_deviation(const Eigen::MatrixXcd &m);

/// The 16x16 four-qubit unitary used to build the eight-qubit state from four Bell pairs.
LocalUnitary u2468();

/// Applies u to `targets` in the given order (targets[0] is the most significant
/// bit of u's index). Throws kArityMismatch, kLabelOutOfRange or kInvalidSubset.
PureState apply_local_unitary(const PureState &state, std::span<const int> targets, const LocalUnitary &u);
PureState apply_local_unitary(const PureState &state, const QubitSubset &targets, const LocalUnitary &u);

/// `layout[j]` names the canonical label of the qubit written at position j+1
/// of the input. Returns the same physical state with positions sorted by label.
/// Throws kNotABijection.
PureState reorder_qubits(const PureState &state, std::span<const int> layout);

struct TermDifference {
    std::size_t index = 0;
    std::string bits;
    Complex a;
    Complex b;
};

struct OverlapAudit {
    double overlap = 0;   ///< |<a|b>|
    Complex phase = 1;    ///< global phase applied to b before listing differences
    std::vector<TermDifference> differences;
};

/// Compares two states up to global phase and lists basis terms whose
/// amplitudes still differ by more than tol.
OverlapAudit compare_states(const PureState &a, const PureState &b, double tol = 1e-9);

std::string bit_string(std::size_t index, int n);

}  // namespace mmes

#endif
