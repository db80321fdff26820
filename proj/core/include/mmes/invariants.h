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

#ifndef MMES_INVARIANTS_H
#define MMES_INVARIANTS_H

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mmes/qstate.h"

namespace mmes {

enum class PauliAxis : std::uint8_t { kX, kY, kZ };

inline constexpr PauliAxis kPauliAxes[] = {PauliAxis::kX, PauliAxis::kY, PauliAxis::kZ};

char axis_char(PauliAxis axis);

/// Tensor product of Pauli operators on a set of qubits; identity elsewhere.
class PauliString {
   public:
    /// Throws kEmptySubset on no assignments and kInvalidSubset on repeated labels.
    explicit PauliString(std::vector<std::pair<int, PauliAxis>> assignments);

    /// Parses e.g. "X1 Z3" or "X1Y2".
    static PauliString parse(const std::string &text);

    /// One Pauli per label of `support`, axes[i] on support.labels()[i].
    static PauliString on(const QubitSubset &support, const std::vector<PauliAxis> &axes);

    const std::vector<std::pair<int, PauliAxis>> &assignments() const noexcept {
        return assignments_;
    }
    QubitSubset support() const;
    std::string str() const;

   private:
    std::vector<std::pair<int, PauliAxis>> assignments_;
};

/// <psi|P|psi>. Throws kLabelOutOfRange when the string acts beyond the state.
double pauli_expectation(const PureState &state, const PauliString &p);

/// F_B: sum over all 3^|B| axis assignments on B of the squared expectation.
double invariant_F(const PureState &state, const QubitSubset &subset);

/// F values for every subset of size 1..max_size, keyed in (size, lexicographic) order.
struct InvariantTable {
    int n_qubits = 0;
    int max_size = 0;
    std::map<QubitSubset, double> values;

    /// Throws kIncompleteTable when `subset` is not tabulated.
    double at(const QubitSubset &subset) const;

    /// Sum of F over all tabulated subsets of one size.
    double sum_of_size(int size) const;
};

InvariantTable invariant_table(const PureState &state, int max_size);

/// pi_A = 2^{-|A|} (1 + sum over non-empty B within A of F_B).
double purity_from_invariants(const InvariantTable &table, const QubitSubset &subset);

}  // namespace mmes

#endif
