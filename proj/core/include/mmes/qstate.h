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

#ifndef MMES_QSTATE_H
#define MMES_QSTATE_H

#include <compare>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace mmes {

using Complex = std::complex<double>;

inline constexpr int kMaxQubits = 12;
inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kMixedTolerance = 1e-9;

/// A set of qubit labels, 1-based and strictly increasing.
///
/// Subsets order by size first and then lexicographically by label, so sorted
/// containers list all singles, then all pairs, and so on.
class QubitSubset {
   public:
    QubitSubset() = default;
    explicit QubitSubset(std::vector<int> labels);
    QubitSubset(std::initializer_list<int> labels);

    /// {1, 2, ..., n}.
    static QubitSubset range(int n);

    const std::vector<int> &labels() const noexcept {
        return labels_;
    }
    std::size_t size() const noexcept {
        return labels_.size();
    }
    bool empty() const noexcept {
        return labels_.empty();
    }
    int max_label() const noexcept {
        return labels_.empty() ? 0 : labels_.back();
    }
    bool contains(int label) const;
    bool is_subset_of(const QubitSubset &other) const;

    /// Labels of [1, n] not in this subset. Requires max_label() <= n.
    QubitSubset complement(int n) const;

    /// Bit mask over amplitude indices of an n-qubit state (qubit 1 is the most significant bit).
    std::uint32_t index_mask(int n) const;

    /// "1236" when every label is a single digit, "1,2,10" otherwise.
    std::string str() const;

    friend bool operator==(const QubitSubset &, const QubitSubset &) = default;
    friend std::strong_ordering operator<=>(const QubitSubset &a, const QubitSubset &b);

   private:
    std::vector<int> labels_;
};

/// All size-k subsets of [1, n] in lexicographic order.
std::vector<QubitSubset> subsets_of_size(int n, int k);

/// All non-empty subsets of `of`, ordered by size then lexicographically.
std::vector<QubitSubset> nonempty_subsets(const QubitSubset &of);

/// Bit position (counted from the least significant end) of `label` in an n-qubit index.
constexpr int bit_of_label(int n, int label) {
    return n - label;
}

enum class Normalization {
    kRequireUnit,  ///< reject inputs whose squared norm is off by more than kNormTolerance
    kRescale,      ///< scale any nonzero input to unit norm
};

/// Dense n-qubit pure state; amplitude index bits read q1 q2 ... qn from most to least significant.
class PureState {
   public:
    int num_qubits() const noexcept {
        return n_;
    }
    std::size_t dimension() const noexcept {
        return amplitudes_.size();
    }
    std::span<const Complex> amplitudes() const noexcept {
        return amplitudes_;
    }
    const Complex &operator[](std::size_t index) const {
        return amplitudes_[index];
    }
    double norm_squared() const;

   private:
    PureState(int n, std::vector<Complex> amplitudes) : n_(n), amplitudes_(std::move(amplitudes)) {
    }
    friend PureState make_state(int, std::vector<Complex>, Normalization);

    int n_ = 0;
    std::vector<Complex> amplitudes_;
};

/// Validates and wraps raw amplitudes. Throws Error with kQubitCountOutOfRange,
/// kWrongLength, kZeroVector, or kNotNormalized.
PureState make_state(int n, std::vector<Complex> amplitudes, Normalization normalization = Normalization::kRequireUnit);

/// Computational basis state |bits>, e.g. basis_state("0101").
PureState basis_state(const std::string &bits);

/// <a|b>.
Complex inner_product(const PureState &a, const PureState &b);

/// Reduced density matrix of a set of kept qubits.
///
/// Rows and columns are indexed by the kept qubits in ascending label order,
/// with the smallest label as the most significant bit.
class DensityMatrix {
   public:
    /// Validates Hermiticity (1e-12 entrywise), unit trace (1e-12) and
    /// positivity (eigenvalues >= -1e-10). Throws Error(kInvalidSubset) on a
    /// non power-of-two dimension and Error(kNotNormalized) on a failed check.
    static DensityMatrix from_matrix(Eigen::MatrixXcd matrix);

    int num_qubits() const noexcept {
        return k_;
    }
    Eigen::Index dimension() const noexcept {
        return matrix_.rows();
    }
    const Eigen::MatrixXcd &matrix() const noexcept {
        return matrix_;
    }
    Complex operator()(Eigen::Index row, Eigen::Index col) const {
        return matrix_(row, col);
    }

    /// Re-checks every invariant listed for from_matrix; returns false instead of throwing.
    bool is_valid() const;

   private:
    DensityMatrix(int k, Eigen::MatrixXcd matrix) : k_(k), matrix_(std::move(matrix)) {
    }
    friend DensityMatrix partial_trace(const PureState &, const QubitSubset &);

    int k_ = 0;
    Eigen::MatrixXcd matrix_;
};

/// rho_keep = Tr_{complement}|psi><psi|. Throws kEmptySubset or kLabelOutOfRange.
DensityMatrix partial_trace(const PureState &state, const QubitSubset &keep);

/// Tr rho^2, evaluated as the sum of squared entry magnitudes.
double purity(const DensityMatrix &rho);

/// Tr rho_A^2 without materializing a validated DensityMatrix. Uses the smaller
/// of the two Gram matrices of the amplitude reshaping, which share a spectrum.
double subsystem_purity(const PureState &state, const QubitSubset &subset);

struct SubsetPurity {
    QubitSubset subset;
    double purity = 0;
};

/// One entry per size-k subset in lexicographic order. Requires 1 <= k <= n-1.
std::vector<SubsetPurity> purity_profile(const PureState &state, int k);

/// Mean purity over all subsets of size floor(n/2). Requires n >= 2.
double avg_subsystem_purity(const PureState &state);

/// Same value for even n computed from the half of the subsets that contain
/// qubit 1, using pi_A = pi_{complement(A)}. Falls back to the full sum for odd n.
double avg_subsystem_purity_paired(const PureState &state);

/// Largest k <= floor(n/2) such that every marginal of j <= k qubits has purity
/// 2^{-j} within tol; 0 when some single-qubit marginal is not maximally mixed.
int uniformity_degree(const PureState &state, double tol = kMixedTolerance);

}  // namespace mmes

#endif
