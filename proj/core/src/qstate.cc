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

#include "mmes/qstate.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "layout.h"
#include "mmes/error.h"

namespace mmes {

namespace {

void check_qubit_count(int n) {
    if (n < 1 || n > kMaxQubits) {
        throw Error(
            ErrorCode::kQubitCountOutOfRange,
            "qubit count " + std::to_string(n) + " outside [1, " + std::to_string(kMaxQubits) + "]");
    }
}

void check_labels(const QubitSubset &subset, int n) {
    if (subset.empty()) {
        throw Error(ErrorCode::kEmptySubset, "subset is empty");
    }
    if (subset.max_label() > n) {
        throw Error(
            ErrorCode::kLabelOutOfRange,
            "subset " + subset.str() + " has a label beyond qubit count " + std::to_string(n));
    }
}

double gram_purity(const Eigen::MatrixXcd &m) {
    if (m.rows() <= m.cols()) {
        return (m * m.adjoint()).squaredNorm();
    }
    return (m.adjoint() * m).squaredNorm();
}

}  // namespace

QubitSubset::QubitSubset(std::vector<int> labels) : labels_(std::move(labels)) {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] < 1 || (i > 0 && labels_[i] <= labels_[i - 1])) {
            throw Error(ErrorCode::kInvalidSubset, "qubit labels must be >= 1 and strictly increasing");
        }
    }
}

QubitSubset::QubitSubset(std::initializer_list<int> labels) : QubitSubset(std::vector<int>(labels)) {
}

QubitSubset QubitSubset::range(int n) {
    std::vector<int> labels(static_cast<std::size_t>(std::max(n, 0)));
    std::iota(labels.begin(), labels.end(), 1);
    return QubitSubset(std::move(labels));
}

bool QubitSubset::contains(int label) const {
    return std::binary_search(labels_.begin(), labels_.end(), label);
}

bool QubitSubset::is_subset_of(const QubitSubset &other) const {
    return std::includes(other.labels_.begin(), other.labels_.end(), labels_.begin(), labels_.end());
}

QubitSubset QubitSubset::complement(int n) const {
    std::vector<int> out;
    for (int q = 1; q <= n; ++q) {
        if (!contains(q)) {
            out.push_back(q);
        }
    }
    return QubitSubset(std::move(out));
}

std::uint32_t QubitSubset::index_mask(int n) const {
    std::uint32_t mask = 0;
    for (int q : labels_) {
        mask |= std::uint32_t{1} << bit_of_label(n, q);
    }
    return mask;
}

std::string QubitSubset::str() const {
    bool compact = max_label() < 10;
    std::string out;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (!compact && i > 0) {
            out += ',';
        }
        out += std::to_string(labels_[i]);
    }
    return out;
}

std::strong_ordering operator<=>(const QubitSubset &a, const QubitSubset &b) {
    if (auto c = a.size() <=> b.size(); c != 0) {
        return c;
    }
    return std::lexicographical_compare_three_way(
        a.labels_.begin(), a.labels_.end(), b.labels_.begin(), b.labels_.end());
}

std::vector<QubitSubset> subsets_of_size(int n, int k) {
    std::vector<QubitSubset> out;
    if (k < 0 || k > n) {
        return out;
    }
    std::vector<int> labels(static_cast<std::size_t>(k));
    std::iota(labels.begin(), labels.end(), 1);
    while (true) {
        out.emplace_back(labels);
        int i = k - 1;
        while (i >= 0 && labels[i] == n - k + i + 1) {
            --i;
        }
        if (i < 0) {
            break;
        }
        ++labels[i];
        for (int j = i + 1; j < k; ++j) {
            labels[j] = labels[j - 1] + 1;
        }
    }
    return out;
}

std::vector<QubitSubset> nonempty_subsets(const QubitSubset &of) {
    std::vector<QubitSubset> out;
    const auto &labels = of.labels();
    int m = static_cast<int>(labels.size());
    for (int k = 1; k <= m; ++k) {
        for (const auto &positions : subsets_of_size(m, k)) {
            std::vector<int> picked;
            picked.reserve(positions.size());
            for (int p : positions.labels()) {
                picked.push_back(labels[p - 1]);
            }
            out.emplace_back(std::move(picked));
        }
    }
    return out;
}

double PureState::norm_squared() const {
    double total = 0;
    for (const auto &a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

PureState make_state(int n, std::vector<Complex> amplitudes, Normalization normalization) {
    check_qubit_count(n);
    std::size_t expected = std::size_t{1} << n;
    if (amplitudes.size() != expected) {
        throw Error(
            ErrorCode::kWrongLength,
            "expected " + std::to_string(expected) + " amplitudes for " + std::to_string(n) + " qubits, got " +
                std::to_string(amplitudes.size()));
    }
    double norm2 = 0;
    for (const auto &a : amplitudes) {
        norm2 += std::norm(a);
    }
    if (!(norm2 > 0) || !std::isfinite(norm2)) {
        throw Error(ErrorCode::kZeroVector, "amplitude vector is zero or not finite");
    }
    if (normalization == Normalization::kRequireUnit && std::abs(norm2 - 1) > kNormTolerance) {
        throw Error(ErrorCode::kNotNormalized, "squared norm " + std::to_string(norm2) + " differs from 1");
    }
    double scale = 1 / std::sqrt(norm2);
    for (auto &a : amplitudes) {
        a *= scale;
    }
    return PureState(n, std::move(amplitudes));
}

PureState basis_state(const std::string &bits) {
    int n = static_cast<int>(bits.size());
    check_qubit_count(n);
    std::vector<Complex> amps(std::size_t{1} << n);
    std::size_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw Error(ErrorCode::kParseError, "basis label '" + bits + "' is not a bitstring");
        }
        index = (index << 1) | static_cast<std::size_t>(c - '0');
    }
    amps[index] = 1;
    return make_state(n, std::move(amps));
}

Complex inner_product(const PureState &a, const PureState &b) {
    if (a.dimension() != b.dimension()) {
        throw Error(ErrorCode::kWrongLength, "inner product of states with different qubit counts");
    }
    Complex total = 0;
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        total += std::conj(a[i]) * b[i];
    }
    return total;
}

namespace detail {

SubsetLayout make_layout(int n, const QubitSubset &keep) {
    QubitSubset traced = keep.complement(n);
    SubsetLayout layout;
    layout.kept_qubits = static_cast<int>(keep.size());
    layout.traced_qubits = static_cast<int>(traced.size());
    std::size_t dim = std::size_t{1} << n;
    layout.row.resize(dim);
    layout.col.resize(dim);
    auto gather = [n](std::size_t index, const QubitSubset &s) {
        std::uint32_t out = 0;
        for (int q : s.labels()) {
            out = (out << 1) | static_cast<std::uint32_t>((index >> bit_of_label(n, q)) & 1);
        }
        return out;
    };
    for (std::size_t i = 0; i < dim; ++i) {
        layout.row[i] = gather(i, keep);
        layout.col[i] = gather(i, traced);
    }
    return layout;
}

Eigen::MatrixXcd reshape(std::span<const Complex> amplitudes, const SubsetLayout &layout) {
    Eigen::MatrixXcd m(Eigen::Index{1} << layout.kept_qubits, Eigen::Index{1} << layout.traced_qubits);
    for (std::size_t i = 0; i < amplitudes.size(); ++i) {
        m(layout.row[i], layout.col[i]) = amplitudes[i];
    }
    return m;
}

}  // namespace detail

DensityMatrix DensityMatrix::from_matrix(Eigen::MatrixXcd matrix) {
    Eigen::Index dim = matrix.rows();
    if (dim == 0 || matrix.cols() != dim || (dim & (dim - 1)) != 0) {
        throw Error(ErrorCode::kInvalidSubset, "density matrix must be square with power-of-two dimension");
    }
    int k = 0;
    while ((Eigen::Index{1} << k) < dim) {
        ++k;
    }
    DensityMatrix rho(k, std::move(matrix));
    if (!rho.is_valid()) {
        throw Error(ErrorCode::kNotNormalized, "matrix is not Hermitian, unit-trace and positive semidefinite");
    }
    return rho;
}

bool DensityMatrix::is_valid() const {
    if ((matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
        return false;
    }
    if (std::abs(matrix_.trace() - Complex(1, 0)) > 1e-12) {
        return false;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(matrix_, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff() >= -1e-10;
}

DensityMatrix partial_trace(const PureState &state, const QubitSubset &keep) {
    check_labels(keep, state.num_qubits());
    auto layout = detail::make_layout(state.num_qubits(), keep);
    Eigen::MatrixXcd m = detail::reshape(state.amplitudes(), layout);
    Eigen::MatrixXcd rho = m * m.adjoint();
    return DensityMatrix(static_cast<int>(keep.size()), std::move(rho));
}

double purity(const DensityMatrix &rho) {
    return rho.matrix().squaredNorm();
}

double subsystem_purity(const PureState &state, const QubitSubset &subset) {
    check_labels(subset, state.num_qubits());
    auto layout = detail::make_layout(state.num_qubits(), subset);
    return gram_purity(detail::reshape(state.amplitudes(), layout));
}

std::vector<SubsetPurity> purity_profile(const PureState &state, int k) {
    int n = state.num_qubits();
    if (k < 1 || k > n - 1) {
        throw Error(ErrorCode::kOutOfRange, "profile size " + std::to_string(k) + " outside [1, n-1]");
    }
    std::vector<SubsetPurity> out;
    for (auto &subset : subsets_of_size(n, k)) {
        double p = subsystem_purity(state, subset);
        out.push_back({std::move(subset), p});
    }
    return out;
}

double avg_subsystem_purity(const PureState &state) {
    int n = state.num_qubits();
    if (n < 2) {
        throw Error(ErrorCode::kQubitCountOutOfRange, "average subsystem purity needs at least 2 qubits");
    }
    auto profile = purity_profile(state, n / 2);
    double total = 0;
    for (const auto &entry : profile) {
        total += entry.purity;
    }
    return total / static_cast<double>(profile.size());
}

double avg_subsystem_purity_paired(const PureState &state) {
    int n = state.num_qubits();
    if (n < 2) {
        throw Error(ErrorCode::kQubitCountOutOfRange, "average subsystem purity needs at least 2 qubits");
    }
    if (n % 2 != 0) {
        return avg_subsystem_purity(state);
    }
    double total = 0;
    std::size_t count = 0;
    for (const auto &subset : subsets_of_size(n, n / 2)) {
        if (subset.labels().front() != 1) {
            break;
        }
        total += subsystem_purity(state, subset);
        ++count;
    }
    return total / static_cast<double>(count);
}

int uniformity_degree(const PureState &state, double tol) {
    int n = state.num_qubits();
    int degree = 0;
    for (int k = 1; k <= n / 2; ++k) {
        double target = std::ldexp(1.0, -k);
        for (const auto &subset : subsets_of_size(n, k)) {
            if (std::abs(subsystem_purity(state, subset) - target) > tol) {
                return degree;
            }
        }
        degree = k;
    }
    return degree;
}

}  // namespace mmes
