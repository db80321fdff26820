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

#include "mmes/invariants.h"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>

#include "mmes/error.h"

namespace mmes {

namespace {

/// Pairwise summation over a contiguous range; the split point is fixed so the
/// rounding pattern only depends on the length.
Complex pairwise_sum(std::span<const Complex> terms) {
    if (terms.size() <= 8) {
        Complex total = 0;
        for (const auto &t : terms) {
            total += t;
        }
        return total;
    }
    std::size_t half = terms.size() / 2;
    return pairwise_sum(terms.first(half)) + pairwise_sum(terms.subspan(half));
}

PauliAxis parse_axis(char c) {
    switch (std::toupper(static_cast<unsigned char>(c))) {
        case 'X':
            return PauliAxis::kX;
        case 'Y':
            return PauliAxis::kY;
        case 'Z':
            return PauliAxis::kZ;
    }
    throw Error(ErrorCode::kParseError, std::string("unknown Pauli axis '") + c + "'");
}

}  // namespace

char axis_char(PauliAxis axis) {
    switch (axis) {
        case PauliAxis::kX:
            return 'X';
        case PauliAxis::kY:
            return 'Y';
        case PauliAxis::kZ:
            return 'Z';
    }
    return '?';
}

PauliString::PauliString(std::vector<std::pair<int, PauliAxis>> assignments) : assignments_(std::move(assignments)) {
    if (assignments_.empty()) {
        throw Error(ErrorCode::kEmptySubset, "Pauli string has empty support");
    }
    std::sort(assignments_.begin(), assignments_.end(), [](const auto &a, const auto &b) {
        return a.first < b.first;
    });
    for (std::size_t i = 0; i < assignments_.size(); ++i) {
        if (assignments_[i].first < 1 || (i > 0 && assignments_[i].first == assignments_[i - 1].first)) {
            throw Error(ErrorCode::kInvalidSubset, "Pauli string labels must be >= 1 and distinct");
        }
    }
}

PauliString PauliString::parse(const std::string &text) {
    std::vector<std::pair<int, PauliAxis>> out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*') {
            ++i;
            continue;
        }
        PauliAxis axis = parse_axis(text[i++]);
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            ++i;
        }
        if (start == i) {
            throw Error(ErrorCode::kParseError, "Pauli axis without qubit label in '" + text + "'");
        }
        out.emplace_back(std::stoi(text.substr(start, i - start)), axis);
    }
    return PauliString(std::move(out));
}

PauliString PauliString::on(const QubitSubset &support, const std::vector<PauliAxis> &axes) {
    if (axes.size() != support.size()) {
        throw Error(ErrorCode::kArityMismatch, "one Pauli axis is needed per support label");
    }
    std::vector<std::pair<int, PauliAxis>> out;
    for (std::size_t i = 0; i < axes.size(); ++i) {
        out.emplace_back(support.labels()[i], axes[i]);
    }
    return PauliString(std::move(out));
}

QubitSubset PauliString::support() const {
    std::vector<int> labels;
    for (const auto &[q, axis] : assignments_) {
        labels.push_back(q);
    }
    return QubitSubset(std::move(labels));
}

std::string PauliString::str() const {
    std::string out;
    for (const auto &[q, axis] : assignments_) {
        if (!out.empty()) {
            out += ' ';
        }
        out += axis_char(axis);
        out += std::to_string(q);
    }
    return out;
}

double pauli_expectation(const PureState &state, const PauliString &p) {
    int n = state.num_qubits();
    std::uint32_t flip = 0;
    std::uint32_t sign = 0;
    int y_count = 0;
    for (const auto &[q, axis] : p.assignments()) {
        if (q > n) {
            throw Error(ErrorCode::kLabelOutOfRange, "Pauli string " + p.str() + " acts beyond " + std::to_string(n) + " qubits");
        }
        std::uint32_t bit = std::uint32_t{1} << bit_of_label(n, q);
        if (axis != PauliAxis::kZ) {
            flip |= bit;
        }
        if (axis != PauliAxis::kX) {
            sign |= bit;
        }
        if (axis == PauliAxis::kY) {
            ++y_count;
        }
    }
    // P|i> = i^{#Y} (-1)^{popcount(i & sign)} |i ^ flip>
    static constexpr Complex kIPowers[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    Complex global = kIPowers[y_count % 4];

    auto amps = state.amplitudes();
    std::vector<Complex> terms(amps.size());
    for (std::size_t i = 0; i < amps.size(); ++i) {
        double parity = (std::popcount(static_cast<std::uint32_t>(i) & sign) & 1) ? -1.0 : 1.0;
        terms[i] = std::conj(amps[i ^ flip]) * amps[i] * parity;
    }
    Complex value = global * pairwise_sum(terms);
    if (std::abs(value.imag()) >= 1e-10) {
        throw Error(ErrorCode::kNotNormalized, "Pauli expectation has imaginary residue " + std::to_string(value.imag()));
    }
    return value.real();
}

double invariant_F(const PureState &state, const QubitSubset &subset) {
    if (subset.empty()) {
        throw Error(ErrorCode::kEmptySubset, "invariant over an empty subset");
    }
    std::size_t k = subset.size();
    std::vector<PauliAxis> axes(k, PauliAxis::kX);
    double total = 0;
    while (true) {
        double e = pauli_expectation(state, PauliString::on(subset, axes));
        total += e * e;
        std::size_t j = k;
        while (j > 0) {
            --j;
            if (axes[j] != PauliAxis::kZ) {
                axes[j] = static_cast<PauliAxis>(static_cast<int>(axes[j]) + 1);
                break;
            }
            axes[j] = PauliAxis::kX;
            if (j == 0) {
                return total;
            }
        }
    }
}

double InvariantTable::at(const QubitSubset &subset) const {
    auto it = values.find(subset);
    if (it == values.end()) {
        throw Error(ErrorCode::kIncompleteTable, "invariant table has no entry for subset " + subset.str());
    }
    return it->second;
}

double InvariantTable::sum_of_size(int size) const {
    if (size < 1 || size > max_size) {
        throw Error(ErrorCode::kIncompleteTable, "invariant table does not cover subsets of size " + std::to_string(size));
    }
    double total = 0;
    for (const auto &[subset, f] : values) {
        if (static_cast<int>(subset.size()) == size) {
            total += f;
        }
    }
    return total;
}

InvariantTable invariant_table(const PureState &state, int max_size) {
    int n = state.num_qubits();
    if (max_size < 1 || max_size > n) {
        throw Error(ErrorCode::kOutOfRange, "invariant table size " + std::to_string(max_size) + " outside [1, n]");
    }
    InvariantTable table;
    table.n_qubits = n;
    table.max_size = max_size;
    for (int k = 1; k <= max_size; ++k) {
        for (auto &subset : subsets_of_size(n, k)) {
            double f = invariant_F(state, subset);
            table.values.emplace(std::move(subset), f);
        }
    }
    return table;
}

double purity_from_invariants(const InvariantTable &table, const QubitSubset &subset) {
    if (subset.empty()) {
        throw Error(ErrorCode::kEmptySubset, "purity of an empty subset");
    }
    double total = 1;
    for (const auto &b : nonempty_subsets(subset)) {
        total += table.at(b);
    }
    return std::ldexp(total, -static_cast<int>(subset.size()));
}

}  // namespace mmes
