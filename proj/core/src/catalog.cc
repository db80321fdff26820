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

#include "mmes/catalog.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <set>

#include "mmes/criterion.h"
#include "mmes/error.h"

namespace mmes {

namespace {

using R = Rational;

constexpr std::string_view kBorrasMalformed = "11000";

const Complex kOmegaPowers[3] = {
    {1, 0},
    {-0.5, std::numbers::sqrt3 / 2},
    {-0.5, -std::numbers::sqrt3 / 2},
};

std::optional<int> parse_suffix(std::string_view name, std::string_view prefix) {
    if (!name.starts_with(prefix) || name.size() == prefix.size()) {
        return std::nullopt;
    }
    int value = 0;
    auto digits = name.substr(prefix.size());
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
        return std::nullopt;
    }
    return value;
}

CatalogEntry make_entry(std::string name, PureState state, ExpectedValues expected, CatalogStatus status = CatalogStatus::kVerified) {
    return CatalogEntry{std::move(name), std::move(state), std::move(expected), status, {}};
}

PureState ghz_state(int n) {
    if (n < 2 || n > kMaxQubits) {
        throw Error(ErrorCode::kUnknownName, "ghz needs 2 <= n <= " + std::to_string(kMaxQubits));
    }
    return render_terms(n, {{1, 0, std::string(n, '0')}, {1, 0, std::string(n, '1')}}, 1 / std::numbers::sqrt2);
}

PureState bellprod8_state() {
    std::vector<SymbolicTerm> terms;
    for (int pattern = 0; pattern < 16; ++pattern) {
        std::string bits;
        for (int pair = 3; pair >= 0; --pair) {
            char b = ((pattern >> pair) & 1) ? '1' : '0';
            bits += b;
            bits += b;
        }
        terms.push_back({1, 0, bits});
    }
    return render_terms(8, terms, 0.25);
}

/// The state is a sum of four products of a (1,2,7,8) factor and a (3,4,5,6) factor.
PureState zha8_printed_state() {
    using Factor = std::vector<std::pair<int, std::string>>;
    const std::vector<std::pair<Factor, Factor>> products = {
        {{{1, "0000"}, {1, "0011"}, {-1, "1101"}, {1, "1110"}}, {{1, "0000"}, {1, "0111"}, {-1, "1001"}, {1, "1110"}}},
        {{{-1, "0001"}, {1, "0010"}, {1, "1100"}, {1, "1111"}}, {{1, "0001"}, {1, "0110"}, {1, "1000"}, {-1, "1111"}}},
        {{{1, "0100"}, {-1, "0111"}, {1, "1001"}, {1, "1010"}}, {{-1, "0011"}, {1, "0100"}, {1, "1010"}, {1, "1101"}}},
        {{{1, "0101"}, {1, "0110"}, {1, "1000"}, {-1, "1011"}}, {{-1, "0010"}, {1, "0101"}, {-1, "1011"}, {-1, "1100"}}},
    };
    std::vector<SymbolicTerm> terms;
    for (const auto &[left, right] : products) {
        for (const auto &[sl, bl] : left) {
            for (const auto &[sr, br] : right) {
                terms.push_back({sl * sr, 0, bl + br});
            }
        }
    }
    PureState layout_order = render_terms(8, terms, 0.125);
    static constexpr int kLayout[] = {1, 2, 7, 8, 3, 4, 5, 6};
    return reorder_qubits(layout_order, kLayout);
}

ExpectedValues zha8_expected(std::string source) {
    ExpectedValues e;
    e.pi_me = R(6, 70);
    e.K_paper = R(0);
    e.uniformity = 3;
    e.verdict = Verdict::kMMES;
    e.subset_purities = {
        {QubitSubset{1, 2, 3, 6}, R(1, 4)},
        {QubitSubset{1, 2, 4, 5}, R(1, 4)},
        {QubitSubset{1, 2, 7, 8}, R(1, 4)},
        {QubitSubset{1, 3, 4, 7}, R(1, 8)},
        {QubitSubset{1, 3, 5, 8}, R(1, 8)},
        {QubitSubset{1, 4, 6, 8}, R(1, 8)},
        {QubitSubset{1, 5, 6, 7}, R(1, 8)},
        {QubitSubset{1, 2, 3, 4}, R(1, 16)},
    };
    e.source = std::move(source);
    return e;
}

std::vector<Complex> borras_amplitudes(const std::string &completion) {
    std::vector<Complex> amps(64);
    for (const auto &term : borras6_printed_terms()) {
        const std::string &bits = term.bits.size() == 6 ? term.bits : completion;
        amps[std::stoul(bits, nullptr, 2)] += 0.25 * term.sign * kOmegaPowers[term.omega_power];
    }
    return amps;
}

}  // namespace

std::string_view status_name(CatalogStatus s) {
    switch (s) {
        case CatalogStatus::kVerified:
            return "Verified";
        case CatalogStatus::kPrintedWithTypo:
            return "PrintedWithTypo";
        case CatalogStatus::kRepaired:
            return "Repaired";
    }
    return "?";
}

std::string bit_string(std::size_t index, int n) {
    std::string out(static_cast<std::size_t>(n), '0');
    for (int q = 1; q <= n; ++q) {
        if ((index >> bit_of_label(n, q)) & 1) {
            out[q - 1] = '1';
        }
    }
    return out;
}

PureState render_terms(int n, const std::vector<SymbolicTerm> &terms, double normalizer) {
    std::vector<Complex> amps(std::size_t{1} << n);
    std::set<std::string> seen;
    for (const auto &term : terms) {
        if (static_cast<int>(term.bits.size()) != n ||
            !std::all_of(term.bits.begin(), term.bits.end(), [](char c) {
                return c == '0' || c == '1';
            })) {
            throw Error(
                ErrorCode::kMalformedSource,
                "ket |" + term.bits + "> is not a " + std::to_string(n) + "-bit basis label");
        }
        if (!seen.insert(term.bits).second) {
            throw Error(ErrorCode::kMalformedSource, "ket |" + term.bits + "> appears twice");
        }
        amps[std::stoul(term.bits, nullptr, 2)] = normalizer * term.sign * kOmegaPowers[((term.omega_power % 3) + 3) % 3];
    }
    return make_state(n, std::move(amps));
}

std::vector<SymbolicTerm> borras6_printed_terms() {
    return {
        {1, 0, "000000"},
        {1, 0, "111000"},
        {-1, 0, "001001"},
        {1, 0, std::string(kBorrasMalformed)},
        {1, 0, "011010"},
        {-1, 0, "100010"},
        {-1, 0, "010011"},
        {-1, 0, "101011"},
        {1, 0, "010100"},
        {-1, 0, "101100"},
        {1, 0, "011101"},
        {1, 0, "100101"},
        {1, 0, "001110"},
        {1, 0, "110110"},
        {1, 0, "000111"},
        {-1, 0, "111111"},
    };
}

RepairReport borras6_repair() {
    RepairReport report;
    report.malformed_bits = std::string(kBorrasMalformed);
    std::set<std::string> completions;
    for (std::size_t pos = 0; pos <= kBorrasMalformed.size(); ++pos) {
        for (char b : {'0', '1'}) {
            std::string bits(kBorrasMalformed);
            bits.insert(bits.begin() + static_cast<std::ptrdiff_t>(pos), b);
            completions.insert(bits);
        }
    }
    for (const auto &bits : completions) {
        RepairCandidate c;
        c.bits = bits;
        auto amps = borras_amplitudes(bits);
        double norm2 = 0;
        for (const auto &a : amps) {
            norm2 += std::norm(a);
        }
        c.norm = std::sqrt(norm2);
        PureState raw = make_state(6, std::move(amps), Normalization::kRescale);
        auto d = exact_decomposition(raw);
        c.pi_me = d.pi_me_direct;
        c.K_exact = d.K_exact;
        c.accepted = std::abs(c.norm - 1) <= kNormTolerance && c.K_exact < 1e-10;
        if (c.accepted) {
            report.chosen_bits = report.chosen_bits.empty() ? bits : report.chosen_bits + "," + bits;
        }
        report.candidates.push_back(c);
    }
    return report;
}

CatalogEntry borras6_repaired() {
    auto report = borras6_repair();
    auto accepted = std::count_if(report.candidates.begin(), report.candidates.end(), [](const auto &c) {
        return c.accepted;
    });
    if (accepted != 1) {
        throw Error(
            ErrorCode::kRepairFailed,
            std::to_string(accepted) + " completions of |" + report.malformed_bits + "> satisfy the repair oracle");
    }
    ExpectedValues e;
    e.pi_me = R(1, 8);
    e.K_paper = R(0);
    e.K_exact = R(0);
    e.uniformity = 3;
    e.verdict = Verdict::kMMES;
    e.source = "six-qubit state with the five-bit ket completed";
    CatalogEntry entry = make_entry(
        "borras6_repaired",
        make_state(6, borras_amplitudes(report.chosen_bits)),
        std::move(e),
        CatalogStatus::kRepaired);
    entry.notes = "|" + report.malformed_bits + "> completed to |" + report.chosen_bits + ">";
    return entry;
}

double unitarity_deviation(const Eigen::MatrixXcd &m) {
    Eigen::MatrixXcd gram = m.adjoint() * m;
    return (gram - Eigen::MatrixXcd::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
}

LocalUnitary::LocalUnitary(Eigen::MatrixXcd matrix) : matrix_(std::move(matrix)) {
    Eigen::Index dim = matrix_.rows();
    if (dim < 2 || matrix_.cols() != dim || (dim & (dim - 1)) != 0) {
        throw Error(ErrorCode::kNotUnitary, "local unitary must be square with power-of-two dimension >= 2");
    }
    while ((Eigen::Index{1} << arity_) < dim) {
        ++arity_;
    }
    if (mmes::unitarity_deviation(matrix_) > 1e-12) {
        throw Error(ErrorCode::kNotUnitary, "matrix is not unitary within 1e-12");
    }
}

double LocalUnitary::unitarity_deviation() const {
    return mmes::unitarity_deviation(matrix_);
}

LocalUnitary u2468() {
    static constexpr int kEntries[16][16] = {
        {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0},
        {0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 1},
        {0, 0, 1, 0, -1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, -1},
        {1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, -1, 0, 0, -1, 0},
        {0, 0, 0, 0, 0, 0, 1, 1, 0, 0, -1, 0, -1, 0, 0, 0},
        {0, 1, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0},
        {0, -1, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0},
        {0, 0, 0, 0, 0, 0, 1, -1, 0, 0, -1, 0, 1, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 1, 0, 1, 0, 0, 0},
        {0, -1, 0, -1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0},
        {0, 1, 0, -1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0},
        {0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 1, 0, -1, 0, 0, 0},
        {1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0},
        {0, 0, 1, 0, -1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1},
        {0, 0, 1, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, -1},
        {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0},
    };
    Eigen::MatrixXcd m(16, 16);
    for (int r = 0; r < 16; ++r) {
        for (int c = 0; c < 16; ++c) {
            m(r, c) = 0.5 * kEntries[r][c];
        }
    }
    return LocalUnitary(std::move(m));
}

PureState apply_local_unitary(const PureState &state, std::span<const int> targets, const LocalUnitary &u) {
    int n = state.num_qubits();
    if (static_cast<int>(targets.size()) != u.arity()) {
        throw Error(
            ErrorCode::kArityMismatch,
            std::to_string(u.arity()) + "-qubit unitary applied to " + std::to_string(targets.size()) + " targets");
    }
    std::uint32_t target_mask = 0;
    std::vector<int> bits;
    for (int q : targets) {
        if (q < 1 || q > n) {
            throw Error(ErrorCode::kLabelOutOfRange, "target qubit " + std::to_string(q) + " outside [1, " + std::to_string(n) + "]");
        }
        std::uint32_t bit = std::uint32_t{1} << bit_of_label(n, q);
        if (target_mask & bit) {
            throw Error(ErrorCode::kInvalidSubset, "target qubit " + std::to_string(q) + " repeated");
        }
        target_mask |= bit;
        bits.push_back(bit_of_label(n, q));
    }
    auto scatter = [&](std::uint32_t local) {
        std::uint32_t out = 0;
        int k = static_cast<int>(bits.size());
        for (int j = 0; j < k; ++j) {
            if ((local >> (k - 1 - j)) & 1) {
                out |= std::uint32_t{1} << bits[j];
            }
        }
        return out;
    };
    std::uint32_t local_dim = std::uint32_t{1} << bits.size();
    std::vector<std::uint32_t> offsets(local_dim);
    for (std::uint32_t s = 0; s < local_dim; ++s) {
        offsets[s] = scatter(s);
    }

    auto in = state.amplitudes();
    std::vector<Complex> out(in.size());
    const auto &m = u.matrix();
    for (std::uint32_t base = 0; base < in.size(); ++base) {
        if (base & target_mask) {
            continue;
        }
        for (std::uint32_t r = 0; r < local_dim; ++r) {
            Complex acc = 0;
            for (std::uint32_t s = 0; s < local_dim; ++s) {
                acc += m(r, s) * in[base | offsets[s]];
            }
            out[base | offsets[r]] = acc;
        }
    }
    return make_state(n, std::move(out), Normalization::kRescale);
}

PureState apply_local_unitary(const PureState &state, const QubitSubset &targets, const LocalUnitary &u) {
    return apply_local_unitary(state, std::span<const int>(targets.labels()), u);
}

PureState reorder_qubits(const PureState &state, std::span<const int> layout) {
    int n = state.num_qubits();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    if (static_cast<int>(layout.size()) != n) {
        throw Error(ErrorCode::kNotABijection, "layout must list every qubit exactly once");
    }
    for (int q : layout) {
        if (q < 1 || q > n || seen[q]) {
            throw Error(ErrorCode::kNotABijection, "layout must list every qubit exactly once");
        }
        seen[q] = true;
    }
    auto in = state.amplitudes();
    std::vector<Complex> out(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) {
        std::size_t j = 0;
        for (int pos = 1; pos <= n; ++pos) {
            if ((i >> bit_of_label(n, pos)) & 1) {
                j |= std::size_t{1} << bit_of_label(n, layout[pos - 1]);
            }
        }
        out[j] = in[i];
    }
    return make_state(n, std::move(out), Normalization::kRescale);
}

OverlapAudit compare_states(const PureState &a, const PureState &b, double tol) {
    OverlapAudit audit;
    Complex ip = inner_product(a, b);
    audit.overlap = std::abs(ip);
    // Align b to a: b * conj(phase) has the largest real overlap with a.
    audit.phase = audit.overlap > 0 ? ip / audit.overlap : Complex(1);
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        Complex aligned = b[i] * std::conj(audit.phase);
        if (std::abs(a[i] - aligned) > tol) {
            audit.differences.push_back({i, bit_string(i, a.num_qubits()), a[i], aligned});
        }
    }
    return audit;
}

std::vector<std::string> catalog_names() {
    return {
        "bell2",
        "ghz3",
        "hs4",
        "yc4",
        "brown5",
        "borras6_printed",
        "borras6_repaired",
        "ghz8",
        "product8",
        "bellprod8",
        "zha8_printed",
        "zha8_constructed",
    };
}

CatalogEntry catalog_state(std::string_view name) {
    if (name == "bell2") {
        ExpectedValues e;
        e.pi_me = R(1, 2);
        e.K_paper = R(0);
        e.uniformity = 1;
        e.verdict = Verdict::kMMES;
        e.subset_purities = {{QubitSubset{1}, R(1, 2)}};
        e.source = "two-qubit Bell state";
        return make_entry("bell2", ghz_state(2), std::move(e));
    }
    if (auto n = parse_suffix(name, "ghz")) {
        ExpectedValues e;
        e.pi_me = R(1, 2);
        e.uniformity = 1;
        if (*n == 2 || *n == 3) {
            e.K_paper = R(0);
            e.verdict = Verdict::kMMES;
        } else if (*n == 8) {
            e.K_paper = R(29, 70);
            e.verdict = Verdict::kNotMMES;
        }
        e.source = "GHZ state";
        return make_entry(std::string(name), ghz_state(*n), std::move(e));
    }
    if (auto n = parse_suffix(name, "product")) {
        if (*n < 2 || *n > kMaxQubits) {
            throw Error(ErrorCode::kUnknownName, "product needs 2 <= n <= " + std::to_string(kMaxQubits));
        }
        ExpectedValues e;
        e.pi_me = R(1);
        e.uniformity = 0;
        if (*n == 8) {
            e.K_paper = R(64, 70);
            e.verdict = Verdict::kNotMMES;
        }
        e.source = "product state |0...0>";
        return make_entry(std::string(name), basis_state(std::string(*n, '0')), std::move(e));
    }
    if (name == "hs4") {
        ExpectedValues e;
        e.pi_me = R(1, 3);
        e.K_paper = R(0);
        e.uniformity = 1;
        e.subset_purities = {
            {QubitSubset{1, 2}, R(1, 3)},
            {QubitSubset{1, 3}, R(1, 3)},
            {QubitSubset{1, 4}, R(1, 3)},
        };
        e.verdict = Verdict::kMMES;
        e.source = "four-qubit state with maximal average entropy";
        return make_entry(
            "hs4",
            render_terms(
                4,
                {{1, 0, "0011"}, {1, 0, "1100"}, {1, 1, "0101"}, {1, 1, "1010"}, {1, 2, "0110"}, {1, 2, "1001"}},
                1 / std::sqrt(6.0)),
            std::move(e));
    }
    if (name == "yc4") {
        ExpectedValues e;
        e.pi_me = R(1, 3);
        e.K_paper = R(0);
        e.uniformity = 1;
        e.subset_purities = {{QubitSubset{1, 4}, R(1, 2)}};
        e.verdict = Verdict::kMMES;
        e.source = "genuine four-qubit entangled state used for teleportation";
        return make_entry(
            "yc4",
            render_terms(
                4,
                {{1, 0, "0000"},
                 {-1, 0, "0011"},
                 {-1, 0, "0101"},
                 {1, 0, "0110"},
                 {1, 0, "1001"},
                 {1, 0, "1010"},
                 {1, 0, "1100"},
                 {1, 0, "1111"}},
                1 / (2 * std::numbers::sqrt2)),
            std::move(e));
    }
    if (name == "brown5") {
        // (|001>|phi-> + |010>|psi-> + |100>|phi+> + |111>|psi+>)/2 with
        // psi+- = (|00> +- |11>)/sqrt2 and phi+- = (|01> +- |10>)/sqrt2.
        ExpectedValues e;
        e.pi_me = R(1, 4);
        e.K_paper = R(0);
        e.uniformity = 2;
        e.sigma_me = R(0);
        e.verdict = Verdict::kMMES;
        e.source = "five-qubit state more entangled than GHZ5";
        return make_entry(
            "brown5",
            render_terms(
                5,
                {{1, 0, "00101"},
                 {-1, 0, "00110"},
                 {1, 0, "01000"},
                 {-1, 0, "01011"},
                 {1, 0, "10001"},
                 {1, 0, "10010"},
                 {1, 0, "11100"},
                 {1, 0, "11111"}},
                1 / (2 * std::numbers::sqrt2)),
            std::move(e));
    }
    if (name == "borras6_printed") {
        // Throws kMalformedSource on the five-bit ket.
        render_terms(6, borras6_printed_terms(), 0.25);
        throw Error(ErrorCode::kMalformedSource, "borras6_printed unexpectedly rendered");
    }
    if (name == "borras6_repaired") {
        return borras6_repaired();
    }
    if (name == "bellprod8") {
        ExpectedValues e;
        e.pi_me = R(19, 70);
        e.pi_me_strictly_above = R(6, 70);
        e.uniformity = 1;
        e.subset_purities = {{QubitSubset{1, 3, 5, 7}, R(1, 16)}, {QubitSubset{1, 2, 3, 4}, R(1)}};
        e.verdict = Verdict::kNotMMES;
        e.source = "four Bell pairs (12)(34)(56)(78)";
        return make_entry("bellprod8", bellprod8_state(), std::move(e));
    }
    if (name == "zha8_printed") {
        return make_entry("zha8_printed", zha8_printed_state(), zha8_expected("eight-qubit state as printed"));
    }
    if (name == "zha8_constructed") {
        PureState constructed = apply_local_unitary(bellprod8_state(), QubitSubset{2, 4, 6, 8}, u2468());
        CatalogEntry entry = make_entry(
            "zha8_constructed",
            std::move(constructed),
            zha8_expected("U2468 applied to bellprod8 on qubits 2,4,6,8"),
            CatalogStatus::kPrintedWithTypo);
        entry.notes =
            "the printed 16x16 matrix does not map the Bell product onto the printed eight-qubit state";
        return entry;
    }
    throw Error(ErrorCode::kUnknownName, "unknown catalog state '" + std::string(name) + "'");
}

}  // namespace mmes
