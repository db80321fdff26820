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

#include "mmes/sampling.h"

#include "mmes/catalog.h"

namespace mmes {

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{
        static_cast<std::uint32_t>(seed),
        static_cast<std::uint32_t>(seed >> 32),
        static_cast<std::uint32_t>(stream),
        static_cast<std::uint32_t>(stream >> 32)};
    return Rng(seq);
}

PureState haar_random_state(int n, Rng &rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Complex> amps(std::size_t{1} << n);
    for (auto &a : amps) {
        double re = gauss(rng);
        double im = gauss(rng);
        a = Complex(re, im);
    }
    return make_state(n, std::move(amps), Normalization::kRescale);
}

Eigen::Matrix2cd haar_random_unitary2(Rng &rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::Matrix2cd z;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            double re = gauss(rng);
            double im = gauss(rng);
            z(r, c) = Complex(re, im);
        }
    }
    Eigen::HouseholderQR<Eigen::Matrix2cd> qr(z);
    Eigen::Matrix2cd q = qr.householderQ();
    Eigen::Matrix2cd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < 2; ++i) {
        Complex d = r(i, i);
        if (std::abs(d) > 0) {
            q.col(i) *= d / std::abs(d);
        }
    }
    return q;
}

PureState apply_random_local_unitaries(const PureState &state, Rng &rng) {
    PureState out = state;
    for (int q = 1; q <= state.num_qubits(); ++q) {
        LocalUnitary u(haar_random_unitary2(rng));
        out = apply_local_unitary(out, QubitSubset{q}, u);
    }
    return out;
}

}  // namespace mmes
