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

#ifndef MMES_SRC_LAYOUT_H
#define MMES_SRC_LAYOUT_H

#include <cstdint>
#include <vector>

#include "mmes/qstate.h"

namespace mmes::detail {

/// Row/column coordinates of every amplitude when the state vector is reshaped
/// into a (kept qubits) x (traced qubits) matrix.
struct SubsetLayout {
    int kept_qubits = 0;
    int traced_qubits = 0;
    std::vector<std::uint32_t> row;
    std::vector<std::uint32_t> col;
};

SubsetLayout make_layout(int n, const QubitSubset &keep);

/// Amplitudes arranged as the 2^k x 2^(n-k) matrix M with rho_keep = M M^dagger.
Eigen::MatrixXcd reshape(std::span<const Complex> amplitudes, const SubsetLayout &layout);

}  // namespace mmes::detail

#endif
