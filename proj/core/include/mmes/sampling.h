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

#ifndef MMES_SAMPLING_H
#define MMES_SAMPLING_H

#include <cstdint>
#include <random>

#include "mmes/qstate.h"

namespace mmes {

using Rng = std::mt19937_64;

/// Independent generator stream for (seed, stream); used to decorrelate optimizer restarts.
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

/// Haar-uniform pure state: i.i.d. standard complex Gaussian amplitudes, normalized.
PureState haar_random_state(int n, Rng &rng);

/// Haar-uniform 2x2 unitary (QR of a complex Gaussian matrix with the phase fix).
Eigen::Matrix2cd haar_random_unitary2(Rng &rng);

/// Applies a (not necessarily equal) random single-qubit unitary to every qubit.
PureState apply_random_local_unitaries(const PureState &state, Rng &rng);

}  // namespace mmes

#endif
