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

#ifndef MMES_OPTIMIZER_H
#define MMES_OPTIMIZER_H

#include <cstdint>
#include <span>
#include <vector>

#include "mmes/qstate.h"

namespace mmes {

namespace detail {
struct SubsetLayout;
}

struct OptimizerConfig {
    int n = 4;
    int restarts = 20;
    int max_iterations = 5000;
    double gradient_tolerance = 1e-7;
    int history = 10;          ///< L-BFGS memory
    double armijo = 1e-4;      ///< sufficient-decrease constant
    double backtrack = 0.5;    ///< step shrink factor
    int max_backtracks = 60;
    std::uint64_t seed = 1;
    int threads = 0;  ///< 0 picks std::thread::hardware_concurrency()

    /// Throws kOutOfRange on restarts < 1, non-positive tolerances, or n outside [2, 12].
    void validate() const;
};

struct RestartTrace {
    std::vector<double> best_values;  ///< objective after each accepted step, starting value first
    int iterations = 0;
    bool converged = false;
    double final_value = 0;
};

struct OptimizationResult {
    PureState best_state;
    double pi_me = 0;
    double sigma_me = 0;
    int iterations_used = 0;  ///< summed over restarts
    bool converged = false;   ///< the best restart met the gradient tolerance
    int best_restart = 0;
    std::vector<RestartTrace> restarts;
};

/// pi_ME of the state with amplitudes params[2i] + i params[2i+1], normalized
/// inside the function so the value is invariant under params -> c * params.
class PurityObjective {
   public:
    explicit PurityObjective(int n);
    ~PurityObjective();
    PurityObjective(PurityObjective &&) noexcept;
    PurityObjective &operator=(PurityObjective &&) noexcept;

    int num_qubits() const noexcept {
        return n_;
    }
    std::size_t num_params() const noexcept {
        return std::size_t{2} << n_;
    }

    /// Throws kWrongLength or kZeroVector.
    double value(std::span<const double> params) const;
    double value_and_gradient(std::span<const double> params, std::span<double> gradient) const;

   private:
    int n_;
    std::vector<detail::SubsetLayout> layouts_;
};

/// Free-function forms; the qubit count is inferred from params.size() = 2 * 2^n.
double objective(std::span<const double> params);
std::vector<double> gradient(std::span<const double> params);

std::vector<double> state_to_params(const PureState &state);
PureState params_to_state(std::span<const double> params);

/// Population standard deviation of the floor(n/2)-qubit subsystem purities.
double sigma_me(const PureState &state);

/// L-BFGS with Armijo backtracking from `params`, updated in place.
RestartTrace minimize_from(const PurityObjective &f, std::vector<double> &params, const OptimizerConfig &config);

/// Best of config.restarts runs from Haar-random starts. Restart r draws from
/// make_rng(config.seed, r); the lowest value wins, ties go to the lower index.
OptimizationResult minimize(const OptimizerConfig &config);

}  // namespace mmes

#endif
