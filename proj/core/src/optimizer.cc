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

#include "mmes/optimizer.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <deque>
#include <numeric>
#include <thread>

#include "layout.h"
#include "mmes/error.h"
#include "mmes/sampling.h"

namespace mmes {

namespace {

int qubits_for_params(std::size_t size) {
    for (int n = 1; n <= kMaxQubits; ++n) {
        if ((std::size_t{2} << n) == size) {
            return n;
        }
    }
    throw Error(ErrorCode::kWrongLength, "parameter vector length " + std::to_string(size) + " is not 2 * 2^n");
}

double dot(std::span<const double> a, std::span<const double> b) {
    return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

}  // namespace

void OptimizerConfig::validate() const {
    if (n < 2 || n > kMaxQubits) {
        throw Error(ErrorCode::kOutOfRange, "optimizer needs 2 <= n <= " + std::to_string(kMaxQubits));
    }
    if (restarts < 1 || max_iterations < 1 || history < 1 || max_backtracks < 1) {
        throw Error(ErrorCode::kOutOfRange, "restarts, iterations, history and backtracks must be >= 1");
    }
    if (!(gradient_tolerance > 0) || !(armijo > 0 && armijo < 1) || !(backtrack > 0 && backtrack < 1)) {
        throw Error(ErrorCode::kOutOfRange, "tolerances must be positive and step factors in (0, 1)");
    }
}

PurityObjective::PurityObjective(int n) : n_(n) {
    if (n < 2 || n > kMaxQubits) {
        throw Error(ErrorCode::kQubitCountOutOfRange, "objective needs 2 <= n <= " + std::to_string(kMaxQubits));
    }
    for (const auto &subset : subsets_of_size(n, n / 2)) {
        layouts_.push_back(detail::make_layout(n, subset));
    }
}

PurityObjective::~PurityObjective() = default;
PurityObjective::PurityObjective(PurityObjective &&) noexcept = default;
PurityObjective &PurityObjective::operator=(PurityObjective &&) noexcept = default;

double PurityObjective::value(std::span<const double> params) const {
    return value_and_gradient(params, {});
}

double PurityObjective::value_and_gradient(std::span<const double> params, std::span<double> grad) const {
    if (params.size() != num_params()) {
        throw Error(ErrorCode::kWrongLength, "expected " + std::to_string(num_params()) + " parameters");
    }
    double s = dot(params, params);
    if (!(s > 0)) {
        throw Error(ErrorCode::kZeroVector, "parameter vector is zero");
    }
    std::size_t dim = std::size_t{1} << n_;
    std::vector<Complex> z(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        z[i] = Complex(params[2 * i], params[2 * i + 1]);
    }
    bool want_gradient = !grad.empty();
    std::vector<Complex> g(want_gradient ? dim : 0);

    // P(x) = mean_A ||M_A M_A^dagger||_F^2 with M_A the unnormalized reshaping;
    // dP/d(Re z, Im z) = 4 (Re, Im) of (M M^dagger M) mapped back to amplitude order.
    double total = 0;
    for (const auto &layout : layouts_) {
        Eigen::MatrixXcd m = detail::reshape(z, layout);
        Eigen::MatrixXcd rm;
        if (m.rows() <= m.cols()) {
            Eigen::MatrixXcd rho = m * m.adjoint();
            total += rho.squaredNorm();
            if (want_gradient) {
                rm = rho * m;
            }
        } else {
            Eigen::MatrixXcd gram = m.adjoint() * m;
            total += gram.squaredNorm();
            if (want_gradient) {
                rm = m * gram;
            }
        }
        if (want_gradient) {
            for (std::size_t i = 0; i < dim; ++i) {
                g[i] += rm(layout.row[i], layout.col[i]);
            }
        }
    }
    double count = static_cast<double>(layouts_.size());
    double p = total / count;
    double f = p / (s * s);
    if (want_gradient) {
        if (grad.size() != params.size()) {
            throw Error(ErrorCode::kWrongLength, "gradient buffer has the wrong length");
        }
        double scale = 4 / (count * s * s);
        double radial = 4 * p / (s * s * s);
        for (std::size_t i = 0; i < dim; ++i) {
            grad[2 * i] = scale * g[i].real() - radial * params[2 * i];
            grad[2 * i + 1] = scale * g[i].imag() - radial * params[2 * i + 1];
        }
    }
    return f;
}

double objective(std::span<const double> params) {
    return PurityObjective(qubits_for_params(params.size())).value(params);
}

std::vector<double> gradient(std::span<const double> params) {
    std::vector<double> out(params.size());
    PurityObjective(qubits_for_params(params.size())).value_and_gradient(params, out);
    return out;
}

std::vector<double> state_to_params(const PureState &state) {
    std::vector<double> out;
    out.reserve(2 * state.dimension());
    for (const auto &a : state.amplitudes()) {
        out.push_back(a.real());
        out.push_back(a.imag());
    }
    return out;
}

PureState params_to_state(std::span<const double> params) {
    int n = qubits_for_params(params.size());
    std::vector<Complex> amps(params.size() / 2);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        amps[i] = Complex(params[2 * i], params[2 * i + 1]);
    }
    return make_state(n, std::move(amps), Normalization::kRescale);
}

double sigma_me(const PureState &state) {
    int n = state.num_qubits();
    if (n < 2) {
        throw Error(ErrorCode::kQubitCountOutOfRange, "sigma_ME needs at least 2 qubits");
    }
    auto profile = purity_profile(state, n / 2);
    double mean = 0;
    for (const auto &e : profile) {
        mean += e.purity;
    }
    mean /= static_cast<double>(profile.size());
    double var = 0;
    for (const auto &e : profile) {
        var += (e.purity - mean) * (e.purity - mean);
    }
    return std::sqrt(var / static_cast<double>(profile.size()));
}

RestartTrace minimize_from(const PurityObjective &f, std::vector<double> &x, const OptimizerConfig &config) {
    std::size_t dim = x.size();
    std::vector<double> g(dim), d(dim), x_new(dim), g_new(dim);
    std::deque<std::vector<double>> s_hist, y_hist;
    std::deque<double> rho_hist;

    RestartTrace trace;
    double fx = f.value_and_gradient(x, g);
    trace.best_values.push_back(fx);

    for (int iter = 0; iter < config.max_iterations; ++iter) {
        // Scale-free stationarity measure: ||grad|| * ||x|| does not change under x -> c x.
        if (std::sqrt(dot(g, g) * dot(x, x)) < config.gradient_tolerance) {
            trace.converged = true;
            break;
        }

        // Two-loop recursion.
        std::copy(g.begin(), g.end(), d.begin());
        std::vector<double> alpha(s_hist.size());
        for (std::size_t j = s_hist.size(); j-- > 0;) {
            alpha[j] = rho_hist[j] * dot(s_hist[j], d);
            for (std::size_t i = 0; i < dim; ++i) {
                d[i] -= alpha[j] * y_hist[j][i];
            }
        }
        double gamma = 1;
        if (!s_hist.empty()) {
            gamma = dot(s_hist.back(), y_hist.back()) / dot(y_hist.back(), y_hist.back());
        } else {
            gamma = std::sqrt(dot(x, x) / std::max(dot(g, g), 1e-300)) * 1e-2;
        }
        for (auto &v : d) {
            v *= gamma;
        }
        for (std::size_t j = 0; j < s_hist.size(); ++j) {
            double beta = rho_hist[j] * dot(y_hist[j], d);
            for (std::size_t i = 0; i < dim; ++i) {
                d[i] += s_hist[j][i] * (alpha[j] - beta);
            }
        }
        for (auto &v : d) {
            v = -v;
        }
        double slope = dot(g, d);
        if (!(slope < 0)) {
            s_hist.clear();
            y_hist.clear();
            rho_hist.clear();
            double scale = std::sqrt(dot(x, x) / std::max(dot(g, g), 1e-300)) * 1e-2;
            for (std::size_t i = 0; i < dim; ++i) {
                d[i] = -scale * g[i];
            }
            slope = dot(g, d);
        }

        double step = 1;
        double f_new = 0;
        bool accepted = false;
        for (int b = 0; b < config.max_backtracks; ++b) {
            for (std::size_t i = 0; i < dim; ++i) {
                x_new[i] = x[i] + step * d[i];
            }
            f_new = f.value_and_gradient(x_new, g_new);
            if (f_new <= fx + config.armijo * step * slope) {
                accepted = true;
                break;
            }
            step *= config.backtrack;
        }
        if (!accepted) {
            break;
        }

        std::vector<double> s(dim), y(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            s[i] = x_new[i] - x[i];
            y[i] = g_new[i] - g[i];
        }
        double sy = dot(s, y);
        if (sy > 1e-16 * std::sqrt(dot(s, s) * dot(y, y))) {
            s_hist.push_back(std::move(s));
            y_hist.push_back(std::move(y));
            rho_hist.push_back(1 / sy);
            if (static_cast<int>(s_hist.size()) > config.history) {
                s_hist.pop_front();
                y_hist.pop_front();
                rho_hist.pop_front();
            }
        }

        x.swap(x_new);
        g.swap(g_new);
        fx = f_new;
        ++trace.iterations;
        trace.best_values.push_back(std::min(trace.best_values.back(), fx));
    }
    trace.final_value = fx;
    return trace;
}

OptimizationResult minimize(const OptimizerConfig &config) {
    config.validate();
    PurityObjective f(config.n);

    struct Slot {
        RestartTrace trace;
        std::vector<double> params;
    };
    std::vector<Slot> slots(static_cast<std::size_t>(config.restarts));
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int r = next++; r < config.restarts; r = next++) {
            Rng rng = make_rng(config.seed, static_cast<std::uint64_t>(r));
            auto params = state_to_params(haar_random_state(config.n, rng));
            auto trace = minimize_from(f, params, config);
            slots[r] = Slot{std::move(trace), std::move(params)};
        }
    };
    int threads = config.threads > 0 ? config.threads : static_cast<int>(std::thread::hardware_concurrency());
    threads = std::clamp(threads, 1, config.restarts);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
    }

    int best = 0;
    for (int r = 1; r < config.restarts; ++r) {
        if (slots[r].trace.final_value < slots[best].trace.final_value) {
            best = r;
        }
    }
    PureState state = params_to_state(slots[best].params);
    OptimizationResult result{state, avg_subsystem_purity(state), sigma_me(state), 0, slots[best].trace.converged, best, {}};
    for (auto &slot : slots) {
        result.iterations_used += slot.trace.iterations;
        result.restarts.push_back(std::move(slot.trace));
    }
    return result;
}

}  // namespace mmes
