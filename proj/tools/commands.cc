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

#include "commands.h"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>
#include "mmes/catalog.h"
#include "mmes/criterion.h"
#include "mmes/error.h"
#include "mmes/invariants.h"
#include "mmes/optimizer.h"
#include "mmes/report.h"
#include "mmes/statefile.h"

namespace mmes::cli {

namespace {

using nlohmann::json;

/// Writes `text` to options.output when set, otherwise to out.
void emit(const CommonOptions &options, const std::string &text, std::ostream &out) {
    if (options.output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(options.output, std::ios::binary);
    if (!file || !(file << text)) {
        throw Error(ErrorCode::kIoError, "cannot write " + options.output);
    }
}

std::string decimal(double x) {
    std::ostringstream s;
    s << std::setprecision(12) << x;
    return s.str();
}

std::string both(double x) {
    auto r = recognize_rational(x);
    if (r) {
        return r->denominator() == 1 ? to_string(*r) : to_string(*r) + " (" + decimal(x) + ")";
    }
    return decimal(x);
}

struct LoadedState {
    std::string label;
    PureState state;
};

LoadedState load_state(const AnalyzeOptions &options) {
    if (!options.catalog_name.empty() && !options.path.empty()) {
        throw Error(ErrorCode::kParseError, "give either a state file or --catalog, not both");
    }
    if (!options.catalog_name.empty()) {
        return {options.catalog_name, catalog_state(options.catalog_name).state};
    }
    if (options.path.empty()) {
        throw Error(ErrorCode::kParseError, "no state given: pass a state file or --catalog NAME");
    }
    return {options.path, read_state_file(options.path)};
}

int depth_for(const AnalyzeOptions &options, int n) {
    int depth = options.depth.value_or(n / 2);
    if (depth < 1 || depth > n - 1) {
        throw Error(ErrorCode::kOutOfRange, "--depth must lie in [1, n-1] = [1, " + std::to_string(n - 1) + "]");
    }
    return depth;
}

int usage_error(std::ostream &err, const Error &e) {
    err << "error: " << error_code_name(e.code()) << ": " << e.what() << '\n';
    return kExitUsage;
}

json report_json(const std::string &label, const PureState &state, const CriterionReport &r, int depth) {
    json doc;
    doc["state"] = label;
    doc["n"] = r.n;
    doc["pi_me"] = r.pi_me;
    doc["sigma_me"] = sigma_me(state);
    doc["naive_bound"] = to_string(r.naive_bound);
    doc["C_paper"] = r.C_paper ? json(to_string(*r.C_paper)) : json(nullptr);
    doc["K_paper"] = r.K_paper ? json(*r.K_paper) : json(nullptr);
    doc["K_exact"] = r.K_exact;
    doc["decomposition_residual"] = r.decomposition_residual;
    doc["uniformity"] = r.uniformity;
    doc["verdict"] = std::string(verdict_name(r.verdict));
    doc["audit_delta"] = r.audit_delta ? json(*r.audit_delta) : json(nullptr);
    json profile = json::object();
    for (int k = 1; k <= depth; ++k) {
        json entries = json::object();
        for (const auto &e : purity_profile(state, k)) {
            entries[e.subset.str()] = e.purity;
        }
        profile[std::to_string(k)] = std::move(entries);
    }
    doc["profile"] = std::move(profile);
    json inv = json::object();
    for (const auto &[subset, f] : invariant_table(state, depth).values) {
        inv[subset.str()] = f;
    }
    doc["invariants"] = std::move(inv);
    return doc;
}

}  // namespace

int run_verify_catalog(const CommonOptions &options, std::ostream &out, std::ostream &err) {
    std::vector<CatalogCheck> checks;
    try {
        checks = verify_catalog(options.tol);
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    bool all_passed = true;
    std::ostringstream text;
    if (options.format == Format::kJson) {
        json rows = json::array();
        for (const auto &c : checks) {
            json row{{"name", c.name}, {"n", c.n}, {"status", std::string(status_name(c.status))}, {"passed", c.passed}};
            if (c.report) {
                row["pi_me"] = c.report->pi_me;
                row["K_paper"] = c.report->K_paper ? json(*c.report->K_paper) : json(nullptr);
                row["K_exact"] = c.report->K_exact;
                row["decomposition_residual"] = c.report->decomposition_residual;
                row["uniformity"] = c.report->uniformity;
                row["verdict"] = std::string(verdict_name(c.report->verdict));
            }
            row["mismatches"] = c.mismatches;
            row["notes"] = c.notes;
            rows.push_back(std::move(row));
            all_passed = all_passed && c.passed;
        }
        text << json{{"catalog", rows}, {"passed", all_passed}}.dump(2) << '\n';
    } else {
        char sep = options.format == Format::kCsv ? ',' : ' ';
        auto cell = [&](const std::string &s, int width) {
            if (options.format == Format::kCsv) {
                return s;
            }
            std::ostringstream o;
            o << std::left << std::setw(width) << s;
            return o.str();
        };
        text << cell("name", 18) << sep << cell("n", 2) << sep << cell("pi_ME", 8) << sep << cell("K_paper", 8) << sep
             << cell("K_exact_resid", 13) << sep << cell("unif", 4) << sep << cell("verdict", 12) << sep
             << cell("status", 15) << sep << "result\n";
        for (const auto &c : checks) {
            std::string pi = "-", kp = "-", resid = "-", unif = "-", verdict = "-";
            if (c.report) {
                pi = format_value(c.report->pi_me);
                kp = c.report->K_paper ? format_value(*c.report->K_paper) : "-";
                std::ostringstream r;
                r << std::setprecision(2) << c.report->decomposition_residual;
                resid = r.str();
                unif = std::to_string(c.report->uniformity);
                verdict = std::string(verdict_name(c.report->verdict));
            }
            text << cell(c.name, 18) << sep << cell(std::to_string(c.n), 2) << sep << cell(pi, 8) << sep
                 << cell(kp, 8) << sep << cell(resid, 13) << sep << cell(unif, 4) << sep << cell(verdict, 12) << sep
                 << cell(std::string(status_name(c.status)), 15) << sep << (c.passed ? "ok" : "FAIL") << '\n';
            all_passed = all_passed && c.passed;
        }
        if (options.format == Format::kText) {
            for (const auto &c : checks) {
                for (const auto &m : c.mismatches) {
                    text << "  " << c.name << ": " << m << '\n';
                }
                for (const auto &note : c.notes) {
                    text << "  " << c.name << ": note: " << note << '\n';
                }
            }
            text << (all_passed ? "catalog verified\n" : "catalog verification FAILED\n");
        }
    }
    try {
        emit(options, text.str(), out);
    } catch (const Error &e) {
        return usage_error(err, e);
    }
    return all_passed ? kExitOk : kExitFailure;
}

int run_analyze(const AnalyzeOptions &options, std::ostream &out, std::ostream &err) {
    try {
        auto [label, state] = load_state(options);
        int n = state.num_qubits();
        if (n < 2) {
            throw Error(ErrorCode::kQubitCountOutOfRange, "analysis needs at least 2 qubits");
        }
        int depth = depth_for(options, n);
        auto r = mmes_verdict(state, options.common.tol);
        std::ostringstream text;
        if (options.common.format == Format::kJson) {
            text << report_json(label, state, r, depth).dump(2) << '\n';
        } else if (options.common.format == Format::kCsv) {
            text << "size,subset,purity\n";
            for (int k = 1; k <= depth; ++k) {
                for (const auto &e : purity_profile(state, k)) {
                    text << k << ',' << e.subset.str() << ',' << std::setprecision(17) << e.purity << '\n';
                }
            }
        } else {
            text << "state       " << label << " (n = " << n << ")\n";
            text << "pi_ME       " << both(r.pi_me) << '\n';
            text << "sigma_ME    " << both(sigma_me(state)) << '\n';
            text << "2^-[n/2]    " << to_string(r.naive_bound) << '\n';
            text << "C           " << (r.C_paper ? to_string(*r.C_paper) : "unknown") << '\n';
            if (r.K_paper) {
                text << "K_paper     " << both(*r.K_paper) << "  (C + K_paper - pi_ME = " << decimal(*r.audit_delta)
                     << ")\n";
            }
            text << "K_exact     " << both(r.K_exact) << "  (residual " << std::setprecision(2)
                 << r.decomposition_residual << ")\n";
            text << "uniformity  " << r.uniformity << '\n';
            text << "verdict     " << verdict_name(r.verdict) << '\n';
            text << "purities\n";
            for (const auto &h : purity_histograms(state, depth)) {
                text << "  size " << h.size << ':';
                for (const auto &bin : h.bins) {
                    text << "  " << format_value(bin.value) << " x" << bin.count;
                }
                text << '\n';
            }
            text << "invariants (size <= " << n / 2 << ")\n";
            for (const auto &[subset, f] : invariant_table(state, n / 2).values) {
                text << "  F_" << subset.str() << " = " << format_value(f) << '\n';
            }
        }
        emit(options.common, text.str(), out);
        return kExitOk;
    } catch (const Error &e) {
        return usage_error(err, e);
    }
}

int run_invariants(const AnalyzeOptions &options, std::ostream &out, std::ostream &err) {
    try {
        auto [label, state] = load_state(options);
        int n = state.num_qubits();
        int depth = options.depth.value_or(std::max(1, n / 2));
        if (depth < 1 || depth > n) {
            throw Error(ErrorCode::kOutOfRange, "--depth must lie in [1, n]");
        }
        auto table = invariant_table(state, depth);
        std::ostringstream text;
        if (options.common.format == Format::kJson) {
            json values = json::object();
            for (const auto &[subset, f] : table.values) {
                values[subset.str()] = f;
            }
            text << json{{"state", label}, {"n", n}, {"max_size", depth}, {"F", values}}.dump(2) << '\n';
        } else if (options.common.format == Format::kCsv) {
            text << "size,subset,F\n";
            for (const auto &[subset, f] : table.values) {
                text << subset.size() << ',' << subset.str() << ',' << std::setprecision(17) << f << '\n';
            }
        } else {
            for (const auto &[subset, f] : table.values) {
                text << "F_" << subset.str() << " = " << format_value(f) << '\n';
            }
        }
        emit(options.common, text.str(), out);
        return kExitOk;
    } catch (const Error &e) {
        return usage_error(err, e);
    }
}

int run_search(const SearchOptions &options, std::ostream &out, std::ostream &err) {
    OptimizerConfig config;
    config.n = options.n;
    config.restarts = options.restarts;
    config.seed = options.seed;
    config.max_iterations = options.max_iterations;
    config.threads = options.threads;
    try {
        config.validate();
    } catch (const Error &e) {
        return usage_error(err, e);
    }
    auto result = minimize(config);
    int converged = 0;
    for (const auto &t : result.restarts) {
        converged += t.converged ? 1 : 0;
    }
    std::ostringstream text;
    if (options.common.format == Format::kJson) {
        json traces = json::array();
        for (const auto &t : result.restarts) {
            traces.push_back({{"final_value", t.final_value}, {"iterations", t.iterations}, {"converged", t.converged}});
        }
        text << json{{"n", options.n},
                     {"seed", options.seed},
                     {"restarts", options.restarts},
                     {"pi_me", result.pi_me},
                     {"sigma_me", result.sigma_me},
                     {"naive_bound", std::ldexp(1.0, -(options.n / 2))},
                     {"best_restart", result.best_restart},
                     {"converged", result.converged},
                     {"iterations_used", result.iterations_used},
                     {"runs", traces}}
                    .dump(2)
             << '\n';
    } else {
        text << "n           " << options.n << '\n';
        text << "pi_ME       " << std::setprecision(12) << result.pi_me << '\n';
        text << "sigma_ME    " << std::setprecision(6) << result.sigma_me << '\n';
        text << "2^-[n/2]    " << std::setprecision(12) << std::ldexp(1.0, -(options.n / 2)) << '\n';
        if (has_paper_formula(options.n)) {
            text << "C           " << to_string(paper_constant_C(options.n)) << '\n';
        }
        text << "best run    #" << result.best_restart << " of " << options.restarts << " (seed " << options.seed
             << ")\n";
        text << "converged   " << converged << '/' << options.restarts << " runs, " << result.iterations_used
             << " iterations total\n";
    }
    out << text.str();
    if (!options.common.output.empty()) {
        try {
            write_state_file(options.common.output, result.best_state);
        } catch (const Error &e) {
            return usage_error(err, e);
        }
    }
    return kExitOk;
}

int run_report(const ReportOptions &options, std::ostream &out, std::ostream &err) {
    bool json_format = options.common.format == Format::kJson;
    std::string text;
    if (options.kind == "table1") {
        text = json_format ? table1_json() : table1_csv();
    } else if (options.kind == "fig1") {
        text = json_format ? fig1_json() : fig1_csv();
    } else if (options.kind == "fig2") {
        text = json_format ? fig2_json() : fig2_csv();
    } else {
        err << "error: unknown report '" << options.kind << "' (expected table1, fig1 or fig2)\n";
        return kExitUsage;
    }
    try {
        emit(options.common, text, out);
    } catch (const Error &e) {
        return usage_error(err, e);
    }
    return kExitOk;
}

}  // namespace mmes::cli
