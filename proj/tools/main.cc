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

#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "commands.h"

namespace {

using namespace mmes::cli;

void add_common(CLI::App *cmd, CommonOptions &options, bool with_format = true) {
    cmd->add_option("--tol", options.tol, "Tolerance for 'completely mixed' and verdicts")->check(CLI::PositiveNumber);
    if (with_format) {
        static const std::map<std::string, Format> kFormats = {
            {"text", Format::kText}, {"csv", Format::kCsv}, {"json", Format::kJson}};
        cmd->add_option("--format", options.format, "Output format")
            ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
    }
    cmd->add_option("--output,-o", options.output, "Write output to this file");
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Average subsystem purity and maximal multi-qubit entanglement checks"};
    app.require_subcommand(1);

    CommonOptions verify;
    auto *verify_cmd = app.add_subcommand("verify-catalog", "Check every catalog state against its reference values");
    add_common(verify_cmd, verify);

    AnalyzeOptions analyze;
    auto *analyze_cmd = app.add_subcommand("analyze", "Purities, invariants and verdict for one state");
    analyze_cmd->add_option("path", analyze.path, "State file (JSON)");
    analyze_cmd->add_option("--catalog", analyze.catalog_name, "Analyze a catalog state instead of a file");
    analyze_cmd->add_option("--depth", analyze.depth, "Largest subset size in the purity profile");
    add_common(analyze_cmd, analyze.common);

    AnalyzeOptions invariants;
    auto *invariants_cmd = app.add_subcommand("invariants", "Dump the local-unitary invariant table");
    invariants_cmd->add_option("path", invariants.path, "State file (JSON)");
    invariants_cmd->add_option("--catalog", invariants.catalog_name, "Use a catalog state instead of a file");
    invariants_cmd->add_option("--depth", invariants.depth, "Largest subset size (default floor(n/2))");
    add_common(invariants_cmd, invariants.common);

    SearchOptions search;
    auto *search_cmd = app.add_subcommand("search", "Minimize the average subsystem purity numerically");
    search_cmd->add_option("--n,-n", search.n, "Number of qubits")->required();
    search_cmd->add_option("--restarts", search.restarts, "Random restarts");
    search_cmd->add_option("--seed", search.seed, "Generator seed");
    search_cmd->add_option("--max-iterations", search.max_iterations, "Iteration cap per restart");
    search_cmd->add_option("--threads", search.threads, "Worker threads (0 = all cores)");
    add_common(search_cmd, search.common);

    ReportOptions report;
    auto *report_cmd = app.add_subcommand("report", "Emit bound tables and figure data");
    report_cmd->add_option("kind", report.kind, "table1, fig1 or fig2")->required();
    add_common(report_cmd, report.common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (*verify_cmd) {
        return run_verify_catalog(verify, std::cout, std::cerr);
    }
    if (*analyze_cmd) {
        return run_analyze(analyze, std::cout, std::cerr);
    }
    if (*invariants_cmd) {
        return run_invariants(invariants, std::cout, std::cerr);
    }
    if (*search_cmd) {
        return run_search(search, std::cout, std::cerr);
    }
    if (*report_cmd) {
        return run_report(report, std::cout, std::cerr);
    }
    return kExitUsage;
}
