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

#ifndef MMES_TOOLS_COMMANDS_H
#define MMES_TOOLS_COMMANDS_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace mmes::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

enum class Format { kText, kCsv, kJson };

struct CommonOptions {
    double tol = 1e-9;
    Format format = Format::kText;
    std::string output;  ///< empty writes to the output stream
};

struct AnalyzeOptions {
    CommonOptions common;
    std::string path;
    std::string catalog_name;
    std::optional<int> depth;
};

struct SearchOptions {
    CommonOptions common;
    int n = 4;
    int restarts = 20;
    std::uint64_t seed = 1;
    int max_iterations = 5000;
    int threads = 0;
};

struct ReportOptions {
    CommonOptions common;
    std::string kind;
};

int run_verify_catalog(const CommonOptions &options, std::ostream &out, std::ostream &err);
int run_analyze(const AnalyzeOptions &options, std::ostream &out, std::ostream &err);
int run_invariants(const AnalyzeOptions &options, std::ostream &out, std::ostream &err);
int run_search(const SearchOptions &options, std::ostream &out, std::ostream &err);
int run_report(const ReportOptions &options, std::ostream &out, std::ostream &err);

}  // namespace mmes::cli

#endif
