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

#ifndef MMES_STATEFILE_H
#define MMES_STATEFILE_H

#include <filesystem>
#include <string>
#include <string_view>

#include "mmes/qstate.h"

namespace mmes {

/// State files are JSON documents:
///
///     {"n": 2, "amplitudes": [{"basis": "00", "re": 1, "im": 0},
///                              {"basis": "11", "re": 1, "im": 0}]}
///
/// Basis strings list q1..qn left to right; omitted basis states are zero;
/// "im" may be omitted. The vector is rescaled to unit norm on read.
/// Throws Error(kParseError) with "line L" in the message on malformed input.
PureState parse_state_json(std::string_view text);

/// Throws kIoError when the file cannot be read.
PureState read_state_file(const std::filesystem::path &path);

/// Writes every amplitude with magnitude above drop_below, full double precision.
std::string format_state_json(const PureState &state, double drop_below = 0);

void write_state_file(const std::filesystem::path &path, const PureState &state);

}  // namespace mmes

#endif
