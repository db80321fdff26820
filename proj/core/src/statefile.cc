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

#include "mmes/statefile.h"

#include <fstream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>
#include "mmes/catalog.h"
#include "mmes/error.h"

namespace mmes {

namespace {

using nlohmann::json;

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

/// Line of the index-th "basis" key; the JSON DOM does not keep positions.
std::size_t line_of_record(std::string_view text, std::size_t index) {
    std::size_t pos = 0;
    for (std::size_t seen = 0;; ++seen) {
        pos = text.find("\"basis\"", pos);
        if (pos == std::string_view::npos) {
            return 0;
        }
        if (seen == index) {
            return line_and_column(text, pos).first;
        }
        ++pos;
    }
}

[[noreturn]] void fail_record(std::string_view text, std::size_t index, const std::string &what) {
    std::string where = "amplitude record " + std::to_string(index);
    if (auto line = line_of_record(text, index)) {
        where = "line " + std::to_string(line) + ", " + where;
    }
    throw Error(ErrorCode::kParseError, where + ": " + what);
}

double number_field(const json &record, const char *key, std::string_view text, std::size_t index, bool required) {
    auto it = record.find(key);
    if (it == record.end()) {
        if (required) {
            fail_record(text, index, std::string("missing field \"") + key + "\"");
        }
        return 0;
    }
    if (!it->is_number()) {
        fail_record(text, index, std::string("field \"") + key + "\" is not a number");
    }
    return it->get<double>();
}

}  // namespace

PureState parse_state_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        auto [line, col] = line_and_column(text, e.byte > 0 ? e.byte - 1 : 0);
        throw Error(
            ErrorCode::kParseError,
            "line " + std::to_string(line) + ", column " + std::to_string(col) + ": malformed JSON");
    }
    if (!doc.is_object()) {
        throw Error(ErrorCode::kParseError, "line 1: state file must be a JSON object");
    }
    auto n_it = doc.find("n");
    if (n_it == doc.end() || !n_it->is_number_integer()) {
        throw Error(ErrorCode::kParseError, "field \"n\" must be an integer");
    }
    int n = n_it->get<int>();
    if (n < 1 || n > kMaxQubits) {
        throw Error(ErrorCode::kParseError, "field \"n\" = " + std::to_string(n) + " outside [1, " + std::to_string(kMaxQubits) + "]");
    }
    auto amps_it = doc.find("amplitudes");
    if (amps_it == doc.end() || !amps_it->is_array()) {
        throw Error(ErrorCode::kParseError, "field \"amplitudes\" must be an array of {basis, re, im} records");
    }

    std::vector<Complex> amps(std::size_t{1} << n);
    std::map<std::string, std::size_t> first_seen;
    for (std::size_t i = 0; i < amps_it->size(); ++i) {
        const json &record = (*amps_it)[i];
        if (!record.is_object()) {
            fail_record(text, i, "record is not an object");
        }
        auto basis_it = record.find("basis");
        if (basis_it == record.end() || !basis_it->is_string()) {
            fail_record(text, i, "field \"basis\" must be a bitstring");
        }
        std::string bits = basis_it->get<std::string>();
        if (static_cast<int>(bits.size()) != n || bits.find_first_not_of("01") != std::string::npos) {
            fail_record(text, i, "basis \"" + bits + "\" is not a " + std::to_string(n) + "-bit string");
        }
        if (auto [it, inserted] = first_seen.emplace(bits, i); !inserted) {
            fail_record(
                text, i, "duplicate basis \"" + bits + "\" (first given in record " + std::to_string(it->second) + ")");
        }
        double re = number_field(record, "re", text, i, true);
        double im = number_field(record, "im", text, i, false);
        amps[std::stoul(bits, nullptr, 2)] = Complex(re, im);
    }
    try {
        return make_state(n, std::move(amps), Normalization::kRescale);
    } catch (const Error &e) {
        throw Error(ErrorCode::kParseError, std::string("state violates ") + std::string(error_code_name(e.code())) + ": " + e.what());
    }
}

PureState read_state_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::kIoError, "cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_state_json(buffer.str());
}

std::string format_state_json(const PureState &state, double drop_below) {
    json doc;
    doc["n"] = state.num_qubits();
    json records = json::array();
    for (std::size_t i = 0; i < state.dimension(); ++i) {
        if (std::abs(state[i]) > drop_below || (drop_below == 0 && state[i] != Complex(0))) {
            records.push_back({{"basis", bit_string(i, state.num_qubits())}, {"re", state[i].real()}, {"im", state[i].imag()}});
        }
    }
    doc["amplitudes"] = std::move(records);
    return doc.dump(2) + "\n";
}

void write_state_file(const std::filesystem::path &path, const PureState &state) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorCode::kIoError, "cannot write " + path.string());
    }
    out << format_state_json(state);
    if (!out) {
        throw Error(ErrorCode::kIoError, "failed writing " + path.string());
    }
}

}  // namespace mmes
