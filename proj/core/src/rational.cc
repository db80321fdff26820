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

#include "mmes/rational.h"

#include <cmath>
#include <cstdio>

#include "mmes/error.h"

namespace mmes {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::kWrongLength:
            return "WrongLength";
        case ErrorCode::kNotNormalized:
            return "NotNormalized";
        case ErrorCode::kZeroVector:
            return "ZeroVector";
        case ErrorCode::kQubitCountOutOfRange:
            return "QubitCountOutOfRange";
        case ErrorCode::kEmptySubset:
            return "EmptySubset";
        case ErrorCode::kLabelOutOfRange:
            return "LabelOutOfRange";
        case ErrorCode::kInvalidSubset:
            return "InvalidSubset";
        case ErrorCode::kOutOfRange:
            return "OutOfRange";
        case ErrorCode::kIncompleteTable:
            return "IncompleteTable";
        case ErrorCode::kUnknownBound:
            return "UnknownBound";
        case ErrorCode::kUnsupportedN:
            return "UnsupportedN";
        case ErrorCode::kUnknownName:
            return "UnknownName";
        case ErrorCode::kMalformedSource:
            return "MalformedSource";
        case ErrorCode::kRepairFailed:
            return "RepairFailed";
        case ErrorCode::kArityMismatch:
            return "ArityMismatch";
        case ErrorCode::kNotABijection:
            return "NotABijection";
        case ErrorCode::kNotUnitary:
            return "NotUnitary";
        case ErrorCode::kParseError:
            return "ParseError";
        case ErrorCode::kIoError:
            return "IoError";
    }
    return "Unknown";
}

std::string to_string(const Rational &r) {
    if (r.denominator() == 1) {
        return std::to_string(r.numerator());
    }
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::optional<Rational> recognize_rational(double x, std::int64_t max_denominator, double tol) {
    if (!std::isfinite(x)) {
        return std::nullopt;
    }
    for (std::int64_t q = 1; q <= max_denominator; ++q) {
        double p = std::round(x * static_cast<double>(q));
        if (std::abs(p) > 9e15) {
            return std::nullopt;
        }
        if (std::abs(x - p / static_cast<double>(q)) <= tol) {
            return Rational(static_cast<std::int64_t>(p), q);
        }
    }
    return std::nullopt;
}

std::string format_value(double x, std::int64_t max_denominator, double tol) {
    if (auto r = recognize_rational(x, max_denominator, tol)) {
        return to_string(*r);
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

}  // namespace mmes
