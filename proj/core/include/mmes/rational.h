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

#ifndef MMES_RATIONAL_H
#define MMES_RATIONAL_H

#include <cstdint>
#include <optional>
#include <string>

#include <boost/rational.hpp>

namespace mmes {

using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational &r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational &r);

/// Smallest-denominator fraction p/q with q <= max_denominator lying within tol of x.
std::optional<Rational> recognize_rational(double x, std::int64_t max_denominator = 1120, double tol = 1e-9);

/// Renders x as a recognized fraction when one exists, otherwise as a decimal.
std::string format_value(double x, std::int64_t max_denominator = 1120, double tol = 1e-9);

}  // namespace mmes

#endif
