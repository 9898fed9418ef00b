// Copyright 2026 The crnc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CRNC_RATIONAL_HPP
#define CRNC_RATIONAL_HPP

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace crnc {

// Exact arbitrary-precision rational. GMP keeps values in lowest terms with a
// positive denominator after every operation, so equality is structural.
using Rational = boost::multiprecision::mpq_rational;
using RationalVector = std::vector<Rational>;

/// Parses "p/q" or an integer literal. Throws std::invalid_argument on
/// malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Renders as "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Exact left null space basis of an integer matrix (rows x cols), i.e. all v
/// with v*M = 0, as rational row vectors. Used for conservation-law checks.
std::vector<RationalVector> left_null_space(
    const std::vector<std::vector<int>>& m);

}  // namespace crnc

#endif  // CRNC_RATIONAL_HPP
