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

#ifndef CRNC_SPEC_HPP
#define CRNC_SPEC_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "crnc/rational.hpp"

namespace crnc {

// Subset of the inputs {1..n}; bit i-1 set means input i is present.
using DomainMask = uint32_t;

struct SpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Homogeneous linear form with nonnegative coefficients, plus an optional
// constant term (nonzero only in affine specs destined for initial-context
// compilation).
struct LinearFn {
  RationalVector coeffs;
  Rational constant = 0;

  Rational eval(const RationalVector& x) const;
  bool operator==(const LinearFn&) const = default;
  bool operator<(const LinearFn& o) const {
    if (coeffs != o.coeffs) return coeffs < o.coeffs;
    return constant < o.constant;
  }
};

struct MinOfLinear {
  std::vector<LinearFn> components;  // non-empty

  Rational eval(const RationalVector& x) const;
  bool operator==(const MinOfLinear&) const = default;
};

/// Restricts g to the coordinates of `mask` (zeroing the rest), sorts and
/// dedups components, and collapses to the single zero component when any
/// component is identically zero (the min is then 0 on the orthant).
MinOfLinear canonicalize(MinOfLinear g, DomainMask mask, size_t n);

// Piecewise description of a function on the nonnegative orthant: one
// min-of-linear piece per support pattern of the input.
struct FunctionSpec {
  size_t n = 0;
  bool inherit_default = true;
  std::map<DomainMask, MinOfLinear> domains;

  DomainMask full_mask() const { return DomainMask((1u << n) - 1); }

  /// The effective piece for `mask`: the declared one canonicalized, or (with
  /// inherit_default) the full-domain piece restricted to `mask`. Throws
  /// SpecError when the piece is undeclared and inheritance is off.
  MinOfLinear domain(DomainMask mask) const;

  bool has_constants() const;
};

/// Parses the JSON spec format: {"inputs": n, "inherit_default": bool,
/// "domains": [{"present": [i, ...], "min_of": [["p/q", ...], ...],
/// "constant": "p/q"? | "constants": ["p/q", ...]?}, ...]}. Input indices are
/// 1-based; coefficients are rational strings. Throws SpecError.
FunctionSpec load_spec(const std::string& json_text);
std::string save_spec(const FunctionSpec& spec);

}  // namespace crnc

#endif  // CRNC_SPEC_HPP
