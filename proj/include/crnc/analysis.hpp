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

#ifndef CRNC_ANALYSIS_HPP
#define CRNC_ANALYSIS_HPP

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "crnc/spec.hpp"

namespace crnc {

/// Value of the spec at x >= 0: the piece for x's support pattern, evaluated
/// exactly. Throws SpecError on dimension mismatch or negative coordinate.
Rational eval_spec(const FunctionSpec& spec, const RationalVector& x);

/// Brute-force min over all support subsets S of
///   g_S(x) + sum over nonempty K not contained in S of [all of K positive] * g_K(x),
/// the gated-sum form the compiler implements; independent oracle for it.
Rational eval_min_formula(const FunctionSpec& spec, const RationalVector& x);

struct ValidationReport {
  bool coefficients_nonnegative = true;
  // Whether the declared pieces already had zero coefficients outside their
  // support (they are canonicalized either way).
  bool canonical_support = true;

  // Certified point where the piece of the larger support T drops below the
  // piece of S on S's domain, violating the restriction-monotonicity the
  // gated-sum form needs.
  struct RestrictionViolation {
    DomainMask s = 0, t = 0;
    size_t component = 0;  // offending component of g_T
    RationalVector witness;
    Rational gap;  // g_S(witness) - g_T(witness) > 0
  };
  std::vector<RestrictionViolation> restriction_violations;
  size_t restriction_pairs_checked = 0;

  size_t superadditivity_pairs = 0;
  std::vector<std::pair<RationalVector, RationalVector>>
      superadditivity_violations;

  bool valid() const {
    return coefficients_nonnegative && restriction_violations.empty() &&
           superadditivity_violations.empty();
  }
};

/// Structural checks, the exact-LP restriction-monotonicity battery over all
/// nested support pairs, and sampled exact superadditivity.
ValidationReport validate_spec(const FunctionSpec& spec,
                               size_t sample_pairs = 200, uint64_t seed = 0);

/// Samples `pairs` rational points (a, b) >= 0 with support patterns cycling
/// through all subsets and returns the pairs where f(a) + f(b) > f(a + b).
/// Takes a black-box evaluator so non-spec functions (e.g. max) can be
/// refuted too.
std::vector<std::pair<RationalVector, RationalVector>> sample_superadditivity(
    const std::function<Rational(const RationalVector&)>& f, size_t n,
    size_t pairs, uint64_t seed);

}  // namespace crnc

#endif  // CRNC_ANALYSIS_HPP
