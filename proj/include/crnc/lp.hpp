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

#ifndef CRNC_LP_HPP
#define CRNC_LP_HPP

#include <vector>

#include "crnc/rational.hpp"

namespace crnc {

enum class Relation { LessEq, Equal, GreaterEq };

struct LpConstraint {
  RationalVector coeffs;
  Relation rel = Relation::LessEq;
  Rational rhs;
};

// Maximize objective . x subject to the constraints and x >= 0.
// Dense storage; intended for desk-scale programs (hundreds of variables).
struct LinearProgram {
  RationalVector objective;
  std::vector<LpConstraint> constraints;
};

struct LpOutcome {
  enum class Kind { Optimal, Infeasible, Unbounded };
  Kind kind = Kind::Infeasible;
  Rational value;          // valid when Optimal
  RationalVector witness;  // valid when Optimal; satisfies every row exactly
};

/// Exact two-phase simplex with Bland's pivot rule (no cycling, deterministic
/// witnesses). Throws std::invalid_argument on a row/objective dimension
/// mismatch.
LpOutcome lp_solve(const LinearProgram& lp);

}  // namespace crnc

#endif  // CRNC_LP_HPP
