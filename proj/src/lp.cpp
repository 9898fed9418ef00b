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

#include "crnc/lp.hpp"

#include <cstddef>
#include <stdexcept>

namespace crnc {
namespace {

// Full-tableau simplex over exact rationals.
//
// Layout: `rows` equality rows over columns [0, ncols) plus rhs, with a
// maintained basis (one basic column per row, identity in that column).
// Objective is kept as a reduced-cost row; Bland's rule picks the entering
// column as the lowest index with positive reduced cost and the leaving row
// by minimum ratio with lowest basic index as tie-break.
struct Tableau {
  size_t ncols = 0;
  std::vector<RationalVector> row;  // each of size ncols
  RationalVector rhs;               // size rows
  std::vector<size_t> basis;        // size rows
  RationalVector red;               // reduced costs, size ncols
  Rational obj_val;                 // current objective value

  void pivot(size_t r, size_t c) {
    Rational p = row[r][c];
    for (size_t j = 0; j < ncols; ++j) row[r][j] /= p;
    rhs[r] /= p;
    for (size_t i = 0; i < row.size(); ++i) {
      if (i == r || row[i][c] == 0) continue;
      Rational f = row[i][c];
      for (size_t j = 0; j < ncols; ++j) row[i][j] -= f * row[r][j];
      rhs[i] -= f * rhs[r];
    }
    if (red[c] != 0) {
      Rational f = red[c];
      for (size_t j = 0; j < ncols; ++j) red[j] -= f * row[r][j];
      obj_val += f * rhs[r];
    }
    basis[r] = c;
  }

  // Runs simplex to optimality on the current reduced costs (maximization).
  // Returns false if unbounded. `allowed(c)` filters candidate columns.
  template <typename Allowed>
  bool maximize(const Allowed& allowed) {
    for (;;) {
      size_t enter = ncols;
      for (size_t j = 0; j < ncols; ++j) {
        if (allowed(j) && red[j] > 0) {
          enter = j;
          break;
        }
      }
      if (enter == ncols) return true;
      size_t leave = row.size();
      Rational best;
      for (size_t i = 0; i < row.size(); ++i) {
        if (row[i][enter] <= 0) continue;
        Rational ratio = rhs[i] / row[i][enter];
        if (leave == row.size() || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == row.size()) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpOutcome lp_solve(const LinearProgram& lp) {
  const size_t n = lp.objective.size();
  const size_t m = lp.constraints.size();
  for (const auto& c : lp.constraints) {
    if (c.coeffs.size() != n)
      throw std::invalid_argument("LP row dimension mismatch");
  }

  // Columns: n structural, one slack/surplus per inequality row, then one
  // artificial per row whose slack cannot start basic. A row normalized to
  // `<= rhs` with rhs >= 0 starts on its slack; with no such rows at all,
  // phase 1 is skipped entirely.
  size_t nslack = 0;
  for (const auto& c : lp.constraints)
    if (c.rel != Relation::Equal) ++nslack;

  std::vector<bool> needs_artificial(m, false);
  size_t nart = 0;
  {
    for (size_t i = 0; i < m; ++i) {
      const auto& c = lp.constraints[i];
      bool flip = c.rhs < 0;
      bool plus_slack =
          c.rel != Relation::Equal && (c.rel == Relation::LessEq) != flip;
      if (!plus_slack) {
        needs_artificial[i] = true;
        ++nart;
      }
    }
  }

  Tableau t;
  t.ncols = n + nslack + nart;
  t.row.assign(m, RationalVector(t.ncols, Rational(0)));
  t.rhs.assign(m, Rational(0));
  t.basis.assign(m, 0);

  size_t slack_at = n, art_at = n + nslack;
  for (size_t i = 0; i < m; ++i) {
    const auto& c = lp.constraints[i];
    bool flip = c.rhs < 0;
    for (size_t j = 0; j < n; ++j)
      t.row[i][j] = flip ? -c.coeffs[j] : c.coeffs[j];
    t.rhs[i] = flip ? -c.rhs : c.rhs;
    if (c.rel != Relation::Equal) {
      bool plus_slack = (c.rel == Relation::LessEq) != flip;
      t.row[i][slack_at] = plus_slack ? 1 : -1;
      if (plus_slack) t.basis[i] = slack_at;
      ++slack_at;
    }
    if (needs_artificial[i]) {
      t.row[i][art_at] = 1;
      t.basis[i] = art_at;
      ++art_at;
    }
  }

  if (nart > 0) {
    // Phase 1: maximize -(sum of artificials).
    t.red.assign(t.ncols, Rational(0));
    t.obj_val = 0;
    for (size_t i = 0; i < m; ++i) {
      if (!needs_artificial[i]) continue;
      for (size_t j = 0; j < n + nslack; ++j) t.red[j] += t.row[i][j];
      t.obj_val -= t.rhs[i];
    }
    t.maximize([&](size_t j) { return j < n + nslack; });
    if (t.obj_val != 0) return {LpOutcome::Kind::Infeasible, {}, {}};

    // Pivot any artificial still in the basis out onto a structural column,
    // or leave its degenerate (rhs 0) row; artificial columns are excluded
    // from phase 2 either way.
    for (size_t i = 0; i < m; ++i) {
      if (t.basis[i] < n + nslack) continue;
      for (size_t j = 0; j < n + nslack; ++j) {
        if (t.row[i][j] != 0) {
          t.pivot(i, j);
          break;
        }
      }
    }
  }

  // Phase 2: maximize the real objective expressed in the current basis.
  t.red.assign(t.ncols, Rational(0));
  for (size_t j = 0; j < n; ++j) t.red[j] = lp.objective[j];
  t.obj_val = 0;
  for (size_t i = 0; i < m; ++i) {
    size_t b = t.basis[i];
    if (b >= n || t.red[b] == 0) continue;
    Rational f = t.red[b];
    for (size_t j = 0; j < t.ncols; ++j) t.red[j] -= f * t.row[i][j];
    t.obj_val += f * t.rhs[i];
  }
  bool bounded = t.maximize([&](size_t j) { return j < n + nslack; });
  if (!bounded) return {LpOutcome::Kind::Unbounded, {}, {}};

  RationalVector x(n, Rational(0));
  for (size_t i = 0; i < m; ++i)
    if (t.basis[i] < n) x[t.basis[i]] = t.rhs[i];
  return {LpOutcome::Kind::Optimal, t.obj_val, std::move(x)};
}

}  // namespace crnc
