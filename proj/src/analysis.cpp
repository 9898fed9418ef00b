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

#include "crnc/analysis.hpp"

#include <random>

#include "crnc/lp.hpp"

namespace crnc {
namespace {

DomainMask support_of(const RationalVector& x) {
  DomainMask m = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 0) throw SpecError("negative coordinate");
    if (x[i] > 0) m |= DomainMask(1) << i;
  }
  return m;
}

void check_dim(const FunctionSpec& spec, const RationalVector& x) {
  if (x.size() != spec.n) throw SpecError("input dimension mismatch");
}

}  // namespace

Rational eval_spec(const FunctionSpec& spec, const RationalVector& x) {
  check_dim(spec, x);
  return spec.domain(support_of(x)).eval(x);
}

Rational eval_min_formula(const FunctionSpec& spec, const RationalVector& x) {
  check_dim(spec, x);
  DomainMask support = support_of(x);
  DomainMask full = spec.full_mask();
  bool any = false;
  Rational best;
  for (DomainMask s = 0; s <= full; ++s) {
    Rational h = spec.domain(s).eval(x);
    for (DomainMask k = 1; k <= full; ++k) {
      if ((k & ~s) == 0) continue;        // K inside S carries no gate
      if ((k & ~support) != 0) continue;  // predicate is 0
      h += spec.domain(k).eval(x);
    }
    if (!any || h < best) {
      best = h;
      any = true;
    }
  }
  return best;
}

namespace {

// Certifies sup over the simplex cross-section of S's domain of
// g_S(x) - b(x) for one component b of g_T. A strictly positive optimum is a
// point with g_T < g_S there.
std::optional<std::pair<RationalVector, Rational>> restriction_gap(
    const MinOfLinear& gs, const LinearFn& b, DomainMask s, size_t n) {
  std::vector<size_t> vars;  // coordinates free on the cross-section
  for (size_t i = 0; i < n; ++i)
    if (s & (DomainMask(1) << i)) vars.push_back(i);
  if (vars.empty()) return std::nullopt;  // only x = 0; all pieces give 0

  // Columns: x over vars, then t = tp - tm.
  size_t cols = vars.size() + 2;
  LinearProgram lp;
  lp.objective.assign(cols, Rational(0));
  lp.objective[vars.size()] = 1;
  lp.objective[vars.size() + 1] = -1;
  for (const auto& a : gs.components) {
    LpConstraint row;
    row.coeffs.assign(cols, Rational(0));
    for (size_t v = 0; v < vars.size(); ++v)
      row.coeffs[v] = a.coeffs[vars[v]] - b.coeffs[vars[v]];
    row.coeffs[vars.size()] = -1;
    row.coeffs[vars.size() + 1] = 1;
    row.rel = Relation::GreaterEq;
    row.rhs = 0;
    lp.constraints.push_back(std::move(row));
  }
  LpConstraint simplex;
  simplex.coeffs.assign(cols, Rational(0));
  for (size_t v = 0; v < vars.size(); ++v) simplex.coeffs[v] = 1;
  simplex.rel = Relation::Equal;
  simplex.rhs = 1;
  lp.constraints.push_back(std::move(simplex));

  LpOutcome out = lp_solve(lp);
  if (out.kind != LpOutcome::Kind::Optimal || out.value <= 0)
    return std::nullopt;
  RationalVector witness(n, Rational(0));
  for (size_t v = 0; v < vars.size(); ++v) witness[vars[v]] = out.witness[v];
  return std::make_pair(witness, out.value);
}

}  // namespace

std::vector<std::pair<RationalVector, RationalVector>> sample_superadditivity(
    const std::function<Rational(const RationalVector&)>& f, size_t n,
    size_t pairs, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(1, 100), den(1, 10);
  DomainMask full = DomainMask((1u << n) - 1);
  auto sample = [&](DomainMask support) {
    RationalVector x(n, Rational(0));
    for (size_t i = 0; i < n; ++i)
      if (support & (DomainMask(1) << i)) x[i] = Rational(num(rng), den(rng));
    return x;
  };
  std::vector<std::pair<RationalVector, RationalVector>> bad;
  for (size_t p = 0; p < pairs; ++p) {
    // Support patterns sweep all subset pairs so every domain boundary is hit.
    DomainMask ma = n == 0 ? 0 : DomainMask(p) & full;
    DomainMask mb = n == 0 ? 0 : DomainMask(p >> n) & full;
    RationalVector a = sample(ma), b = sample(mb);
    RationalVector ab(n);
    for (size_t i = 0; i < n; ++i) ab[i] = a[i] + b[i];
    if (f(a) + f(b) > f(ab)) bad.emplace_back(std::move(a), std::move(b));
  }
  return bad;
}

ValidationReport validate_spec(const FunctionSpec& spec, size_t sample_pairs,
                               uint64_t seed) {
  ValidationReport report;
  for (const auto& [mask, g] : spec.domains) {
    for (const auto& comp : g.components) {
      if (comp.coeffs.size() != spec.n)
        throw SpecError("component length differs from input count");
      if (comp.constant < 0) report.coefficients_nonnegative = false;
      for (size_t i = 0; i < spec.n; ++i) {
        if (comp.coeffs[i] < 0) report.coefficients_nonnegative = false;
        if (comp.coeffs[i] != 0 && !(mask & (DomainMask(1) << i)))
          report.canonical_support = false;
      }
    }
  }
  if (!report.coefficients_nonnegative) return report;

  DomainMask full = spec.full_mask();
  for (DomainMask t = 0; t <= full; ++t) {
    MinOfLinear gt = spec.domain(t);
    for (DomainMask s = t & (t - 1);; s = (s - 1) & t) {
      // s enumerates the proper subsets of t.
      if (s == t) break;
      MinOfLinear gs = spec.domain(s);
      ++report.restriction_pairs_checked;
      for (size_t c = 0; c < gt.components.size(); ++c) {
        auto gap = restriction_gap(gs, gt.components[c], s, spec.n);
        if (gap) {
          report.restriction_violations.push_back(
              {s, t, c, gap->first, gap->second});
          break;
        }
      }
      if (s == 0) break;
    }
  }
  if (!report.restriction_violations.empty()) return report;

  report.superadditivity_pairs = sample_pairs;
  report.superadditivity_violations = sample_superadditivity(
      [&](const RationalVector& x) { return eval_spec(spec, x); }, spec.n,
      sample_pairs, seed);
  return report;
}

}  // namespace crnc
