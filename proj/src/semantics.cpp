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

#include "crnc/semantics.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <sstream>

#include "crnc/lp.hpp"

namespace crnc {

InapplicableReaction::InapplicableReaction(size_t reaction,
                                           const std::string& missing)
    : std::runtime_error("reaction " + std::to_string(reaction) +
                         " has positive flux but reactant " + missing +
                         " is absent"),
      reaction(reaction),
      missing_reactant(missing) {}

NegativeConcentration::NegativeConcentration(const std::string& species)
    : std::runtime_error("flux drives " + species + " negative"),
      species(species) {}

State apply_flux(const Crn& crn, const State& s, const FluxVector& u) {
  if (u.size() != crn.reactions.size())
    throw std::invalid_argument("flux vector length mismatch");
  std::map<std::string, Rational> delta;
  for (size_t j = 0; j < u.size(); ++j) {
    if (u[j] < 0) throw std::invalid_argument("negative flux");
    if (u[j] == 0) continue;
    const Reaction& r = crn.reactions[j];
    for (const auto& [sp, k] : r.reactants) {
      (void)k;
      if (s.get(sp) <= 0) throw InapplicableReaction(j, sp);
    }
    for (const auto& [sp, k] : r.reactants) delta[sp] -= u[j] * k;
    for (const auto& [sp, k] : r.products) delta[sp] += u[j] * k;
  }
  State out = s;
  for (const auto& [sp, d] : delta) {
    Rational v = s.get(sp) + d;
    if (v < 0) throw NegativeConcentration(sp);
    out.set(sp, v);
  }
  return out;
}

std::set<size_t> applicable_reactions(const Crn& crn, const State& s) {
  std::set<size_t> out;
  for (size_t j = 0; j < crn.reactions.size(); ++j) {
    bool ok = true;
    for (const auto& [sp, k] : crn.reactions[j].reactants) {
      (void)k;
      if (s.get(sp) <= 0) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(j);
  }
  return out;
}

namespace {

// Closure fixpoint that also records, in firing order, one enabling reaction
// per newly producible species (the cascade certificate).
std::set<std::string> closure_with_cert(const Crn& crn,
                                        const std::set<std::string>& present,
                                        std::vector<size_t>* cert) {
  std::set<std::string> known = present;
  std::vector<bool> used(crn.reactions.size(), false);
  bool grew = true;
  while (grew) {
    grew = false;
    for (size_t j = 0; j < crn.reactions.size(); ++j) {
      if (used[j]) continue;
      const Reaction& r = crn.reactions[j];
      bool enabled = true;
      for (const auto& [sp, k] : r.reactants) {
        (void)k;
        if (!known.count(sp)) {
          enabled = false;
          break;
        }
      }
      if (!enabled) continue;
      bool fresh = false;
      for (const auto& [sp, k] : r.products) {
        (void)k;
        if (known.insert(sp).second) fresh = true;
      }
      used[j] = true;
      if (fresh) {
        if (cert) cert->push_back(j);
        grew = true;
      }
    }
  }
  return known;
}

std::set<std::string> present_set(const State& s) {
  auto v = s.present();
  return {v.begin(), v.end()};
}

}  // namespace

std::set<std::string> species_closure(const Crn& crn,
                                      const std::set<std::string>& present) {
  return closure_with_cert(crn, present, nullptr);
}

StabilityResult is_output_stable(const Crc& crc, const State& s) {
  std::set<std::string> p = species_closure(crc.crn, present_set(s));
  bool stable = true;
  for (const Reaction& r : crc.crn.reactions) {
    if (r.net(crc.output) == 0) continue;
    bool enabled = true;
    for (const auto& [sp, k] : r.reactants) {
      (void)k;
      if (!p.count(sp)) {
        enabled = false;
        break;
      }
    }
    if (enabled) {
      stable = false;
      break;
    }
  }
  bool oblivious = true;
  for (const Reaction& r : crc.crn.reactions)
    if (r.reactants.count(crc.output)) oblivious = false;
  return {stable, oblivious};
}

namespace {

// Shared scaffolding for the output-bound LP and its optimal-face probes:
// variables are fluxes of the closure-enabled reactions, constraints keep
// every species nonnegative at the segment end.
struct BoundLp {
  const Crn& crn;
  std::vector<size_t> cols;  // reaction index per LP column
  std::vector<LpConstraint> nonneg_rows;
  RationalVector out_obj;  // net output production per column

  BoundLp(const Crc& crc, const State& x, const std::set<std::string>& p)
      : crn(crc.crn) {
    for (size_t j = 0; j < crn.reactions.size(); ++j) {
      bool in = true;
      for (const auto& [sp, k] : crn.reactions[j].reactants) {
        (void)k;
        if (!p.count(sp)) {
          in = false;
          break;
        }
      }
      if (in) cols.push_back(j);
    }
    for (const std::string& sp : crn.species) {
      LpConstraint row;
      row.coeffs.assign(cols.size(), Rational(0));
      bool nontrivial = false;
      for (size_t c = 0; c < cols.size(); ++c) {
        int net = crn.reactions[cols[c]].net(sp);
        if (net != 0) nontrivial = true;
        row.coeffs[c] = -net;
      }
      if (!nontrivial) continue;
      row.rel = Relation::LessEq;
      row.rhs = x.get(sp);
      nonneg_rows.push_back(std::move(row));
    }
    out_obj.assign(cols.size(), Rational(0));
    for (size_t c = 0; c < cols.size(); ++c)
      out_obj[c] = crn.reactions[cols[c]].net(crc.output);
  }

  FluxVector expand(const RationalVector& w) const {
    FluxVector u(crn.reactions.size(), Rational(0));
    for (size_t c = 0; c < cols.size(); ++c) u[cols[c]] = w[c];
    return u;
  }
};

}  // namespace

OutputBound max_output_bound(const Crc& crc, const State& x) {
  std::vector<size_t> cert;
  std::set<std::string> p =
      closure_with_cert(crc.crn, present_set(x), &cert);
  BoundLp blp(crc, x, p);

  LinearProgram lp{blp.out_obj, blp.nonneg_rows};
  LpOutcome opt = lp_solve(lp);
  if (opt.kind == LpOutcome::Kind::Unbounded) throw UnboundedOutput();
  // x >= 0 with u = 0 is always feasible.
  const Rational lp_value = opt.value;  // best net production of the output
  OutputBound result;
  result.value = x.get(crc.output) + lp_value;

  // Witnesses on the optimal face, combined by averaging so that every
  // coordinate positive in some witness stays positive.
  std::vector<RationalVector> witnesses{opt.witness};
  auto combined = [&]() {
    RationalVector u(blp.cols.size(), Rational(0));
    for (const auto& w : witnesses)
      for (size_t c = 0; c < u.size(); ++c) u[c] += w[c];
    for (auto& v : u) v /= int(witnesses.size());
    return u;
  };
  auto face_max = [&](size_t col) {
    LinearProgram face;
    face.objective.assign(blp.cols.size(), Rational(0));
    face.objective[col] = 1;
    face.constraints = blp.nonneg_rows;
    face.constraints.push_back({blp.out_obj, Relation::Equal, lp_value});
    return lp_solve(face);
  };

  // Cascade planning: every zero-concentration reactant of a positive-flux
  // reaction needs some certificate reaction that net-produces it to carry
  // positive flux too; probe the optimal face when the current witness gives
  // it none. If no producer can carry flux at optimum, the supremum is only
  // approached (Lemma-9-style gap).
  std::map<size_t, size_t> col_of;  // reaction -> LP column
  for (size_t c = 0; c < blp.cols.size(); ++c) col_of[blp.cols[c]] = c;
  RationalVector u = combined();
  // One collective probe first: push every zero-flux column at once on the
  // optimal face, so the per-producer probes below are only needed when some
  // column is genuinely pinned at zero.
  {
    RationalVector obj(blp.cols.size(), Rational(0));
    bool any = false;
    for (size_t c = 0; c < blp.cols.size(); ++c)
      if (u[c] == 0) {
        obj[c] = 1;
        any = true;
      }
    if (any) {
      LinearProgram face;
      face.objective = std::move(obj);
      face.constraints = blp.nonneg_rows;
      face.constraints.push_back({blp.out_obj, Relation::Equal, lp_value});
      LpOutcome probe = lp_solve(face);
      if (probe.kind == LpOutcome::Kind::Optimal && probe.value > 0) {
        witnesses.push_back(probe.witness);
        u = combined();
      }
    }
  }
  std::set<std::string> resolved;
  std::vector<size_t> cascade;  // chosen producer reactions
  std::vector<std::string> work;
  auto request = [&](const std::string& sp) {
    if (x.get(sp) == 0 && resolved.insert(sp).second) work.push_back(sp);
  };
  for (size_t c = 0; c < blp.cols.size(); ++c)
    if (u[c] > 0)
      for (const auto& [sp, k] : crc.crn.reactions[blp.cols[c]].reactants) {
        (void)k;
        request(sp);
      }
  while (!work.empty()) {
    std::string sp = work.back();
    work.pop_back();
    size_t chosen = crc.crn.reactions.size();
    for (size_t j : cert) {
      if (crc.crn.reactions[j].net(sp) <= 0) continue;
      if (u[col_of.at(j)] > 0) {
        chosen = j;
        break;
      }
    }
    if (chosen == crc.crn.reactions.size()) {
      for (size_t j : cert) {
        if (crc.crn.reactions[j].net(sp) <= 0) continue;
        LpOutcome probe = face_max(col_of.at(j));
        if (probe.kind == LpOutcome::Kind::Optimal && probe.value > 0) {
          witnesses.push_back(probe.witness);
          u = combined();
          chosen = j;
          break;
        }
      }
    }
    if (chosen == crc.crn.reactions.size()) {
      result.possibly_unattained = true;
      return result;
    }
    cascade.push_back(chosen);
    for (const auto& [rsp, k] : crc.crn.reactions[chosen].reactants) {
      (void)k;
      request(rsp);
    }
  }

  // Assemble the witness trace: fire each cascade producer with a small flux
  // in certificate order (so its own prerequisites are already present), then
  // spend the rest of the optimal flux in one final segment.
  std::map<size_t, size_t> cert_pos;
  for (size_t i = 0; i < cert.size(); ++i) cert_pos[cert[i]] = i;
  std::sort(cascade.begin(), cascade.end(),
            [&](size_t a, size_t b) { return cert_pos[a] < cert_pos[b]; });
  cascade.erase(std::unique(cascade.begin(), cascade.end()), cascade.end());

  FluxVector remaining = blp.expand(u);
  Trace trace;
  State cur = x;
  try {
    for (size_t j : cascade) {
      // Half the remaining optimal flux, further capped so that no consumed
      // species loses more than half its current concentration.
      Rational delta = remaining[j] / 2;
      for (const auto& [sp, v] : cur.concentrations()) {
        int net = crc.crn.reactions[j].net(sp);
        if (net < 0) delta = std::min(delta, Rational(v / (2 * -net)));
      }
      if (delta <= 0) continue;
      FluxVector step(crc.crn.reactions.size(), Rational(0));
      step[j] = delta;
      trace.segments.push_back({cur, step});
      cur = apply_flux(crc.crn, cur, step);
      remaining[j] -= delta;
    }
    trace.segments.push_back({cur, remaining});
    trace.final = apply_flux(crc.crn, cur, remaining);
    replay_trace(crc.crn, trace, x);
    if (trace.final.get(crc.output) != result.value)
      throw std::runtime_error("witness misses the optimum");
    result.attained_witness = std::move(trace);
  } catch (const std::exception&) {
    result.possibly_unattained = true;
  }
  return result;
}

std::optional<std::vector<std::string>> is_feedforward(const Crn& crn) {
  std::vector<std::string> order;
  std::set<std::string> placed;
  while (order.size() < crn.species.size()) {
    bool advanced = false;
    for (const std::string& sp : crn.species) {
      if (placed.count(sp)) continue;
      bool ok = true;
      for (const Reaction& r : crn.reactions) {
        if (r.net(sp) <= 0) continue;
        bool consumes_earlier = false;
        for (const std::string& prev : order)
          if (r.net(prev) < 0) {
            consumes_earlier = true;
            break;
          }
        if (!consumes_earlier) {
          ok = false;
          break;
        }
      }
      if (ok) {
        order.push_back(sp);
        placed.insert(sp);
        advanced = true;
        break;
      }
    }
    if (!advanced) return std::nullopt;
  }
  return order;
}

ExecutionResult execute_topological(const Crc& crc, const State& x) {
  auto order = is_feedforward(crc.crn);
  if (!order) throw NotFeedforward();
  std::map<std::string, size_t> pos;
  for (size_t i = 0; i < order->size(); ++i) pos[(*order)[i]] = i;

  // Reactions sorted by the latest species they net-consume: producers fire
  // before the consumers they feed. Reactions with no net-consumed species
  // are no-ops under "fire to completion" and are skipped.
  std::vector<size_t> schedule;
  for (size_t j = 0; j < crc.crn.reactions.size(); ++j) {
    for (const auto& [sp, v] : crc.crn.reactions[j].reactants) {
      (void)v;
      if (crc.crn.reactions[j].net(sp) < 0) {
        schedule.push_back(j);
        break;
      }
    }
  }
  std::stable_sort(schedule.begin(), schedule.end(), [&](size_t a, size_t b) {
    auto rank = [&](size_t j) {
      size_t m = 0;
      for (const auto& [sp, v] : crc.crn.reactions[j].reactants) {
        (void)v;
        if (crc.crn.reactions[j].net(sp) < 0) m = std::max(m, pos[sp]);
      }
      return m;
    };
    return rank(a) < rank(b);
  });

  ExecutionResult res;
  State cur = x;
  size_t max_passes =
      std::max<size_t>(1, crc.crn.reactions.size() * crc.crn.species.size());
  for (size_t pass = 0;; ++pass) {
    if (pass > max_passes) throw NonTerminating();
    bool fired = false;
    for (size_t j : schedule) {
      const Reaction& r = crc.crn.reactions[j];
      bool applicable = true;
      for (const auto& [sp, k] : r.reactants) {
        (void)k;
        if (cur.get(sp) <= 0) {
          applicable = false;
          break;
        }
      }
      if (!applicable) continue;
      Rational flux;
      bool first = true;
      for (const auto& [sp, k] : r.reactants) {
        (void)k;
        int net = r.net(sp);
        if (net >= 0) continue;
        Rational cap = cur.get(sp) / -net;
        if (first || cap < flux) flux = cap;
        first = false;
      }
      if (flux <= 0) continue;
      FluxVector step(crc.crn.reactions.size(), Rational(0));
      step[j] = flux;
      res.trace.segments.push_back({cur, step});
      cur = apply_flux(crc.crn, cur, step);
      fired = true;
    }
    if (!fired) break;
  }
  res.final = cur;
  res.trace.final = cur;
  if (!is_output_stable(crc, cur).stable)
    throw std::runtime_error("executor reached an output-unstable fixpoint");
  return res;
}

Trace random_segment_walk(const Crc& crc, const State& x, size_t steps,
                          uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> grid(1, 64);
  std::uniform_int_distribution<int> coin(0, 1);
  Trace trace;
  State cur = x;
  for (size_t step = 0; step < steps; ++step) {
    std::set<size_t> app = applicable_reactions(crc.crn, cur);
    if (app.empty()) break;
    std::vector<size_t> chosen;
    for (size_t j : app)
      if (coin(rng)) chosen.push_back(j);
    if (chosen.empty()) {
      std::vector<size_t> all(app.begin(), app.end());
      chosen.push_back(
          all[std::uniform_int_distribution<size_t>(0, all.size() - 1)(rng)]);
    }
    FluxVector raw(crc.crn.reactions.size(), Rational(0));
    for (size_t j : chosen) raw[j] = Rational(grid(rng), 64);
    // Largest lambda with cur + lambda * M raw >= 0.
    std::map<std::string, Rational> delta;
    for (size_t j : chosen)
      for (const std::string& sp : crc.crn.species) {
        int net = crc.crn.reactions[j].net(sp);
        if (net != 0) delta[sp] += raw[j] * net;
      }
    Rational lambda(1);
    bool capped = false;
    for (const auto& [sp, d] : delta) {
      if (d >= 0) continue;
      Rational cap = cur.get(sp) / -d;
      if (!capped || cap < lambda) lambda = cap;
      capped = true;
    }
    if (!capped || lambda > 1) lambda = 1;
    Rational scale = lambda * Rational(grid(rng), 64);
    // Truncate to denominator 2^40 so rational sizes stay bounded over long
    // walks; the truncated scale still respects the nonnegativity cap.
    boost::multiprecision::mpz_int two40 = boost::multiprecision::mpz_int(1)
                                           << 40;
    boost::multiprecision::mpz_int num =
        (numerator(scale) * two40) / denominator(scale);
    scale = Rational(num, two40);
    if (scale <= 0) continue;
    FluxVector u(crc.crn.reactions.size(), Rational(0));
    for (size_t j : chosen) u[j] = raw[j] * scale;
    trace.segments.push_back({cur, u});
    cur = apply_flux(crc.crn, cur, u);
  }
  trace.final = cur;
  return trace;
}

void replay_trace(const Crn& crn, const Trace& trace, const State& start) {
  State cur = start;
  for (size_t i = 0; i < trace.segments.size(); ++i) {
    const auto& seg = trace.segments[i];
    if (!(seg.start == cur))
      throw std::runtime_error("segment " + std::to_string(i) +
                               " start state mismatch");
    cur = apply_flux(crn, cur, seg.flux);
  }
  if (!(trace.final == cur))
    throw std::runtime_error("trace final state mismatch");
}

FluxVector total_flux(const Crn& crn, const Trace& trace) {
  FluxVector u(crn.reactions.size(), Rational(0));
  for (const auto& seg : trace.segments)
    for (size_t j = 0; j < u.size(); ++j) u[j] += seg.flux[j];
  return u;
}

std::string dump_trace(const Crn& crn, const Trace& trace) {
  std::ostringstream out;
  State cur;
  for (size_t i = 0; i < trace.segments.size(); ++i) {
    const auto& seg = trace.segments[i];
    out << "seg " << i << ": flux";
    for (size_t j = 0; j < seg.flux.size(); ++j)
      if (seg.flux[j] != 0) out << " r_" << j << "=" << to_string(seg.flux[j]);
    cur = apply_flux(crn, seg.start, seg.flux);
    out << "; state";
    for (const auto& [sp, v] : cur.concentrations())
      out << " " << sp << "=" << to_string(v);
    out << "\n";
  }
  return out.str();
}

}  // namespace crnc
