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

#include "crnc/compiler.hpp"

#include <algorithm>
#include <bit>

#include "crnc/semantics.hpp"

namespace crnc {
namespace {

int to_stoich(const boost::multiprecision::mpz_int& v) {
  if (v < 1 || v > 1000000)
    throw std::invalid_argument("coefficient too large for stoichiometry");
  return v.convert_to<int>();
}

std::string mask_str(DomainMask m) { return std::to_string(m); }

bool is_zero_piece(const MinOfLinear& g) {
  return g.components.size() == 1 &&
         std::all_of(g.components[0].coeffs.begin(),
                     g.components[0].coeffs.end(),
                     [](const Rational& c) { return c == 0; }) &&
         g.components[0].constant == 0;
}

}  // namespace

Crn compile_linear(const LinearFn& g, const std::vector<std::string>& inputs,
                   const std::string& out) {
  if (g.coeffs.size() != inputs.size())
    throw std::invalid_argument("coefficient/input count mismatch");
  Crn crn;
  for (size_t i = 0; i < inputs.size(); ++i) {
    const Rational& a = g.coeffs[i];
    if (a < 0) throw std::invalid_argument("negative coefficient");
    if (a == 0) continue;
    Reaction r;
    r.reactants[inputs[i]] = to_stoich(denominator(a));
    r.products[out] = to_stoich(numerator(a));
    crn.add_reaction(std::move(r));
  }
  return crn;
}

Crn compile_min(const std::vector<std::string>& inputs,
                const std::string& out) {
  if (inputs.empty()) throw std::invalid_argument("empty min");
  Crn crn;
  Reaction r;
  for (const auto& in : inputs) r.reactants[in] += 1;
  r.products[out] = 1;
  crn.add_reaction(std::move(r));
  return crn;
}

Crn compile_predicate(DomainMask k, const std::vector<std::string>& inputs,
                      const std::string& out) {
  if (k == 0) throw std::invalid_argument("empty predicate subset");
  Crn crn;
  Reaction r;
  for (size_t i = 0; i < inputs.size(); ++i)
    if (k & (DomainMask(1) << i)) r.reactants[inputs[i]] = 1;
  r.products[out] = 1;
  crn.add_reaction(std::move(r));
  return crn;
}

Crn compile_gate(const std::string& src, const std::string& gate,
                 const std::string& out) {
  Crn crn;
  Reaction r;
  r.reactants[src] = 1;
  r.reactants[gate] += 1;
  r.products[out] = 1;
  r.products[gate] += 1;
  crn.add_reaction(std::move(r));
  return crn;
}

Crn compile_copy(const std::string& src,
                 const std::vector<std::string>& outs) {
  if (outs.empty()) throw std::invalid_argument("copy needs a target");
  Crn crn;
  Reaction r;
  r.reactants[src] = 1;
  for (const auto& o : outs) r.products[o] += 1;
  crn.add_reaction(std::move(r));
  return crn;
}

namespace {

// Smallest input subset R such that every piece depends on the support
// pattern only through its intersection with R: g_S equals the restriction
// to S of g_{(S∩R)∪(complement of R)}. The subset enumeration can then run
// over subsets of R only.
DomainMask relevant_mask(const FunctionSpec& spec) {
  DomainMask full = spec.full_mask();
  for (size_t size = 0; size <= spec.n; ++size) {
    for (DomainMask r = 0; r <= full; ++r) {
      if (std::popcount(r) != int(size)) continue;
      bool ok = true;
      for (DomainMask s = 0; s <= full && ok; ++s) {
        DomainMask rep = (s & r) | (full & ~r);
        if (!(spec.domain(s) == canonicalize(spec.domain(rep), s, spec.n)))
          ok = false;
      }
      if (ok) return r;
    }
  }
  return full;
}

struct Builder {
  Crc crc;
  std::vector<std::string> reaction_stage;
  std::map<std::string, std::string> species_stage;
  CompileReport report;

  std::string fresh(const std::string& stage) {
    size_t k = species_stage.size() + 1;
    std::string name;
    do name = "W" + std::to_string(k++);
    while (crc.crn.species_index(name) >= 0);
    crc.crn.add_species(name);
    species_stage[name] = stage;
    return name;
  }
  std::string named(const std::string& name, const std::string& role,
                    const std::string& stage) {
    crc.crn.add_species(name);
    species_stage[name] = stage;
    report.names[role] = name;
    return name;
  }
  void add(const Crn& sub, const std::string& stage) {
    for (const Reaction& r : sub.reactions) {
      crc.crn.add_reaction(r);
      reaction_stage.push_back(stage);
    }
  }

  void finalize_counts() {
    report.species_counts.clear();
    report.reaction_counts.clear();
    for (const auto& [sp, stage] : species_stage) {
      (void)sp;
      ++report.species_counts[stage];
    }
    for (const auto& stage : reaction_stage) ++report.reaction_counts[stage];
  }
};

void rename_species(Crc& crc, const std::string& from, const std::string& to) {
  for (auto& sp : crc.crn.species)
    if (sp == from) sp = to;
  for (auto& r : crc.crn.reactions) {
    auto move_key = [&](std::map<std::string, int>& m) {
      auto it = m.find(from);
      if (it == m.end()) return;
      int k = it->second;
      m.erase(it);
      m[to] += k;
    };
    move_key(r.reactants);
    move_key(r.products);
  }
  for (auto& in : crc.inputs)
    if (in == from) in = to;
  if (crc.output == from) crc.output = to;
  auto it = crc.context.find(from);
  if (it != crc.context.end()) {
    Rational v = it->second;
    crc.context.erase(it);
    crc.context[to] = v;
  }
}

// Drops reactions that can never fire even when every input and context
// species is present, then species no reaction mentions.
void dead_code_pass(Builder& b) {
  std::set<std::string> seed(b.crc.inputs.begin(), b.crc.inputs.end());
  for (const auto& [sp, v] : b.crc.context) {
    (void)v;
    seed.insert(sp);
  }
  std::set<std::string> reach = species_closure(b.crc.crn, seed);
  std::vector<Reaction> kept;
  std::vector<std::string> kept_stage;
  for (size_t j = 0; j < b.crc.crn.reactions.size(); ++j) {
    bool live = true;
    for (const auto& [sp, k] : b.crc.crn.reactions[j].reactants) {
      (void)k;
      if (!reach.count(sp)) {
        live = false;
        break;
      }
    }
    if (live) {
      kept.push_back(b.crc.crn.reactions[j]);
      kept_stage.push_back(b.reaction_stage[j]);
    }
  }
  b.crc.crn.reactions = std::move(kept);
  b.reaction_stage = std::move(kept_stage);

  std::set<std::string> used(b.crc.inputs.begin(), b.crc.inputs.end());
  used.insert(b.crc.output);
  for (const auto& [sp, v] : b.crc.context) {
    (void)v;
    used.insert(sp);
  }
  for (const auto& r : b.crc.crn.reactions) {
    for (const auto& [sp, k] : r.reactants) {
      (void)k;
      used.insert(sp);
    }
    for (const auto& [sp, k] : r.products) {
      (void)k;
      used.insert(sp);
    }
  }
  std::erase_if(b.crc.crn.species,
                [&](const std::string& sp) { return !used.count(sp); });
  std::erase_if(b.species_stage,
                [&](const auto& kv) { return !used.count(kv.first); });
}

// Merges pure relay reactions A -> B where the relay is A's only consumer
// and B's only producer; skipped when B acts as a catalyst somewhere (the
// relay then delays availability on purpose) or either side is an interface
// species.
void inline_pass(Builder& b) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::string, int> consumers, producers;
    std::set<std::string> catalytic;
    for (const auto& r : b.crc.crn.reactions) {
      for (const auto& [sp, k] : r.reactants) {
        (void)k;
        ++consumers[sp];
        if (r.products.count(sp)) catalytic.insert(sp);
      }
      for (const auto& [sp, k] : r.products) {
        (void)k;
        ++producers[sp];
      }
    }
    std::set<std::string> iface(b.crc.inputs.begin(), b.crc.inputs.end());
    for (const auto& [sp, v] : b.crc.context) {
      (void)v;
      iface.insert(sp);
    }
    for (size_t j = 0; j < b.crc.crn.reactions.size(); ++j) {
      const Reaction& r = b.crc.crn.reactions[j];
      if (r.reactants.size() != 1 || r.products.size() != 1) continue;
      const auto& [a, ka] = *r.reactants.begin();
      const auto& [bsp, kb] = *r.products.begin();
      if (ka != 1 || kb != 1 || a == bsp) continue;
      if (iface.count(a) || a == b.crc.output) continue;
      if (iface.count(bsp)) continue;
      if (consumers[a] != 1 || producers[bsp] != 1) continue;
      if (catalytic.count(bsp)) continue;
      std::string survivor = (bsp == b.crc.output) ? bsp : a;
      std::string dropped = (survivor == a) ? bsp : a;
      b.crc.crn.reactions.erase(b.crc.crn.reactions.begin() + j);
      b.reaction_stage.erase(b.reaction_stage.begin() + j);
      std::erase(b.crc.crn.species, dropped);
      rename_species(b.crc, dropped, survivor);
      b.species_stage.erase(dropped);
      for (auto& [role, name] : b.report.names)
        if (name == dropped) name = survivor;
      changed = true;
      break;
    }
  }
}

}  // namespace

CompileResult compile_spec(const FunctionSpec& spec, bool prune) {
  if (spec.n > 8) throw TooManyInputs();
  ValidationReport vr = validate_spec(spec);
  if (!vr.valid()) throw ValidationFailed(std::move(vr));

  DomainMask full = spec.full_mask();
  DomainMask relevant = prune ? relevant_mask(spec) : full;
  DomainMask rest = full & ~relevant;

  Builder b;
  for (size_t i = 1; i <= spec.n; ++i) {
    std::string x = "X" + std::to_string(i);
    b.named(x, x, "input");
    b.crc.inputs.push_back(x);
  }
  b.crc.output = "Y";

  // Subset enumeration over the relevant inputs only; each enumerated T
  // stands for the support pattern T ∪ rest.
  std::vector<DomainMask> subsets;
  for (DomainMask t = 0; t <= full; ++t)
    if ((t & ~relevant) == 0) subsets.push_back(t);

  std::map<DomainMask, MinOfLinear> piece;
  std::map<DomainMask, bool> zero;
  for (DomainMask t : subsets) {
    piece[t] = spec.domain(t | rest);
    zero[t] = is_zero_piece(piece[t]);
  }

  // Gated terms P_K * g_K feeding accumulator H_T, for K ⊄ T.
  std::vector<std::pair<DomainMask, DomainMask>> gated;  // (T, K)
  std::set<DomainMask> used_predicates;
  for (DomainMask t : subsets)
    for (DomainMask k : subsets) {
      if (k == 0 || (k & ~t) == 0 || zero[k]) continue;
      gated.emplace_back(t, k);
      used_predicates.insert(k);
    }

  // Every consumer of an input gets its own exact-concentration copy.
  struct SiteKey {
    enum Kind { Linear, Predicate } kind;
    DomainMask t;
    size_t component;
    bool operator<(const SiteKey& o) const {
      return std::tie(kind, t, component) <
             std::tie(o.kind, o.t, o.component);
    }
  };
  std::map<std::pair<SiteKey, size_t>, std::string> copy_of;
  for (size_t i = 1; i <= spec.n; ++i) {
    std::vector<SiteKey> sites;
    for (DomainMask t : subsets) {
      if (zero[t]) continue;
      for (size_t c = 0; c < piece[t].components.size(); ++c)
        if (piece[t].components[c].coeffs[i - 1] > 0)
          sites.push_back({SiteKey::Linear, t, c});
    }
    for (DomainMask k : used_predicates)
      if (k & (DomainMask(1) << (i - 1)))
        sites.push_back({SiteKey::Predicate, k, 0});
    if (sites.empty()) continue;
    std::vector<std::string> outs;
    for (size_t j = 0; j < sites.size(); ++j) {
      std::string name =
          "X" + std::to_string(i) + "_c" + std::to_string(j + 1);
      b.crc.crn.add_species(name);
      b.species_stage[name] = "copy";
      copy_of[{sites[j], i}] = name;
      outs.push_back(name);
    }
    b.add(compile_copy("X" + std::to_string(i), outs), "copy");
  }

  for (DomainMask k : used_predicates) {
    std::string p = b.named("P" + mask_str(k), "P" + mask_str(k), "predicate");
    Reaction r;
    for (size_t i = 1; i <= spec.n; ++i)
      if (k & (DomainMask(1) << (i - 1)))
        r.reactants[copy_of.at({{SiteKey::Predicate, k, 0}, i})] = 1;
    r.products[p] = 1;
    Crn sub;
    sub.add_reaction(std::move(r));
    b.add(sub, "predicate");
  }

  // Per-subset value modules: linear parts into component targets, then the
  // component min into Y_T.
  for (DomainMask t : subsets) {
    if (zero[t]) continue;
    const MinOfLinear& g = piece[t];
    std::string yt =
        b.named("Y_S" + mask_str(t), "Y_S" + mask_str(t), "linear");
    std::vector<std::string> targets;
    for (size_t c = 0; c < g.components.size(); ++c)
      targets.push_back(g.components.size() == 1 ? yt : b.fresh("linear"));
    for (size_t c = 0; c < g.components.size(); ++c) {
      Crn sub;
      for (size_t i = 1; i <= spec.n; ++i) {
        const Rational& a = g.components[c].coeffs[i - 1];
        if (a == 0) continue;
        Reaction r;
        r.reactants[copy_of.at({{SiteKey::Linear, t, c}, i})] =
            to_stoich(denominator(a));
        r.products[targets[c]] = to_stoich(numerator(a));
        sub.add_reaction(std::move(r));
      }
      b.add(sub, "linear");
    }
    if (g.components.size() > 1) b.add(compile_min(targets, yt), "min");
  }

  // Fan each Y_T out to its accumulator and its gated uses, then gate.
  std::map<DomainMask, std::string> acc;
  for (DomainMask t : subsets)
    acc[t] = b.named("H" + mask_str(t), "H" + mask_str(t), "sum");
  std::map<std::pair<DomainMask, DomainMask>, std::string> gate_src;
  for (DomainMask t : subsets) {
    if (zero[t]) continue;
    std::vector<std::string> outs{acc[t]};
    for (const auto& [tt, k] : gated)
      if (k == t) {
        gate_src[{tt, k}] = b.fresh("gate");
        outs.push_back(gate_src[{tt, k}]);
      }
    b.add(compile_copy("Y_S" + mask_str(t), outs), "sum");
  }
  for (const auto& [t, k] : gated)
    b.add(compile_gate(gate_src.at({t, k}), "P" + mask_str(k), acc[t]),
          "gate");

  std::vector<std::string> accs;
  for (DomainMask t : subsets) accs.push_back(acc[t]);
  b.crc.crn.add_species("Y");
  b.species_stage["Y"] = "output";
  b.report.names["Y"] = "Y";
  b.add(compile_min(accs, "Y"), "min");

  if (prune) {
    dead_code_pass(b);
    inline_pass(b);
    dead_code_pass(b);
  }
  b.finalize_counts();
  return {std::move(b.crc), std::move(b.report)};
}

namespace {

std::string fresh_w(Crn& crn, size_t& counter) {
  std::string name;
  do name = "W" + std::to_string(++counter);
  while (crn.species_index(name) >= 0);
  crn.add_species(name);
  return name;
}

std::vector<std::string> flatten(const std::map<std::string, int>& side) {
  std::vector<std::string> out;
  for (const auto& [sp, k] : side) out.insert(out.end(), k, sp);
  return out;
}

}  // namespace

Crn decompose_bimolecular(const Crn& crn) {
  Crn out;
  for (const auto& sp : crn.species) out.add_species(sp);
  size_t counter = 0;
  for (const Reaction& r : crn.reactions) {
    std::vector<std::string> rs = flatten(r.reactants);
    std::vector<std::string> ps = flatten(r.products);
    if (rs.size() <= 2 && ps.size() <= 2) {
      out.add_reaction(r);
      continue;
    }
    if (rs.size() > 2) {
      // Reduce each reactant to a single token first. Repeated reactants
      // must pair with themselves: `2 A -> T` halving steps convert the
      // whole pool regardless of schedule, so they are exact for any
      // power-of-two stoichiometry. A leftover odd factor >= 3 cannot be
      // consumed by an irreversible chain (any schedule that pairs
      // greedily strands the remainder), so it gets the reversible
      // accumulation chain; that preserves the computed function but
      // introduces a cycle, so such networks are no longer feedforward.
      std::vector<std::string> lanes;
      for (const auto& [sp, a0] : r.reactants) {
        std::string cur = sp;
        int a = a0;
        while (a > 1 && a % 2 == 0) {
          std::string t = fresh_w(out, counter);
          Reaction half;
          half.reactants[cur] = 2;
          half.products[t] = 1;
          out.add_reaction(std::move(half));
          cur = t;
          a /= 2;
        }
        if (a > 1) {
          std::string acc = fresh_w(out, counter);
          Reaction fwd, bwd;
          fwd.reactants[cur] = 2;
          fwd.products[acc] = 1;
          bwd.reactants[acc] = 1;
          bwd.products[cur] = 2;
          out.add_reaction(std::move(fwd));
          out.add_reaction(std::move(bwd));
          for (int k = 3; k < a; ++k) {
            std::string next = fresh_w(out, counter);
            Reaction grow, shrink;
            grow.reactants[acc] = 1;
            grow.reactants[cur] += 1;
            grow.products[next] = 1;
            shrink.reactants[next] = 1;
            shrink.products[acc] = 1;
            shrink.products[cur] += 1;
            out.add_reaction(std::move(grow));
            out.add_reaction(std::move(shrink));
            acc = next;
          }
          std::string t = fresh_w(out, counter);
          Reaction fin;
          fin.reactants[acc] = 1;
          fin.reactants[cur] += 1;
          fin.products[t] = 1;
          out.add_reaction(std::move(fin));
          cur = t;
        }
        lanes.push_back(cur);
      }
      rs = lanes;
    }
    while (rs.size() > 2) {
      std::string w = fresh_w(out, counter);
      Reaction step;
      step.reactants[rs[0]] += 1;
      step.reactants[rs[1]] += 1;
      step.products[w] = 1;
      out.add_reaction(std::move(step));
      rs.erase(rs.begin(), rs.begin() + 2);
      rs.insert(rs.begin(), w);
    }
    Reaction head;
    for (const auto& sp : rs) head.reactants[sp] += 1;
    if (ps.size() <= 2) {
      for (const auto& sp : ps) head.products[sp] += 1;
      out.add_reaction(std::move(head));
      continue;
    }
    std::string w = fresh_w(out, counter);
    head.products[w] = 1;
    head.products[ps.back()] += 1;
    ps.pop_back();
    out.add_reaction(std::move(head));
    while (ps.size() > 2) {
      std::string w2 = fresh_w(out, counter);
      Reaction split;
      split.reactants[w] = 1;
      split.products[w2] = 1;
      split.products[ps.back()] += 1;
      ps.pop_back();
      out.add_reaction(std::move(split));
      w = w2;
    }
    Reaction tail;
    tail.reactants[w] = 1;
    for (const auto& sp : ps) tail.products[sp] += 1;
    out.add_reaction(std::move(tail));
  }
  return out;
}

Crc decompose_bimolecular(const Crc& crc) {
  Crc out = crc;
  out.crn = decompose_bimolecular(crc.crn);
  return out;
}

CompileResult compile_with_context(const FunctionSpec& spec, bool prune) {
  FunctionSpec ext;
  ext.n = spec.n + 1;
  ext.inherit_default = false;
  DomainMask gbit = DomainMask(1) << spec.n;
  for (DomainMask s = 0; s <= spec.full_mask(); ++s) {
    MinOfLinear g = spec.domain(s);
    MinOfLinear with_g, without_g;
    for (const auto& comp : g.components) {
      LinearFn w = comp;
      w.coeffs.push_back(comp.constant);
      w.constant = 0;
      with_g.components.push_back(w);
      w.coeffs.back() = 0;
      without_g.components.push_back(std::move(w));
    }
    ext.domains[s | gbit] = std::move(with_g);
    ext.domains[s] = std::move(without_g);
    if (spec.n == 0) break;
  }
  CompileResult res = compile_spec(ext, prune);
  std::string gname = "X" + std::to_string(spec.n + 1);
  rename_species(res.crc, gname, "Gamma");
  for (auto& [role, name] : res.report.names)
    if (name == gname) name = "Gamma";
  std::erase(res.crc.inputs, "Gamma");
  res.crc.context["Gamma"] = 1;
  return res;
}

Crc realize_unit_context(const Crc& crc) {
  Crc out = crc;
  std::vector<std::pair<std::string, Rational>> todo;
  for (const auto& [sp, v] : crc.context)
    if (v != 1) todo.emplace_back(sp, v);
  for (const auto& [sp, v] : todo) {
    std::string primed = sp + "'";
    while (out.crn.species_index(primed) >= 0) primed += "'";
    Reaction r;
    r.reactants[primed] = to_stoich(denominator(v));
    r.products[sp] = to_stoich(numerator(v));
    out.crn.add_reaction(std::move(r));
    out.context.erase(sp);
    out.context[primed] = 1;
  }
  return out;
}

State initial_state(const Crc& crc, const State& inputs) {
  State s = inputs;
  for (const auto& [sp, v] : crc.context) s.set(sp, s.get(sp) + v);
  return s;
}

}  // namespace crnc
