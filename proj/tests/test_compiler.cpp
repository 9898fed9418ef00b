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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "crnc/compiler.hpp"
#include "crnc/composition.hpp"
#include "crnc/semantics.hpp"
#include "support/corpus.hpp"

using namespace crnc;

TEST_CASE("unit compilers") {
  LinearFn g;
  g.coeffs = {Rational(2, 3), Rational(0), Rational(5)};
  Crn lin = compile_linear(g, {"A", "B", "C"}, "OUT");
  REQUIRE(lin.reactions.size() == 2);
  CHECK(lin.reactions[0].reactants.at("A") == 3);
  CHECK(lin.reactions[0].products.at("OUT") == 2);
  CHECK(lin.reactions[1].reactants.at("C") == 1);
  CHECK(lin.reactions[1].products.at("OUT") == 5);
  g.coeffs[0] = -1;
  CHECK_THROWS_AS(compile_linear(g, {"A", "B", "C"}, "OUT"),
                  std::invalid_argument);

  Crn mn = compile_min({"U", "V"}, "W");
  REQUIRE(mn.reactions.size() == 1);
  CHECK(mn.reactions[0].reactants ==
        std::map<std::string, int>{{"U", 1}, {"V", 1}});

  Crn pred = compile_predicate(5, {"X1", "X2", "X3"}, "P");
  REQUIRE(pred.reactions.size() == 1);
  CHECK(pred.reactions[0].reactants ==
        std::map<std::string, int>{{"X1", 1}, {"X3", 1}});
  CHECK_THROWS_AS(compile_predicate(0, {"X1"}, "P"), std::invalid_argument);

  Crn gate = compile_gate("S", "G", "T");
  CHECK(gate.reactions[0].net("G") == 0);
  CHECK(gate.reactions[0].net("S") == -1);
  CHECK(gate.reactions[0].net("T") == 1);

  Crn copy = compile_copy("X", {"A", "B", "C"});
  CHECK(copy.reactions[0].products.size() == 3);
}

namespace {

Rational eval_net(const Crc& crc, const RationalVector& x) {
  return corpus::run_y(crc, x);
}

// Multiset of reaction shapes (sorted reactant/product stoichiometry lists),
// a renaming-invariant signature.
std::vector<std::pair<std::vector<int>, std::vector<int>>> shapes(
    const Crn& crn) {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  for (const auto& r : crn.reactions) {
    std::vector<int> re, pr;
    for (const auto& [sp, k] : r.reactants) re.push_back(k);
    for (const auto& [sp, k] : r.products) pr.push_back(k);
    std::sort(re.begin(), re.end());
    std::sort(pr.begin(), pr.end());
    out.push_back({re, pr});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("compiled example spec computes the example function") {
  FunctionSpec ex = corpus::example_spec();
  CompileResult res = compile_spec(ex, /*prune=*/false);
  CHECK(res.crc.inputs.size() == 3);
  CHECK(is_output_oblivious(res.crc).oblivious);
  CHECK(is_feedforward(res.crc.crn).has_value());

  std::mt19937_64 rng(31);
  for (const auto& x : corpus::sample_inputs(3, 25, rng)) {
    CHECK(eval_net(res.crc, x) == corpus::example_value(x));
  }
}

TEST_CASE("pruned example compilation is the hand-built 11-reaction net") {
  FunctionSpec ex = corpus::example_spec();
  CompileResult res = compile_spec(ex, /*prune=*/true);
  CHECK(res.crc.crn.reactions.size() == 11);

  // Hand-cleaned reference: copies, the x3 predicate, two gated x1 + x2
  // modules, the min module, the gate, and the final sum.
  Crn ref = parse_crn(
      "X1 -> X1_a + X1_b\n"
      "X2 -> X2_a + X2_b\n"
      "X3 -> X3_a\n"
      "X3_a -> P\n"
      "X1_a -> V\n"
      "X2_a -> V\n"
      "X1_b + X2_b -> W\n"
      "V -> H1 + G\n"
      "G + P -> H0 + P\n"
      "W -> H0\n"
      "H0 + H1 -> Y\n");
  CHECK(shapes(res.crc.crn) == shapes(ref));

  std::mt19937_64 rng(32);
  for (const auto& x : corpus::sample_inputs(3, 25, rng)) {
    CHECK(eval_net(res.crc, x) == corpus::example_value(x));
  }
}

TEST_CASE("pruning never changes the computed function") {
  std::mt19937_64 rng(33);
  for (int k = 0; k < 15; ++k) {
    FunctionSpec spec = corpus::random_valid_spec(rng);
    CompileResult plain = compile_spec(spec, false);
    CompileResult pruned = compile_spec(spec, true);
    CHECK(pruned.crc.crn.reactions.size() <= plain.crc.crn.reactions.size());
    for (const auto& x : corpus::sample_inputs(spec.n, 8, rng)) {
      Rational want = eval_spec(spec, x);
      CHECK(eval_net(plain.crc, x) == want);
      CHECK(eval_net(pruned.crc, x) == want);
    }
  }
}

TEST_CASE("irrelevant inputs are coarsened away") {
  // f(x1, x2) = x1 regardless of x2.
  FunctionSpec spec;
  spec.n = 2;
  spec.inherit_default = true;
  spec.domains[3] = MinOfLinear{{corpus::lin({1, 0})}};
  CompileResult pruned = compile_spec(spec, true);
  // Only one relevant input: no predicates or gates survive.
  for (const auto& r : pruned.crc.crn.reactions) {
    CHECK(r.reactants.size() == 1);
  }
  CHECK(eval_net(pruned.crc, {Rational(3), Rational(7)}) == 3);
}

TEST_CASE("compiler rejects invalid specs and too many inputs") {
  FunctionSpec bad;
  bad.n = 2;
  bad.inherit_default = false;
  bad.domains[3] = MinOfLinear{{corpus::lin({1, 0}), corpus::lin({0, 1})}};
  bad.domains[1] = MinOfLinear{{corpus::lin({1, 0})}};
  bad.domains[2] = MinOfLinear{{corpus::lin({0, 1})}};
  bad.domains[0] = canonicalize(MinOfLinear{{corpus::lin({0, 0})}}, 0, 2);
  CHECK_THROWS_AS(compile_spec(bad), ValidationFailed);

  FunctionSpec wide;
  wide.n = 9;
  wide.domains[wide.full_mask()] =
      MinOfLinear{{corpus::lin({1, 1, 1, 1, 1, 1, 1, 1, 1})}};
  CHECK_THROWS_AS(compile_spec(wide), TooManyInputs);
}

TEST_CASE("bimolecular decomposition") {
  Crn crn = parse_crn("A + B + C -> D\nE -> F + G + H\n");
  Crn bi = decompose_bimolecular(crn);
  for (const auto& r : bi.reactions) {
    int nr = 0, np = 0;
    for (const auto& [sp, k] : r.reactants) nr += k;
    for (const auto& [sp, k] : r.products) np += k;
    CHECK(nr <= 2);
    CHECK(np <= 2);
  }

  // 2A + 2B -> C has 4 reactant units; the chain pairs them up.
  Crn big = decompose_bimolecular(parse_crn("2 A + 2 B -> C"));
  for (const auto& r : big.reactions) {
    int nr = 0;
    for (const auto& [sp, k] : r.reactants) nr += k;
    CHECK(nr <= 2);
  }
}

TEST_CASE("power-of-two reactant stoichiometry decomposes to halving steps") {
  // 4 A -> 9 W fires x/4 times; balanced pairing keeps that exact under the
  // fire-to-completion executor.
  Crc crc;
  crc.crn = parse_crn("4 A -> 9 W");
  crc.inputs = {"A"};
  crc.output = "W";
  Crc bi = decompose_bimolecular(crc);
  CHECK(is_feedforward(bi.crn).has_value());
  State in;
  in.set("A", Rational(8, 3));
  CHECK(execute_topological(crc, in).final.get("W") == 6);
  CHECK(execute_topological(bi, in).final.get("W") == 6);
}

TEST_CASE("odd reactant stoichiometry decomposes to a reversible chain") {
  // An odd factor >= 3 cannot be consumed by irreversible pairing (any
  // schedule that pairs greedily strands the remainder), so the chain is
  // reversible; the network stops being feedforward, but the reachable
  // supremum of the output is unchanged.
  Crc crc;
  crc.crn = parse_crn("3 A -> 2 S");
  crc.inputs = {"A"};
  crc.output = "S";
  Crc bi = decompose_bimolecular(crc);
  bool has_reverse = false;
  for (const auto& r : bi.crn.reactions) {
    int nr = 0, np = 0;
    for (const auto& [sp, k] : r.reactants) nr += k;
    for (const auto& [sp, k] : r.products) np += k;
    CHECK(nr <= 2);
    CHECK(np <= 2);
    for (const auto& r2 : bi.crn.reactions)
      if (r.reactants == r2.products && r.products == r2.reactants)
        has_reverse = true;
  }
  CHECK(has_reverse);
  CHECK(!is_feedforward(bi.crn).has_value());
  State in;
  in.set("A", Rational(1));
  auto bound = max_output_bound(bi, in);
  CHECK(bound.value == Rational(2, 3));
}

TEST_CASE("bimolecular decomposition preserves the computed function") {
  FunctionSpec ex = corpus::example_spec();
  Crc crc = compile_spec(ex, true).crc;
  Crc bi = decompose_bimolecular(crc);
  std::mt19937_64 rng(41);
  for (const auto& x : corpus::sample_inputs(3, 20, rng)) {
    CHECK(eval_net(bi, x) == corpus::example_value(x));
  }
}

TEST_CASE("affine specs compile through an initial context") {
  // f(x) = min(x, 1).
  FunctionSpec spec;
  spec.n = 1;
  spec.inherit_default = true;
  MinOfLinear g;
  g.components = {corpus::lin({1})};
  LinearFn one;
  one.coeffs = {Rational(0)};
  one.constant = 1;
  g.components.push_back(one);
  spec.domains[1] = g;
  CHECK(spec.has_constants());

  CompileResult res = compile_with_context(spec, true);
  CHECK(res.crc.context.count("Gamma") == 1);
  CHECK(res.crc.context.at("Gamma") == 1);
  CHECK(res.crc.inputs == std::vector<std::string>{"X1"});

  auto run = [&](Rational x) {
    State in;
    in.set("X1", x);
    return execute_topological(res.crc, initial_state(res.crc, in))
        .final.get(res.crc.output);
  };
  CHECK(run(Rational(1, 2)) == Rational(1, 2));
  CHECK(run(Rational(3)) == 1);
  CHECK(run(Rational(0)) == 0);
  CHECK(run(Rational(1)) == 1);
}

TEST_CASE("non-unit context realization") {
  Crc crc;
  crc.crn = parse_crn("X + B -> Y + B");
  crc.inputs = {"X"};
  crc.output = "Y";
  crc.context["B"] = Rational(2, 3);
  Crc unit = realize_unit_context(crc);
  for (const auto& [sp, v] : unit.context) CHECK(v == 1);
  // Preamble 3 B' -> 2 B regenerates the original context.
  bool found = false;
  for (const auto& r : unit.crn.reactions) {
    if (r.reactants.count("B'") && r.reactants.at("B'") == 3 &&
        r.products.count("B") && r.products.at("B") == 2) {
      found = true;
    }
  }
  CHECK(found);
  State in;
  in.set("X", 1);
  auto res = execute_topological(unit, initial_state(unit, in));
  CHECK(res.final.get("Y") == 1);
}
