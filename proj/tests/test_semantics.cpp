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

#include <random>

#include "crnc/semantics.hpp"
#include "support/corpus.hpp"

using namespace crnc;

namespace {

State st(const std::string& text) { return parse_state(text); }

}  // namespace

TEST_CASE("apply_flux follows the stoichiometry") {
  Crc c = corpus::min_net();
  State s = st("X1=2, X2=3");
  State after = apply_flux(c.crn, s, {Rational(2)});
  CHECK(after.get("X1") == 0);
  CHECK(after.get("X2") == 1);
  CHECK(after.get("Y") == 2);

  // Zero flux everywhere is always legal.
  CHECK(apply_flux(c.crn, st("X1=0"), {Rational(0)}) == st("X1=0"));

  // Positive flux requires applicability at the start...
  CHECK_THROWS_AS(apply_flux(c.crn, st("X1=2"), {Rational(1)}),
                  InapplicableReaction);
  // ...and a nonnegative endpoint.
  CHECK_THROWS_AS(apply_flux(c.crn, st("X1=2, X2=1"), {Rational(2)}),
                  NegativeConcentration);
}

TEST_CASE("applicable reactions need all reactants positive") {
  Crc c = corpus::max_net();
  CHECK(applicable_reactions(c.crn, st("X1=1")) == std::set<size_t>{0});
  CHECK(applicable_reactions(c.crn, st("X1=1, X2=1")) ==
        std::set<size_t>{0, 1});
  CHECK(applicable_reactions(c.crn, st("Z1=1, Z2=1, Y=1, K=1")) ==
        std::set<size_t>{2, 3});
  CHECK(applicable_reactions(c.crn, State{}).empty());
}

TEST_CASE("species closure") {
  Crc c = corpus::max_net();
  auto cl = species_closure(c.crn, {"X1"});
  CHECK(cl == std::set<std::string>{"X1", "Z1", "Y"});
  auto cl2 = species_closure(c.crn, {"X1", "X2"});
  CHECK(cl2 == std::set<std::string>{"X1", "X2", "Z1", "Z2", "Y", "K"});

  // Closure is monotone in its seed.
  for (const auto& sp : cl) CHECK(cl2.count(sp) == 1);
}

TEST_CASE("output stability") {
  Crc c = corpus::min_net();
  CHECK(is_output_stable(c, st("X1=1, X2=1")).stable == false);
  CHECK(is_output_stable(c, st("X1=1, Y=1")).stable == true);
  CHECK(is_output_stable(c, st("Y=2")).exact == true);

  Crc m = corpus::max_net();
  // Y can still be destroyed through Z1 + Z2 -> K, Y + K -> 0.
  auto r = is_output_stable(m, st("Z1=1, Z2=1, Y=1"));
  CHECK(r.stable == false);
  CHECK(is_output_stable(m, st("Y=3")).stable == true);
}

TEST_CASE("max output bound: attained suprema") {
  Crc c = corpus::min_net();
  auto b = max_output_bound(c, st("X1=2, X2=5"));
  CHECK(b.value == 2);
  CHECK(!b.possibly_unattained);
  REQUIRE(b.attained_witness.has_value());
  replay_trace(c.crn, *b.attained_witness, st("X1=2, X2=5"));
  CHECK(b.attained_witness->final.get("Y") == 2);

  Crc m = corpus::max_net();
  // From (1, 2) the supremum of Y is x1 + x2 = 3, reached by never burning Y.
  auto bm = max_output_bound(m, st("X1=1, X2=2"));
  CHECK(bm.value == 3);
  REQUIRE(bm.attained_witness.has_value());
  CHECK(bm.attained_witness->final.get("Y") == 3);

  // Unreachable output stays at its initial value.
  auto b0 = max_output_bound(c, st("X1=4"));
  CHECK(b0.value == 0);
  CHECK(!b0.possibly_unattained);
}

TEST_CASE("max output bound: unattained supremum is flagged") {
  Crc c = corpus::footnote_net();
  auto b = max_output_bound(c, st("X=1"));
  CHECK(b.value == 1);
  CHECK(b.possibly_unattained);
  CHECK(!b.attained_witness.has_value());
}

TEST_CASE("max output bound: unbounded") {
  Crc c;
  c.crn = parse_crn("X + Y -> 2 Y");
  c.inputs = {"X"};
  c.output = "Y";
  // One seed unit of Y lets the autocatalyst run; X caps it at X + Y.
  auto b = max_output_bound(c, st("X=3, Y=1"));
  CHECK(b.value == 4);

  Crc g;
  g.crn = parse_crn("X -> X + Y");
  g.inputs = {"X"};
  g.output = "Y";
  CHECK_THROWS_AS(max_output_bound(g, st("X=1")), UnboundedOutput);
}

TEST_CASE("feedforward recognition") {
  auto ok = is_feedforward(corpus::min_net().crn);
  REQUIRE(ok.has_value());
  // Every net-producer of a species must net-consume an earlier one.
  CHECK(ok->size() == 3);

  CHECK(is_feedforward(corpus::max_net().crn).has_value());
  CHECK(is_feedforward(corpus::footnote_net().crn).has_value());
  CHECK(!is_feedforward(parse_crn("A -> B\nB -> A")).has_value());
  CHECK(!is_feedforward(parse_crn("2 X -> 3 X")).has_value());
}

TEST_CASE("topological executor on the running example network") {
  // Hand-built compilation of: x1 + x2 if x3 > 0, else min(x1, x2).
  Crc c;
  c.crn = parse_crn(
      "X1 -> X1_a + X1_b\n"
      "X2 -> X2_a + X2_b\n"
      "X3 -> P\n"
      "X1_a -> V\n"
      "X2_a -> V\n"
      "X1_b + X2_b -> W\n"
      "V -> H1 + G\n"
      "G + P -> H0 + P\n"
      "W -> H0\n"
      "H0 + H1 -> Y\n");
  c.inputs = {"X1", "X2", "X3"};
  c.output = "Y";

  auto r1 = execute_topological(c, st("X1=2, X2=3, X3=1"));
  CHECK(r1.final.get("Y") == 5);
  auto r2 = execute_topological(c, st("X1=2, X2=3"));
  CHECK(r2.final.get("Y") == 2);
  replay_trace(c.crn, r1.trace, st("X1=2, X2=3, X3=1"));

  Crc cyc;
  cyc.crn = parse_crn("A -> B\nB -> A");
  cyc.output = "B";
  CHECK_THROWS_AS(execute_topological(cyc, st("A=1")), NotFeedforward);
}

TEST_CASE("executor agrees with direct evaluation on simple nets") {
  Crc c = corpus::min_net();
  auto r = execute_topological(c, st("X1=1/3, X2=5/7"));
  CHECK(r.final.get("Y") == Rational(1, 3));
  CHECK(is_output_stable(c, r.final).stable);
}

TEST_CASE("random walk invariants") {
  std::mt19937_64 seeds(99);
  Crc c = corpus::max_net();
  State x0 = st("X1=2, X2=3/2");
  for (int k = 0; k < 30; ++k) {
    uint64_t seed = seeds();
    Trace t = random_segment_walk(c, x0, 12, seed);
    // Replay validates applicability and nonnegativity of every segment.
    replay_trace(c.crn, t, x0);
    // Determinism for a fixed seed.
    Trace t2 = random_segment_walk(c, x0, 12, seed);
    CHECK(t.final == t2.final);
    // Conservation: each unit of Y came from X1 or X2.
    CHECK(t.final.get("Y") <= Rational(7, 2));
  }
}

TEST_CASE("reachability is closed under segment concatenation and scaling") {
  Crc c = corpus::min_net();
  State x0 = st("X1=2, X2=2");
  Trace t = random_segment_walk(c, x0, 8, 5);
  // Halving every flux from the same start is still a valid trace.
  State s = x0;
  for (const auto& seg : t.segments) {
    FluxVector half = seg.flux;
    for (auto& f : half) f /= 2;
    s = apply_flux(c.crn, s, half);
  }
  CHECK(s.get("Y") == t.final.get("Y") / 2);
}

TEST_CASE("walk then executor completion matches the executor alone") {
  // On a feedforward net the computed output must not depend on adversarial
  // prefixes.
  Crc c = corpus::min_net();
  State x0 = st("X1=3, X2=4");
  Rational want = execute_topological(c, x0).final.get(c.output);
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    Trace t = random_segment_walk(c, x0, 6, seed);
    Rational got = execute_topological(c, t.final).final.get(c.output);
    CHECK(got == want);
  }
}

TEST_CASE("trace utilities") {
  Crc c = corpus::min_net();
  auto r = execute_topological(c, st("X1=1, X2=1"));
  FluxVector total = total_flux(c.crn, r.trace);
  REQUIRE(total.size() == 1);
  CHECK(total[0] == 1);
  CHECK(dump_trace(c.crn, r.trace).find("seg 0") != std::string::npos);

  Trace bad = r.trace;
  bad.final.set("Y", 99);
  CHECK_THROWS(replay_trace(c.crn, bad, st("X1=1, X2=1")));
}
