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

#include "crnc/crn.hpp"

using namespace crnc;

TEST_CASE("reaction line parsing") {
  Crn crn = parse_crn("2 X -> 3 Y");
  REQUIRE(crn.reactions.size() == 1);
  CHECK(crn.reactions[0].reactants.at("X") == 2);
  CHECK(crn.reactions[0].products.at("Y") == 3);
  CHECK(crn.reactions[0].net("X") == -2);
  CHECK(crn.reactions[0].net("Y") == 3);
  CHECK(crn.species == std::vector<std::string>{"X", "Y"});

  Crn waste = parse_crn("Y + K -> 0");
  REQUIRE(waste.reactions.size() == 1);
  CHECK(waste.reactions[0].products.empty());

  Crn rev = parse_crn("A <-> B");
  REQUIRE(rev.reactions.size() == 2);
  CHECK(rev.reactions[0].reactants.at("A") == 1);
  CHECK(rev.reactions[1].reactants.at("B") == 1);

  Crn cat = parse_crn("G + S' -> G + H_1");
  CHECK(cat.reactions[0].net("G") == 0);
  CHECK(cat.species_index("S'") == 1);
}

TEST_CASE("header parsing") {
  Crc crc = parse_crc(
      "# comment\n"
      "inputs: X1, X2\n"
      "output: Y\n"
      "context: Gamma = 1, B = 2/3\n"
      "\n"
      "X1 + Gamma -> Y + Gamma\n");
  CHECK(crc.inputs == std::vector<std::string>{"X1", "X2"});
  CHECK(crc.output == "Y");
  CHECK(crc.context.at("Gamma") == 1);
  CHECK(crc.context.at("B") == Rational(2, 3));
  REQUIRE(crc.crn.reactions.size() == 1);
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_crn("-> Y"), ParseError);
  CHECK_THROWS_AS(parse_crn("X ->"), ParseError);
  CHECK_THROWS_AS(parse_crn("X - Y"), ParseError);
  CHECK_THROWS_AS(parse_crn("0 X -> Y"), ParseError);
  CHECK_THROWS_AS(parse_crn("X -> 2"), ParseError);
  CHECK_THROWS_AS(parse_crc("context: Gamma\nX -> Y\n"), ParseError);
  try {
    parse_crn("X -> Y\n-> Z\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("stoichiometry matrix") {
  Crn crn = parse_crn(
      "X1 + X2 -> Y\n"
      "2 Y -> X1\n");
  auto m = stoich_matrix(crn);
  // Rows follow species first-appearance order X1, X2, Y.
  REQUIRE(m.size() == 3);
  CHECK(m[0] == std::vector<int>{-1, 1});
  CHECK(m[1] == std::vector<int>{-1, 0});
  CHECK(m[2] == std::vector<int>{1, -2});
}

TEST_CASE("state parsing and printing") {
  State s = parse_state("X1=2, X2 = 3/4");
  CHECK(s.get("X1") == 2);
  CHECK(s.get("X2") == Rational(3, 4));
  CHECK(s.get("absent") == 0);
  s.set("X1", 0);
  CHECK(s.concentrations().count("X1") == 0);
  CHECK(s.present() == std::vector<std::string>{"X2"});
  CHECK(parse_state(serialize_state(s)) == s);
  CHECK_THROWS_AS(parse_state("X1"), ParseError);
  CHECK_THROWS_AS(parse_state("X1=-1"), std::exception);
}

namespace {

Crc random_crc(std::mt19937_64& rng) {
  std::vector<std::string> pool = {"A", "B2", "C_x", "D'", "E"};
  Crc crc;
  size_t nr = 1 + rng() % 5;
  for (size_t i = 0; i < nr; ++i) {
    Reaction r;
    size_t nreac = 1 + rng() % 2, nprod = rng() % 3;
    for (size_t j = 0; j < nreac; ++j)
      r.reactants[pool[rng() % pool.size()]] += 1 + int(rng() % 2);
    for (size_t j = 0; j < nprod; ++j)
      r.products[pool[rng() % pool.size()]] += 1 + int(rng() % 2);
    crc.crn.add_reaction(std::move(r));
  }
  if (rng() % 2) {
    crc.inputs = {"A"};
    crc.output = "E";
    crc.crn.add_species("E");
    if (rng() % 2) crc.context["G"] = Rational(1 + rng() % 5, 1 + rng() % 3);
  }
  for (const auto& [sp, v] : crc.context) crc.crn.add_species(sp);
  return crc;
}

}  // namespace

TEST_CASE("serialize/parse round trip on random networks") {
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 200; ++iter) {
    Crc crc = random_crc(rng);
    Crc back = parse_crc(serialize_crc(crc));
    CHECK(back.crn.reactions == crc.crn.reactions);
    CHECK(back.inputs == crc.inputs);
    CHECK(back.output == crc.output);
    CHECK(back.context == crc.context);
  }
}
