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

#include <cmath>

#include "crnc/massaction.hpp"
#include "crnc/rational.hpp"
#include "support/corpus.hpp"

using namespace crnc;

namespace {

State st(const std::string& text) { return parse_state(text); }

}  // namespace

TEST_CASE("unimolecular decay matches the closed form") {
  Crc c;
  c.crn = parse_crn("X -> Y");
  c.output = "Y";
  auto r = simulate(c, st("X=2"), RateAssignment::uniform(1), 30.0);
  CHECK(r.converged);
  // y(t) = 2 (1 - e^{-t}).
  CHECK(r.final_state.at("Y") == doctest::Approx(2 * (1 - std::exp(-30.0))));
  CHECK(r.final_state.at("X") == doctest::Approx(2 * std::exp(-30.0)));
  REQUIRE(!r.times.empty());
  CHECK(r.times.back() == doctest::Approx(30.0));
  CHECK(r.trajectories.at("Y").size() == r.times.size());
}

TEST_CASE("min network converges to the rate-independent value") {
  Crc c = corpus::min_net();
  auto r = simulate(c, st("X1=2, X2=5"), RateAssignment::uniform(1), 400.0,
                    1e-7);
  CHECK(r.converged);
  CHECK(std::abs(r.final_state.at("Y") - 2.0) < 1e-3);
  // Same limit under wildly different rates.
  auto r2 = simulate(c, st("X1=2, X2=5"), {{17.0}}, 400.0, 1e-7);
  CHECK(std::abs(r2.final_state.at("Y") - 2.0) < 1e-3);
}

TEST_CASE("conservation laws hold along the trajectory") {
  Crc c = corpus::min_net();
  auto m = stoich_matrix(c.crn);
  auto basis = left_null_space(m);
  REQUIRE(basis.size() == 2);
  auto r = simulate(c, st("X1=1, X2=3"), RateAssignment::uniform(1), 50.0);
  std::vector<std::string> order = c.crn.species;
  for (const auto& v : basis) {
    std::vector<double> vd;
    for (const auto& q : v) vd.push_back(q.convert_to<double>());
    double c0 = 0;
    for (size_t i = 0; i < order.size(); ++i)
      c0 += vd[i] * r.trajectories.at(order[i]).front();
    for (size_t t = 0; t < r.times.size(); ++t) {
      double ct = 0;
      for (size_t i = 0; i < order.size(); ++i)
        ct += vd[i] * r.trajectories.at(order[i])[t];
      CHECK(ct == doctest::Approx(c0).epsilon(1e-6));
    }
  }
}

TEST_CASE("states stay nonnegative and zero inputs stay zero") {
  Crc c = corpus::max_net();
  auto r = simulate(c, st("X1=1"), RateAssignment::uniform(4), 200.0);
  for (const auto& [sp, traj] : r.trajectories)
    for (double v : traj) CHECK(v >= -1e-9);
  // Without X2 the cancellation path never runs.
  CHECK(r.final_state.at("Y") == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(r.final_state.at("K") == doctest::Approx(0.0));
}

TEST_CASE("rate vector validation") {
  Crc c = corpus::min_net();
  CHECK_THROWS_AS(simulate(c, st("X1=1"), {{1.0, 1.0}}, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(simulate(c, st("X1=1"), {{0.0}}, 1.0),
                  std::invalid_argument);
}

TEST_CASE("compiled example network settles near the exact value") {
  auto res = compile_spec(corpus::example_spec(), true);
  State x0 = corpus::input_state(res.crc, {Rational(2), Rational(3),
                                           Rational(1)});
  auto r = simulate(res.crc, x0, RateAssignment::uniform(res.crc.crn.reactions.size()),
                    800.0, 1e-7);
  CHECK(std::abs(r.final_state.at(res.crc.output) - 5.0) < 1e-3);
}
