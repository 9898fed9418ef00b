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

#ifndef CRNC_MASSACTION_HPP
#define CRNC_MASSACTION_HPP

#include <map>
#include <string>
#include <vector>

#include "crnc/crn.hpp"

namespace crnc {

struct RateAssignment {
  std::vector<double> rates;  // per reaction, strictly positive

  static RateAssignment uniform(size_t reactions, double rate = 1.0) {
    return {std::vector<double>(reactions, rate)};
  }
};

struct SimResult {
  std::vector<double> times;
  std::map<std::string, std::vector<double>> trajectories;
  std::map<std::string, double> final_state;  // clamped at 0 for reporting
  bool converged = false;  // max |derivative| < tol at the end
};

/// Integrates the deterministic mass-action ODE with an adaptive Rosenbrock4
/// stepper (abs/rel tolerance 1e-9) from x0 to t_end; the implicit stepper
/// matters because high-order reactant tails decay polynomially while the
/// intermediates relax fast, which makes the system stiff. `tol` is the
/// derivative sup-norm threshold for the convergence flag. Trajectories are
/// recorded on a decimated grid (at most a few thousand points). Throws
/// std::runtime_error on step-size underflow.
SimResult simulate(const Crc& crc, const State& x0,
                   const RateAssignment& rates, double t_end,
                   double tol = 1e-6);

}  // namespace crnc

#endif  // CRNC_MASSACTION_HPP
