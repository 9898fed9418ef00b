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

#ifndef CRNC_STIFF_ODE_HPP
#define CRNC_STIFF_ODE_HPP

#include <functional>
#include <vector>

namespace crnc {

// Adaptive Rosenbrock4 integration of an autonomous stiff ODE system.
// `rhs(c, dc)` fills the derivative; `jac(c, j)` fills the row-major n x n
// Jacobian. `on_step(t)` fires after every accepted step with `c` updated in
// place. Throws std::runtime_error on step-size underflow.
//
// This lives in its own translation unit because Boost.uBLAS (which the
// odeint Rosenbrock stepper requires) does not compile as C++20.
void rosenbrock_integrate(
    std::vector<double>& c, double t_end, double abs_tol, double rel_tol,
    const std::function<void(const std::vector<double>&, std::vector<double>&)>&
        rhs,
    const std::function<void(const std::vector<double>&, std::vector<double>&)>&
        jac,
    const std::function<void(double)>& on_step);

}  // namespace crnc

#endif  // CRNC_STIFF_ODE_HPP
