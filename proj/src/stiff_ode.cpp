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

// Compiled as C++17: Boost.uBLAS relies on allocator members that C++20
// removed. Keep this translation unit free of project headers that need
// C++20.

#include "crnc/stiff_ode.hpp"

#include <algorithm>
#include <stdexcept>

#include <boost/numeric/odeint.hpp>

namespace crnc {

void rosenbrock_integrate(
    std::vector<double>& c, double t_end, double abs_tol, double rel_tol,
    const std::function<void(const std::vector<double>&, std::vector<double>&)>&
        rhs,
    const std::function<void(const std::vector<double>&, std::vector<double>&)>&
        jac,
    const std::function<void(double)>& on_step) {
  namespace od = boost::numeric::odeint;
  namespace ub = boost::numeric::ublas;
  using Vec = ub::vector<double>;
  using Mat = ub::matrix<double>;

  const size_t n = c.size();
  std::vector<double> buf(n), jbuf(n * n);

  auto sys = [&](const Vec& x, Vec& dxdt, double) {
    std::copy(x.begin(), x.end(), buf.begin());
    std::vector<double> d(n);
    rhs(buf, d);
    std::copy(d.begin(), d.end(), dxdt.begin());
  };
  auto jm = [&](const Vec& x, Mat& m, const double&, Vec& dfdt) {
    std::copy(x.begin(), x.end(), buf.begin());
    jac(buf, jbuf);
    for (size_t i = 0; i < n; ++i)
      for (size_t k = 0; k < n; ++k) m(i, k) = jbuf[i * n + k];
    std::fill(dfdt.begin(), dfdt.end(), 0.0);
  };

  od::rosenbrock4_controller<od::rosenbrock4<double>> stepper(abs_tol,
                                                              rel_tol);
  Vec x(n);
  std::copy(c.begin(), c.end(), x.begin());
  double t = 0, dt = std::min(1e-3, t_end);
  while (t < t_end) {
    if (dt > t_end - t) dt = t_end - t;
    auto outcome = stepper.try_step(std::make_pair(sys, jm), x, t, dt);
    if (outcome == od::success) {
      std::copy(x.begin(), x.end(), c.begin());
      on_step(t);
    } else if (dt < 1e-13) {
      throw std::runtime_error("stiff integration: step-size underflow");
    }
  }
  std::copy(x.begin(), x.end(), c.begin());
}

}  // namespace crnc
