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

#include "crnc/massaction.hpp"

#include <cmath>
#include <stdexcept>

#include "crnc/stiff_ode.hpp"

namespace crnc {

namespace {

// Mass-action right-hand side and its analytic Jacobian. Relaxation of the
// intermediates is much faster than the polynomial decay of the high-order
// reactant tails, so the system is stiff and an implicit (Rosenbrock)
// stepper is required to reach the large t_end the tails need.
struct MassActionOde {
  std::vector<std::vector<std::pair<size_t, int>>> reactant_idx;  // per rxn
  std::vector<std::vector<std::pair<size_t, int>>> net_idx;
  std::vector<double> rates;
  size_t n;

  MassActionOde(const Crn& crn, const std::vector<double>& k)
      : rates(k), n(crn.species.size()) {
    std::map<std::string, size_t> pos;
    for (size_t i = 0; i < crn.species.size(); ++i) pos[crn.species[i]] = i;
    for (const Reaction& r : crn.reactions) {
      std::vector<std::pair<size_t, int>> re, net;
      for (const auto& [sp, m] : r.reactants) re.emplace_back(pos[sp], m);
      for (const auto& sp : crn.species) {
        int m = r.net(sp);
        if (m != 0) net.emplace_back(pos[sp], m);
      }
      reactant_idx.push_back(std::move(re));
      net_idx.push_back(std::move(net));
    }
  }

  void rhs(const std::vector<double>& c, std::vector<double>& dc) const {
    dc.assign(n, 0.0);
    for (size_t j = 0; j < reactant_idx.size(); ++j) {
      double v = rates[j];
      for (const auto& [i, k] : reactant_idx[j])
        for (int p = 0; p < k; ++p) v *= std::max(c[i], 0.0);
      for (const auto& [i, m] : net_idx[j]) dc[i] += v * m;
    }
  }

  void jacobian(const std::vector<double>& c, std::vector<double>& jac) const {
    jac.assign(n * n, 0.0);
    for (size_t j = 0; j < reactant_idx.size(); ++j) {
      // d(rate * prod c_i^k_i)/dc_m = rate * k_m c_m^{k_m-1} * prod_{i!=m}.
      for (const auto& [m, km] : reactant_idx[j]) {
        if (c[m] < 0) continue;
        double d = rates[j] * km;
        for (const auto& [i, k] : reactant_idx[j]) {
          int pw = (i == m) ? k - 1 : k;
          for (int p = 0; p < pw; ++p) d *= std::max(c[i], 0.0);
        }
        for (const auto& [i, nm] : net_idx[j]) jac[i * n + m] += d * nm;
      }
    }
  }
};

}  // namespace

SimResult simulate(const Crc& crc, const State& x0,
                   const RateAssignment& rates, double t_end, double tol) {
  if (rates.rates.size() != crc.crn.reactions.size())
    throw std::invalid_argument("rate count mismatch");
  for (double k : rates.rates)
    if (!(k > 0)) throw std::invalid_argument("rates must be positive");

  MassActionOde ode(crc.crn, rates.rates);
  std::vector<double> c(crc.crn.species.size());
  for (size_t i = 0; i < crc.crn.species.size(); ++i)
    c[i] = x0.get(crc.crn.species[i]).convert_to<double>();

  SimResult res;
  // Record on a decimated grid so multi-decade integrations stay bounded:
  // once kMaxPoints samples are stored, drop every other one and halve the
  // recording rate.
  constexpr size_t kMaxPoints = 4096;
  size_t stride = 1, since_last = 0;
  auto record = [&](double t) {
    if (++since_last < stride) return;
    since_last = 0;
    if (res.times.size() == kMaxPoints) {
      size_t w = 0;
      for (size_t r = 0; r < res.times.size(); r += 2, ++w)
        res.times[w] = res.times[r];
      res.times.resize(w);
      for (auto& [sp, traj] : res.trajectories) {
        w = 0;
        for (size_t r = 0; r < traj.size(); r += 2, ++w) traj[w] = traj[r];
        traj.resize(w);
      }
      stride *= 2;
    }
    res.times.push_back(t);
    for (size_t i = 0; i < c.size(); ++i)
      res.trajectories[crc.crn.species[i]].push_back(c[i]);
  };
  since_last = stride;  // force-record the initial state
  record(0.0);
  try {
    rosenbrock_integrate(
        c, t_end, 1e-9, 1e-9,
        [&](const std::vector<double>& x, std::vector<double>& dx) {
          ode.rhs(x, dx);
        },
        [&](const std::vector<double>& x, std::vector<double>& j) {
          ode.jacobian(x, j);
        },
        [&](double t) { record(t); });
  } catch (const std::runtime_error&) {
    throw std::runtime_error("mass-action integration: step-size underflow");
  }
  if (res.times.empty() || res.times.back() != t_end) {
    since_last = stride;
    record(t_end);
  }

  std::vector<double> dc;
  ode.rhs(c, dc);
  double sup = 0;
  for (double d : dc) sup = std::max(sup, std::fabs(d));
  res.converged = sup < tol;
  for (size_t i = 0; i < c.size(); ++i)
    res.final_state[crc.crn.species[i]] = std::max(c[i], 0.0);
  return res;
}

}  // namespace crnc
