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

#include "crnc/composition.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace crnc {

ObliviousReport is_output_oblivious(const Crc& crc) {
  ObliviousReport rep;
  for (size_t j = 0; j < crc.crn.reactions.size(); ++j) {
    if (crc.crn.reactions[j].reactants.count(crc.output)) {
      rep.oblivious = false;
      rep.offenders.push_back(j);
    }
  }
  return rep;
}

Crc compose(const WiringPlan& plan) {
  const Crc& up = plan.upstream;
  const Crc& down = plan.downstream;
  if (std::find(down.inputs.begin(), down.inputs.end(), plan.bound_input) ==
      down.inputs.end())
    throw std::invalid_argument("bound input is not a downstream input");
  if (up.output.empty())
    throw std::invalid_argument("upstream has no output species");

  auto rename = [&](const std::string& sp) {
    return sp == plan.bound_input ? up.output : sp + plan.rename_suffix;
  };
  std::set<std::string> up_species(up.crn.species.begin(),
                                   up.crn.species.end());
  for (const auto& sp : down.crn.species) {
    std::string r = rename(sp);
    if (r != up.output && up_species.count(r))
      throw std::runtime_error("species name collision after rename: " + r);
  }

  Crc out = up;
  for (const auto& sp : down.crn.species) out.crn.add_species(rename(sp));
  for (const Reaction& r : down.crn.reactions) {
    Reaction nr;
    for (const auto& [sp, k] : r.reactants) nr.reactants[rename(sp)] = k;
    for (const auto& [sp, k] : r.products) nr.products[rename(sp)] = k;
    out.crn.add_reaction(std::move(nr));
  }
  for (const auto& in : down.inputs)
    if (in != plan.bound_input) out.inputs.push_back(rename(in));
  out.output = rename(down.output);
  for (const auto& [sp, v] : down.context) out.context[rename(sp)] = v;
  return out;
}

FanoutResult fanout(const Crc& crc, size_t k) {
  if (k == 0) throw std::invalid_argument("fanout needs k >= 1");
  ObliviousReport rep = is_output_oblivious(crc);
  if (!rep.oblivious)
    throw std::invalid_argument("fanout requires an output-oblivious CRC");
  FanoutResult res{crc, {}};
  Reaction r;
  r.reactants[crc.output] = 1;
  for (size_t i = 1; i <= k; ++i) {
    std::string copy = crc.output + "_f" + std::to_string(i);
    while (res.crc.crn.species_index(copy) >= 0) copy += "'";
    r.products[copy] += 1;
    res.outputs.push_back(copy);
  }
  res.crc.crn.add_reaction(std::move(r));
  return res;
}

PruneOutcome prune_output_consumers(const Crc& crc) {
  PruneOutcome out{crc, 0};
  size_t before = out.crc.crn.reactions.size();
  std::erase_if(out.crc.crn.reactions, [&](const Reaction& r) {
    return r.reactants.count(crc.output) > 0;
  });
  out.removed = before - out.crc.crn.reactions.size();
  return out;
}

}  // namespace crnc
