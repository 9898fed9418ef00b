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

#include "crnc/spec.hpp"

#include <algorithm>

#include <json.hpp>

namespace crnc {

Rational LinearFn::eval(const RationalVector& x) const {
  if (x.size() != coeffs.size())
    throw SpecError("evaluation point dimension mismatch");
  Rational v = constant;
  for (size_t i = 0; i < x.size(); ++i) v += coeffs[i] * x[i];
  return v;
}

Rational MinOfLinear::eval(const RationalVector& x) const {
  if (components.empty()) throw SpecError("empty min-of-linear");
  Rational v = components[0].eval(x);
  for (size_t c = 1; c < components.size(); ++c)
    v = std::min(v, components[c].eval(x));
  return v;
}

MinOfLinear canonicalize(MinOfLinear g, DomainMask mask, size_t n) {
  for (auto& comp : g.components) {
    comp.coeffs.resize(n, Rational(0));
    for (size_t i = 0; i < n; ++i)
      if (!(mask & (DomainMask(1) << i))) comp.coeffs[i] = 0;
  }
  LinearFn zero;
  zero.coeffs.assign(n, Rational(0));
  for (const auto& comp : g.components) {
    if (comp == zero) {
      g.components = {zero};
      return g;
    }
  }
  std::sort(g.components.begin(), g.components.end());
  g.components.erase(std::unique(g.components.begin(), g.components.end()),
                     g.components.end());
  return g;
}

MinOfLinear FunctionSpec::domain(DomainMask mask) const {
  auto it = domains.find(mask);
  if (it != domains.end()) return canonicalize(it->second, mask, n);
  if (!inherit_default && mask != full_mask())
    throw SpecError("no piece declared for the requested support pattern");
  auto full = domains.find(full_mask());
  if (full == domains.end())
    throw SpecError("spec lacks the full-support piece");
  return canonicalize(full->second, mask, n);
}

bool FunctionSpec::has_constants() const {
  for (const auto& [mask, g] : domains) {
    (void)mask;
    for (const auto& comp : g.components)
      if (comp.constant != 0) return true;
  }
  return false;
}

FunctionSpec load_spec(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string("spec JSON: ") + e.what());
  }
  FunctionSpec spec;
  try {
    if (!j.is_object() || !j.contains("inputs"))
      throw SpecError("spec JSON: missing \"inputs\"");
    spec.n = j.at("inputs").get<size_t>();
    if (spec.n > 31) throw SpecError("too many inputs");
    spec.inherit_default = j.value("inherit_default", true);
    for (const auto& d : j.value("domains", nlohmann::json::array())) {
      DomainMask mask = 0;
      for (size_t i : d.at("present").get<std::vector<size_t>>()) {
        if (i < 1 || i > spec.n)
          throw SpecError("domain refers to input " + std::to_string(i) +
                          " outside 1.." + std::to_string(spec.n));
        mask |= DomainMask(1) << (i - 1);
      }
      MinOfLinear g;
      for (const auto& row : d.at("min_of")) {
        LinearFn comp;
        for (const auto& coeff : row)
          comp.coeffs.push_back(parse_rational(coeff.get<std::string>()));
        if (comp.coeffs.size() != spec.n)
          throw SpecError("component length differs from input count");
        for (const auto& c : comp.coeffs)
          if (c < 0) throw SpecError("negative coefficient");
        g.components.push_back(std::move(comp));
      }
      if (g.components.empty()) throw SpecError("empty min_of");
      if (d.contains("constants")) {
        auto cs = d.at("constants").get<std::vector<std::string>>();
        if (cs.size() != g.components.size())
          throw SpecError("constants length differs from component count");
        for (size_t c = 0; c < cs.size(); ++c)
          g.components[c].constant = parse_rational(cs[c]);
      } else if (d.contains("constant")) {
        Rational c = parse_rational(d.at("constant").get<std::string>());
        for (auto& comp : g.components) comp.constant = c;
      }
      for (const auto& comp : g.components)
        if (comp.constant < 0) throw SpecError("negative constant");
      if (!spec.domains.emplace(mask, std::move(g)).second)
        throw SpecError("duplicate domain entry");
    }
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string("spec JSON: ") + e.what());
  }
  if (!spec.domains.count(spec.full_mask()))
    throw SpecError("spec lacks the full-support piece");
  return spec;
}

std::string save_spec(const FunctionSpec& spec) {
  nlohmann::json j;
  j["inputs"] = spec.n;
  j["inherit_default"] = spec.inherit_default;
  j["domains"] = nlohmann::json::array();
  for (const auto& [mask, g] : spec.domains) {
    nlohmann::json d;
    d["present"] = nlohmann::json::array();
    for (size_t i = 1; i <= spec.n; ++i)
      if (mask & (DomainMask(1) << (i - 1))) d["present"].push_back(i);
    d["min_of"] = nlohmann::json::array();
    bool constants = false;
    for (const auto& comp : g.components) {
      nlohmann::json row = nlohmann::json::array();
      for (const auto& c : comp.coeffs) row.push_back(to_string(c));
      d["min_of"].push_back(std::move(row));
      if (comp.constant != 0) constants = true;
    }
    if (constants) {
      d["constants"] = nlohmann::json::array();
      for (const auto& comp : g.components)
        d["constants"].push_back(to_string(comp.constant));
    }
    j["domains"].push_back(std::move(d));
  }
  return j.dump(2) + "\n";
}

}  // namespace crnc
