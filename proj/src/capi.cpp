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

#include "crnc.h"

#include <cstring>
#include <random>
#include <sstream>

#include <json.hpp>

#include "crnc/analysis.hpp"
#include "crnc/compiler.hpp"
#include "crnc/composition.hpp"
#include "crnc/crn.hpp"
#include "crnc/massaction.hpp"
#include "crnc/semantics.hpp"
#include "crnc/spec.hpp"

using nlohmann::json;

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put(char** slot, const std::string& s) {
  if (slot) *slot = dup_string(s);
}

// Maps exceptions to the exit-code contract: bad input -> 2, everything
// else -> 3.
template <typename Fn>
crnc_status guard(char** err, const Fn& fn) {
  try {
    return fn();
  } catch (const crnc::ParseError& e) {
    put(err, e.what());
    return CRNC_INPUT_ERROR;
  } catch (const crnc::SpecError& e) {
    put(err, e.what());
    return CRNC_INPUT_ERROR;
  } catch (const std::invalid_argument& e) {
    put(err, e.what());
    return CRNC_INPUT_ERROR;
  } catch (const std::exception& e) {
    put(err, e.what());
    return CRNC_INTERNAL_ERROR;
  }
}

json validation_json(const crnc::ValidationReport& r) {
  json j;
  j["coefficients_nonnegative"] = r.coefficients_nonnegative;
  j["canonical_support"] = r.canonical_support;
  j["restriction_pairs_checked"] = r.restriction_pairs_checked;
  j["restriction_violations"] = json::array();
  for (const auto& v : r.restriction_violations) {
    json w;
    w["subset"] = v.s;
    w["superset"] = v.t;
    w["component"] = v.component;
    w["gap"] = crnc::to_string(v.gap);
    w["witness"] = json::array();
    for (const auto& c : v.witness) w["witness"].push_back(crnc::to_string(c));
    j["restriction_violations"].push_back(std::move(w));
  }
  j["superadditivity_pairs"] = r.superadditivity_pairs;
  j["superadditivity_violations"] = json::array();
  for (const auto& [a, b] : r.superadditivity_violations) {
    json w;
    for (const auto& c : a) w["a"].push_back(crnc::to_string(c));
    for (const auto& c : b) w["b"].push_back(crnc::to_string(c));
    j["superadditivity_violations"].push_back(std::move(w));
  }
  j["valid"] = r.valid();
  return j;
}

json report_json(const crnc::CompileReport& r) {
  json j;
  j["schema"] = 1;
  j["species_counts"] = r.species_counts;
  j["reaction_counts"] = r.reaction_counts;
  j["names"] = r.names;
  return j;
}

std::string state_string(const crnc::State& s) {
  return crnc::serialize_state(s);
}

crnc::RationalVector parse_input_vector(const crnc::Crc& crc,
                                        const crnc::State& s) {
  crnc::RationalVector x;
  for (const auto& in : crc.inputs) x.push_back(s.get(in));
  return x;
}

}  // namespace

extern "C" {

void crnc_string_free(char* s) { std::free(s); }

crnc_status crnc_compile(const char* spec_json, int bimolecular, int prune,
                         int with_context, char** crn, char** report,
                         char** err) {
  return guard(err, [&]() -> crnc_status {
    crnc::FunctionSpec spec = crnc::load_spec(spec_json);
    crnc::CompileResult res;
    try {
      res = with_context ? crnc::compile_with_context(spec, prune != 0)
                         : crnc::compile_spec(spec, prune != 0);
    } catch (const crnc::ValidationFailed& e) {
      put(err, std::string(e.what()) + "\n" +
                   validation_json(e.report).dump(2));
      return CRNC_INPUT_ERROR;
    }
    if (bimolecular) res.crc = crnc::decompose_bimolecular(res.crc);
    put(crn, crnc::serialize_crc(res.crc));
    put(report, report_json(res.report).dump(2) + "\n");
    return CRNC_OK;
  });
}

crnc_status crnc_exec(const char* crn_text, const char* input_state,
                      char** value, char** err) {
  return guard(err, [&]() -> crnc_status {
    crnc::Crc crc = crnc::parse_crc(crn_text);
    if (crc.output.empty())
      throw std::invalid_argument("network declares no output species");
    crnc::State x =
        crnc::initial_state(crc, crnc::parse_state(input_state));
    crnc::ExecutionResult res = crnc::execute_topological(crc, x);
    put(value, crnc::to_string(res.final.get(crc.output)));
    return CRNC_OK;
  });
}

crnc_status crnc_check(const char* crn_text, char** report, char** err) {
  return guard(err, [&]() -> crnc_status {
    crnc::Crc crc = crnc::parse_crc(crn_text);
    json j;
    j["schema"] = 1;
    if (!crc.output.empty()) {
      crnc::ObliviousReport ob = crnc::is_output_oblivious(crc);
      j["output_oblivious"] = ob.oblivious;
      j["offending_reactions"] = ob.offenders;
    }
    auto order = crnc::is_feedforward(crc.crn);
    j["feedforward"] = order.has_value();
    if (order) j["feedforward_order"] = *order;
    std::set<std::string> seed(crc.inputs.begin(), crc.inputs.end());
    for (const auto& [sp, v] : crc.context) {
      (void)v;
      seed.insert(sp);
    }
    auto closure = crnc::species_closure(crc.crn, seed);
    j["closure"] = std::vector<std::string>(closure.begin(), closure.end());
    std::vector<std::string> siphon;
    for (const auto& sp : crc.crn.species)
      if (!closure.count(sp)) siphon.push_back(sp);
    j["unproducible_siphon"] = siphon;
    put(report, j.dump(2) + "\n");
    return CRNC_OK;
  });
}

crnc_status crnc_compose(const char* upstream, const char* downstream,
                         const char* wire, char** crn, char** err) {
  return guard(err, [&]() -> crnc_status {
    std::string w = wire ? wire : "";
    auto eq = w.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("--wire must be UP_OUT=DOWN_IN");
    crnc::WiringPlan plan;
    plan.upstream = crnc::parse_crc(upstream);
    plan.downstream = crnc::parse_crc(downstream);
    std::string up_out = w.substr(0, eq);
    plan.bound_input = w.substr(eq + 1);
    if (plan.upstream.output != up_out)
      throw std::invalid_argument("upstream output is '" +
                                  plan.upstream.output + "', not '" + up_out +
                                  "'");
    put(crn, crnc::serialize_crc(crnc::compose(plan)));
    return CRNC_OK;
  });
}

crnc_status crnc_maxout(const char* crn_text, const char* input_state,
                        char** report, char** err) {
  return guard(err, [&]() -> crnc_status {
    crnc::Crc crc = crnc::parse_crc(crn_text);
    if (crc.output.empty())
      throw std::invalid_argument("network declares no output species");
    crnc::State x =
        crnc::initial_state(crc, crnc::parse_state(input_state));
    json j;
    j["schema"] = 1;
    try {
      crnc::OutputBound b = crnc::max_output_bound(crc, x);
      j["value"] = crnc::to_string(b.value);
      j["possibly_unattained"] = b.possibly_unattained;
      j["attained"] = b.attained_witness.has_value();
      if (b.attained_witness)
        j["witness"] = crnc::dump_trace(crc.crn, *b.attained_witness);
    } catch (const crnc::UnboundedOutput&) {
      j["unbounded"] = true;
    }
    put(report, j.dump(2) + "\n");
    return CRNC_OK;
  });
}

crnc_status crnc_verify(const char* spec_json, unsigned samples,
                        unsigned long long seed, unsigned walk_steps,
                        int mass_action, char** report, char** err) {
  return guard(err, [&]() -> crnc_status {
    crnc::FunctionSpec spec = crnc::load_spec(spec_json);
    json j;
    j["schema"] = 1;
    crnc::ValidationReport vr =
        crnc::validate_spec(spec, samples ? samples : 200, seed);
    j["validation"] = validation_json(vr);
    if (!vr.valid()) {
      put(report, j.dump(2) + "\n");
      return CRNC_VERIFY_FAIL;
    }

    crnc::CompileResult compiled = crnc::compile_spec(spec);
    const crnc::Crc& crc = compiled.crc;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(1, 20), den(1, 6);
    unsigned n_inputs = samples ? samples : 20;
    unsigned checked = 0;
    for (unsigned s = 0; s < n_inputs; ++s) {
      crnc::DomainMask mask =
          spec.n == 0 ? 0 : crnc::DomainMask(s) & spec.full_mask();
      crnc::RationalVector x(spec.n, crnc::Rational(0));
      crnc::State in;
      for (size_t i = 0; i < spec.n; ++i) {
        if (mask & (crnc::DomainMask(1) << i))
          x[i] = crnc::Rational(num(rng), den(rng));
        in.set(crc.inputs[i], x[i]);
      }
      crnc::Rational oracle = crnc::eval_spec(spec, x);
      auto fail = [&](const std::string& kind, const std::string& got) {
        json c;
        c["kind"] = kind;
        c["input"] = state_string(in);
        c["expected"] = crnc::to_string(oracle);
        c["got"] = got;
        j["counterexample"] = c;
        put(report, j.dump(2) + "\n");
      };
      crnc::Rational formula = crnc::eval_min_formula(spec, x);
      if (formula != oracle) {
        fail("gated_sum_formula", crnc::to_string(formula));
        return CRNC_VERIFY_FAIL;
      }
      crnc::Rational run =
          crnc::execute_topological(crc, in).final.get(crc.output);
      if (run != oracle) {
        fail("executor", crnc::to_string(run));
        return CRNC_VERIFY_FAIL;
      }
      crnc::OutputBound bound = crnc::max_output_bound(crc, in);
      if (bound.value != oracle) {
        fail("lp_bound", crnc::to_string(bound.value));
        return CRNC_VERIFY_FAIL;
      }
      if (walk_steps > 0) {
        crnc::Trace walk =
            crnc::random_segment_walk(crc, in, walk_steps, seed + s);
        crnc::Rational after =
            crnc::execute_topological(crc, walk.final).final.get(crc.output);
        if (after != oracle) {
          fail("adversarial_walk", crnc::to_string(after));
          return CRNC_VERIFY_FAIL;
        }
      }
      if (mass_action && s < 5) {
        crnc::SimResult sim = crnc::simulate(
            crc, in, crnc::RateAssignment::uniform(crc.crn.reactions.size()),
            500.0, 1e-6);
        double want = oracle.convert_to<double>();
        if (!sim.converged ||
            std::abs(sim.final_state[crc.output] - want) > 1e-3) {
          fail("mass_action",
               std::to_string(sim.final_state[crc.output]) +
                   (sim.converged ? "" : " (not converged)"));
          return CRNC_VERIFY_FAIL;
        }
      }
      ++checked;
    }
    j["inputs_checked"] = checked;
    j["verified"] = true;
    put(report, j.dump(2) + "\n");
    return CRNC_OK;
  });
}

crnc_status crnc_simulate(const char* crn_text, const char* input_state,
                          const char* rates_csv, double t_end, double tol,
                          char** report, char** csv, char** err) {
  return guard(err, [&]() -> crnc_status {
    crnc::Crc crc = crnc::parse_crc(crn_text);
    crnc::State x =
        crnc::initial_state(crc, crnc::parse_state(input_state));
    crnc::RateAssignment rates =
        crnc::RateAssignment::uniform(crc.crn.reactions.size());
    if (rates_csv && *rates_csv) {
      rates.rates.clear();
      std::stringstream ss(rates_csv);
      std::string tok;
      while (std::getline(ss, tok, ','))
        rates.rates.push_back(std::stod(tok));
    }
    crnc::SimResult res = crnc::simulate(crc, x, rates, t_end, tol);
    json j;
    j["schema"] = 1;
    j["converged"] = res.converged;
    j["final"] = res.final_state;
    put(report, j.dump(2) + "\n");
    if (csv) {
      std::ostringstream out;
      out << "time";
      for (const auto& sp : crc.crn.species) out << "," << sp;
      out << "\n";
      for (size_t t = 0; t < res.times.size(); ++t) {
        out << res.times[t];
        for (const auto& sp : crc.crn.species)
          out << "," << res.trajectories.at(sp)[t];
        out << "\n";
      }
      put(csv, out.str());
    }
    return CRNC_OK;
  });
}

}  // extern "C"
