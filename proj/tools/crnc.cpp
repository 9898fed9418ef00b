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

// Command-line front end; links only the public C API.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "crnc.h"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spill(const std::string& path, const char* text) {
  if (path.empty() || !text) return;
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  out << text;
}

// Reads `arg` as inline text unless it names a readable file.
std::string state_arg(const std::string& arg) {
  std::ifstream in(arg);
  if (!in) return arg;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Out {
  char* s = nullptr;
  ~Out() { crnc_string_free(s); }
};

int finish(crnc_status st, const Out& err) {
  if (err.s && *err.s) std::cerr << "error: " << err.s << "\n";
  return st;
}

unsigned long long default_seed() {
  const char* env = std::getenv("CRNC_SEED");
  return env ? std::strtoull(env, nullptr, 10) : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"compiler and verifier for rate-independent CRN computation"};
  app.require_subcommand(1);

  std::string spec_file, out_file = "-", report_file, crn_file, crn_file2;
  std::string input, wire, rates, csv_file;
  bool bimolecular = false, prune = false, with_context = false,
       mass_action = false;
  unsigned samples = 20, walk_steps = 0;
  unsigned long long seed = default_seed();
  double t_end = 100.0, tol = 1e-6;

  auto* compile = app.add_subcommand("compile", "spec JSON -> .crn network");
  compile->add_option("--spec", spec_file, "function spec (JSON)")
      ->required();
  compile->add_option("-o,--output", out_file, ".crn output path or -");
  compile->add_flag("--bimolecular", bimolecular,
                    "limit reactions to 2 reactants / 2 products");
  compile->add_flag("--prune", prune,
                    "coarsen to relevant inputs, inline renames, drop dead "
                    "reactions");
  compile->add_flag("--with-context", with_context,
                    "compile constants via an initial-context species");
  compile->add_option("--report", report_file, "compile report (JSON)");

  auto* compose = app.add_subcommand("compose", "concatenate two networks");
  compose->add_option("upstream", crn_file, "upstream .crn")->required();
  compose->add_option("downstream", crn_file2, "downstream .crn")->required();
  compose->add_option("--wire", wire, "UP_OUT=DOWN_IN binding")->required();
  compose->add_option("-o,--output", out_file, ".crn output path or -");

  auto* check = app.add_subcommand("check", "static analysis of a network");
  check->add_option("network", crn_file, ".crn file")->required();

  auto* exec = app.add_subcommand("exec", "run the deterministic executor");
  exec->add_option("network", crn_file, ".crn file")->required();
  exec->add_option("--input", input, "input state, e.g. \"X1=2,X2=3\"")
      ->required();

  auto* verify = app.add_subcommand(
      "verify", "validate a spec and check its compilation against oracles");
  verify->add_option("--spec", spec_file, "function spec (JSON)")->required();
  verify->add_option("--samples", samples, "sampled inputs / pairs");
  verify->add_option("--seed", seed, "RNG seed (default $CRNC_SEED or 0)");
  verify->add_option("--adversarial", walk_steps,
                     "random-walk steps before completion (0 = off)");
  verify->add_flag("--mass-action", mass_action, "ODE cross-check");

  auto* maxout = app.add_subcommand(
      "maxout", "exact reachable supremum of the output");
  maxout->add_option("network", crn_file, ".crn file")->required();
  maxout->add_option("--input", input, "input state")->required();

  auto* simulate = app.add_subcommand("simulate", "mass-action ODE run");
  simulate->add_option("network", crn_file, ".crn file")->required();
  simulate->add_option("--input", input, "input state")->required();
  simulate->add_option("--rates", rates, "comma list of rate constants");
  simulate->add_option("--t-end", t_end, "integration horizon");
  simulate->add_option("--tol", tol, "derivative norm for convergence");
  simulate->add_option("--csv", csv_file, "trajectory CSV output path");

  CLI11_PARSE(app, argc, argv);

  try {
    Out err;
    if (compile->parsed()) {
      Out crn, report;
      crnc_status st =
          crnc_compile(slurp(spec_file).c_str(), bimolecular, prune,
                       with_context, &crn.s, &report.s, &err.s);
      if (st == CRNC_OK) {
        spill(out_file, crn.s);
        spill(report_file, report.s);
      }
      return finish(st, err);
    }
    if (compose->parsed()) {
      Out crn;
      crnc_status st =
          crnc_compose(slurp(crn_file).c_str(), slurp(crn_file2).c_str(),
                       wire.c_str(), &crn.s, &err.s);
      if (st == CRNC_OK) spill(out_file, crn.s);
      return finish(st, err);
    }
    if (check->parsed()) {
      Out report;
      crnc_status st =
          crnc_check(slurp(crn_file).c_str(), &report.s, &err.s);
      if (st == CRNC_OK) std::cout << report.s;
      return finish(st, err);
    }
    if (exec->parsed()) {
      Out value;
      crnc_status st = crnc_exec(slurp(crn_file).c_str(),
                                 state_arg(input).c_str(), &value.s, &err.s);
      if (st == CRNC_OK) std::cout << "Y = " << value.s << "\n";
      return finish(st, err);
    }
    if (verify->parsed()) {
      Out report;
      crnc_status st =
          crnc_verify(slurp(spec_file).c_str(), samples, seed, walk_steps,
                      mass_action, &report.s, &err.s);
      if (report.s) std::cout << report.s;
      return finish(st, err);
    }
    if (maxout->parsed()) {
      Out report;
      crnc_status st = crnc_maxout(slurp(crn_file).c_str(),
                                   state_arg(input).c_str(), &report.s,
                                   &err.s);
      if (st == CRNC_OK) std::cout << report.s;
      return finish(st, err);
    }
    if (simulate->parsed()) {
      Out report, csv;
      crnc_status st = crnc_simulate(
          slurp(crn_file).c_str(), state_arg(input).c_str(), rates.c_str(),
          t_end, tol, &report.s, csv_file.empty() ? nullptr : &csv.s, &err.s);
      if (st == CRNC_OK) {
        std::cout << report.s;
        spill(csv_file, csv.s);
      }
      return finish(st, err);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return CRNC_INPUT_ERROR;
  }
  return CRNC_INPUT_ERROR;
}
