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

#ifndef CRNC_COMPILER_HPP
#define CRNC_COMPILER_HPP

#include <map>
#include <string>
#include <vector>

#include "crnc/analysis.hpp"
#include "crnc/crn.hpp"
#include "crnc/spec.hpp"

namespace crnc {

struct ValidationFailed : std::runtime_error {
  ValidationReport report;
  explicit ValidationFailed(ValidationReport r)
      : std::runtime_error("spec failed validation"), report(std::move(r)) {}
};
struct TooManyInputs : std::runtime_error {
  TooManyInputs() : std::runtime_error("more than 8 inputs") {}
};

struct CompileReport {
  // Stage keys: copy, predicate, linear, gate, sum, min.
  std::map<std::string, size_t> species_counts;
  std::map<std::string, size_t> reaction_counts;
  // Logical role -> emitted species: "X{i}" inputs, "Y_S{mask}" per-piece
  // values, "P{mask}" predicates, "H{mask}" accumulators, "Y" output.
  std::map<std::string, std::string> names;
};

struct CompileResult {
  Crc crc;
  CompileReport report;
};

/// One reaction q X_i -> p OUT per positive coefficient p/q (lowest terms);
/// zero coefficients emit nothing. Throws std::invalid_argument on a negative
/// coefficient.
Crn compile_linear(const LinearFn& g, const std::vector<std::string>& inputs,
                   const std::string& out);

/// The single reaction in_1 + ... + in_k -> out (a rename for k = 1).
Crn compile_min(const std::vector<std::string>& inputs,
                const std::string& out);

/// The single reaction consuming one unit of each input in `k`, producing
/// `out`; out ends positive iff all inputs in k start positive. Throws
/// std::invalid_argument on an empty k.
Crn compile_predicate(DomainMask k, const std::vector<std::string>& inputs,
                      const std::string& out);

/// The catalytic transfer src + gate -> out + gate.
Crn compile_gate(const std::string& src, const std::string& gate,
                 const std::string& out);

/// The single reaction src -> out_1 + ... + out_k.
Crn compile_copy(const std::string& src,
                 const std::vector<std::string>& outs);

/// Compiles a validated spec into an output-oblivious feedforward CRC that
/// stably computes it, via the gated-sum form
///   f = min over S of [g_S + sum over K not in S of P_K * g_K].
/// With `prune`, first coarsens the subset enumeration to the provably
/// relevant inputs, then inlines pure renames and removes dead reactions.
/// Throws ValidationFailed or TooManyInputs.
CompileResult compile_spec(const FunctionSpec& spec, bool prune = false);

/// Rewrites every reaction to at most 2 reactants and 2 products using fresh
/// W{k} intermediates; preserves the computed function.
Crn decompose_bimolecular(const Crn& crn);
Crc decompose_bimolecular(const Crc& crc);

/// Compiles an affine spec (components with constant terms) by rewriting each
/// constant as a coefficient on a fresh input, compiling that linear
/// extension, and turning the extra input into an initial-context species
/// "Gamma" with concentration 1. Throws ValidationFailed if the extension
/// does not validate.
CompileResult compile_with_context(const FunctionSpec& spec,
                                   bool prune = false);

/// Replaces every context entry S = a/b != 1 by a fresh unit-concentration
/// species S' and the preamble reaction b S' -> a S.
Crc realize_unit_context(const Crc& crc);

/// Input state plus the CRC's initial context.
State initial_state(const Crc& crc, const State& inputs);

}  // namespace crnc

#endif  // CRNC_COMPILER_HPP
