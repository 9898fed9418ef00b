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

#ifndef CRNC_SEMANTICS_HPP
#define CRNC_SEMANTICS_HPP

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "crnc/crn.hpp"

namespace crnc {

// Per-reaction nonnegative flux for one straight-line segment, indexed like
// the reaction list.
using FluxVector = RationalVector;

struct Trace {
  struct Segment {
    State start;
    FluxVector flux;
  };
  std::vector<Segment> segments;
  State final;
};

struct InapplicableReaction : std::runtime_error {
  size_t reaction;
  std::string missing_reactant;
  InapplicableReaction(size_t reaction, const std::string& missing);
};
struct NegativeConcentration : std::runtime_error {
  std::string species;
  explicit NegativeConcentration(const std::string& species);
};
struct UnboundedOutput : std::runtime_error {
  UnboundedOutput() : std::runtime_error("output species unbounded over Post") {}
};
struct NotFeedforward : std::runtime_error {
  NotFeedforward() : std::runtime_error("CRN is not feedforward") {}
};
struct NonTerminating : std::runtime_error {
  NonTerminating() : std::runtime_error("executor exceeded pass bound") {}
};

/// Straight-line step: returns s + M u. Every reaction with positive flux must
/// be applicable at s and the result must be nonnegative.
State apply_flux(const Crn& crn, const State& s, const FluxVector& u);

/// Indices of reactions whose reactants are all strictly positive in s.
std::set<size_t> applicable_reactions(const Crn& crn, const State& s);

/// Least fixpoint of "add products of reactions whose reactants are all in
/// the set", starting from `present`.
std::set<std::string> species_closure(const Crn& crn,
                                      const std::set<std::string>& present);

struct StabilityResult {
  bool stable;
  // True when the verdict is exact (output never consumed, so Y is monotone).
  // Otherwise a `false` verdict is still definitive but `true` is only the
  // closure approximation.
  bool exact;
};

/// Output-stability via the producible-species closure: stable iff no
/// reaction with nonzero net effect on the output can ever become enabled.
StabilityResult is_output_stable(const Crc& crc, const State& s);

struct OutputBound {
  Rational value;
  std::optional<Trace> attained_witness;
  bool possibly_unattained = false;
};

/// Exact supremum of the output species over Post(x), via an LP over fluxes
/// of closure-enabled reactions. Throws UnboundedOutput when the supremum is
/// infinite. When the supremum is attained, a witness trace (verified by
/// replay) is included; otherwise possibly_unattained is set.
OutputBound max_output_bound(const Crc& crc, const State& x);

/// A species order witnessing the feedforward property (every reaction that
/// net-produces a species also net-consumes an earlier one), if one exists.
std::optional<std::vector<std::string>> is_feedforward(const Crn& crn);

struct ExecutionResult {
  State final;
  Trace trace;
};

/// Deterministic fair executor for feedforward CRNs where every reaction
/// net-consumes at least one species: fires each reaction to completion in
/// dependency order, repeating passes until quiescent. The final state is
/// output stable.
ExecutionResult execute_topological(const Crc& crc, const State& x);

/// Adversarial exploration: `steps` random straight-line segments with
/// random subsets of applicable reactions and random rational fluxes scaled
/// to keep all concentrations nonnegative. Deterministic for a fixed seed.
Trace random_segment_walk(const Crc& crc, const State& x, size_t steps,
                          uint64_t seed);

/// Re-checks every segment of the trace (applicability and nonnegativity)
/// and that the recorded final state matches. Throws on violation.
void replay_trace(const Crn& crn, const Trace& trace, const State& start);

/// Sum of per-segment fluxes.
FluxVector total_flux(const Crn& crn, const Trace& trace);

/// One line per segment: `seg i: flux r_j=p/q ...; state S=p/q ...`.
std::string dump_trace(const Crn& crn, const Trace& trace);

}  // namespace crnc

#endif  // CRNC_SEMANTICS_HPP
