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

#ifndef CRNC_COMPOSITION_HPP
#define CRNC_COMPOSITION_HPP

#include <string>
#include <vector>

#include "crnc/crn.hpp"

namespace crnc {

struct ObliviousReport {
  bool oblivious = true;
  std::vector<size_t> offenders;  // reactions consuming the output
};

/// True iff the output species never appears as a reactant; a false verdict
/// carries the offending reaction indices.
ObliviousReport is_output_oblivious(const Crc& crc);

struct WiringPlan {
  Crc upstream;
  Crc downstream;
  std::string bound_input;  // downstream input fed by the upstream output
  std::string rename_suffix = "~2";
};

/// Concatenates the two CRCs: downstream species get the suffix, the bound
/// input becomes the upstream output, inputs/reactions/contexts merge, the
/// composed output is the renamed downstream output. Throws
/// std::invalid_argument on a bad binding and std::runtime_error on a name
/// collision after renaming.
Crc compose(const WiringPlan& plan);

struct FanoutResult {
  Crc crc;
  std::vector<std::string> outputs;  // one per downstream consumer
};

/// Adds Y -> Y_f1 + ... + Y_fk so k downstream CRCs can each consume a copy.
/// Requires an output-oblivious CRC (throws std::invalid_argument otherwise).
FanoutResult fanout(const Crc& crc, size_t k);

struct PruneOutcome {
  Crc crc;
  size_t removed = 0;
};

/// Removes every reaction that consumes the output species. Preserves the
/// computed function only under the composability hypothesis; the count of
/// removed reactions is reported so callers can tell when the hypothesis was
/// doing work.
PruneOutcome prune_output_consumers(const Crc& crc);

}  // namespace crnc

#endif  // CRNC_COMPOSITION_HPP
