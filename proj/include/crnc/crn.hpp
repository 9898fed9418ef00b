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

#ifndef CRNC_CRN_HPP
#define CRNC_CRN_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "crnc/rational.hpp"

namespace crnc {

// Species are identified by name: letters, digits, underscore, apostrophe,
// tilde; must not begin with a digit.
bool is_valid_species_name(const std::string& name);

struct Reaction {
  // species name -> positive stoichiometry; reactants must be non-empty.
  std::map<std::string, int> reactants;
  std::map<std::string, int> products;

  int net(const std::string& species) const;
  bool operator==(const Reaction&) const = default;
};

struct Crn {
  std::vector<std::string> species;  // first-appearance order
  std::vector<Reaction> reactions;   // listing order

  int species_index(const std::string& name) const;  // -1 if absent
  void add_species(const std::string& name);         // no-op if present
  void add_reaction(Reaction r);  // registers any new species
  bool operator==(const Crn&) const = default;
};

struct Crc {
  Crn crn;
  std::vector<std::string> inputs;
  std::string output;                  // empty if not declared
  std::map<std::string, Rational> context;  // initial context concentrations
  bool operator==(const Crc&) const = default;
};

// Concentration map; absent species means 0. All values nonnegative.
class State {
 public:
  State() = default;
  explicit State(std::map<std::string, Rational> conc);

  const Rational& get(const std::string& species) const;
  void set(const std::string& species, Rational value);  // drops exact zeros
  const std::map<std::string, Rational>& concentrations() const {
    return conc_;
  }
  std::vector<std::string> present() const;  // strictly positive species
  bool operator==(const State&) const = default;

 private:
  std::map<std::string, Rational> conc_;
};

struct ParseError : std::runtime_error {
  int line, column;
  ParseError(int line, int column, const std::string& what);
};

// Species x reactions matrix of net production counts.
std::vector<std::vector<int>> stoich_matrix(const Crn& crn);

/// Parses the `.crn` text format: `#` comments, optional `inputs:`/`output:`/
/// `context:` headers, reaction lines `2 A + B -> C` (product side `0` for
/// waste, `<->` for a reversible pair). Throws ParseError with line/column.
Crc parse_crc(const std::string& text);
inline Crn parse_crn(const std::string& text) { return parse_crc(text).crn; }

std::string serialize_crc(const Crc& crc);
inline std::string serialize_crn(const Crn& crn) {
  return serialize_crc(Crc{crn, {}, "", {}});
}

/// Parses `name = rational` per line, or a comma-separated `name=rational`
/// list. Throws ParseError.
State parse_state(const std::string& text);
std::string serialize_state(const State& s);

}  // namespace crnc

#endif  // CRNC_CRN_HPP
