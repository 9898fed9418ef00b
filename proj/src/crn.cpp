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

#include "crnc/crn.hpp"

#include <cctype>
#include <sstream>

namespace crnc {

bool is_valid_species_name(const std::string& name) {
  if (name.empty()) return false;
  auto ok = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
           c == '\'' || c == '~';
  };
  if (std::isdigit(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name)
    if (!ok(c)) return false;
  return true;
}

int Reaction::net(const std::string& species) const {
  int n = 0;
  if (auto it = products.find(species); it != products.end()) n += it->second;
  if (auto it = reactants.find(species); it != reactants.end())
    n -= it->second;
  return n;
}

int Crn::species_index(const std::string& name) const {
  for (size_t i = 0; i < species.size(); ++i)
    if (species[i] == name) return static_cast<int>(i);
  return -1;
}

void Crn::add_species(const std::string& name) {
  if (species_index(name) < 0) species.push_back(name);
}

void Crn::add_reaction(Reaction r) {
  for (const auto& [s, k] : r.reactants) add_species(s);
  for (const auto& [s, k] : r.products) add_species(s);
  reactions.push_back(std::move(r));
}

State::State(std::map<std::string, Rational> conc) {
  for (auto& [s, v] : conc) {
    if (v < 0) throw std::invalid_argument("negative concentration for " + s);
    if (v > 0) conc_.emplace(s, std::move(v));
  }
}

const Rational& State::get(const std::string& species) const {
  static const Rational zero(0);
  auto it = conc_.find(species);
  return it == conc_.end() ? zero : it->second;
}

void State::set(const std::string& species, Rational value) {
  if (value < 0)
    throw std::invalid_argument("negative concentration for " + species);
  if (value == 0)
    conc_.erase(species);
  else
    conc_[species] = std::move(value);
}

std::vector<std::string> State::present() const {
  std::vector<std::string> out;
  for (const auto& [s, v] : conc_) out.push_back(s);
  return out;
}

ParseError::ParseError(int line, int column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", col " +
                         std::to_string(column) + ": " + what),
      line(line),
      column(column) {}

std::vector<std::vector<int>> stoich_matrix(const Crn& crn) {
  std::vector<std::vector<int>> m(crn.species.size(),
                                  std::vector<int>(crn.reactions.size(), 0));
  for (size_t j = 0; j < crn.reactions.size(); ++j)
    for (size_t i = 0; i < crn.species.size(); ++i)
      m[i][j] = crn.reactions[j].net(crn.species[i]);
  return m;
}

namespace {

struct LineLexer {
  const std::string& text;
  int line;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  int col() const { return static_cast<int>(pos) + 1; }
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(line, col(), msg);
  }
};

// side := '0' | term ('+' term)*, term := [coeff] species
void parse_side(LineLexer& lx, std::map<std::string, int>& out,
                std::vector<std::string>& appearance, bool allow_empty) {
  lx.skip_ws();
  if (allow_empty && lx.pos < lx.text.size() && lx.text[lx.pos] == '0' &&
      (lx.pos + 1 == lx.text.size() ||
       !std::isalnum(static_cast<unsigned char>(lx.text[lx.pos + 1])))) {
    ++lx.pos;  // the explicit waste side '0'
    return;
  }
  for (;;) {
    lx.skip_ws();
    int coeff = 1;
    size_t start = lx.pos;
    while (lx.pos < lx.text.size() &&
           std::isdigit(static_cast<unsigned char>(lx.text[lx.pos])))
      ++lx.pos;
    if (lx.pos > start) {
      coeff = std::stoi(lx.text.substr(start, lx.pos - start));
      if (coeff <= 0) lx.fail("stoichiometry must be positive");
      lx.skip_ws();
    }
    start = lx.pos;
    while (lx.pos < lx.text.size() &&
           (std::isalnum(static_cast<unsigned char>(lx.text[lx.pos])) ||
            lx.text[lx.pos] == '_' || lx.text[lx.pos] == '\'' ||
            lx.text[lx.pos] == '~'))
      ++lx.pos;
    std::string name = lx.text.substr(start, lx.pos - start);
    if (name.empty() || !is_valid_species_name(name))
      lx.fail("expected species name");
    appearance.push_back(name);
    out[name] += coeff;
    lx.skip_ws();
    if (lx.pos < lx.text.size() && lx.text[lx.pos] == '+') {
      ++lx.pos;
      continue;
    }
    return;
  }
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  for (auto& t : out) {
    size_t a = t.find_first_not_of(" \t");
    size_t b = t.find_last_not_of(" \t");
    t = (a == std::string::npos) ? "" : t.substr(a, b - a + 1);
  }
  return out;
}

}  // namespace

Crc parse_crc(const std::string& text) {
  Crc crc;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    if (auto h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    size_t b = line.find_last_not_of(" \t\r");
    line = line.substr(a, b - a + 1);

    auto header = [&](const char* key) -> std::optional<std::string> {
      std::string k = std::string(key) + ":";
      if (line.rfind(k, 0) == 0) return line.substr(k.size());
      return std::nullopt;
    };
    if (auto v = header("species")) {
      for (const auto& name : split_commas(*v)) {
        if (!is_valid_species_name(name))
          throw ParseError(lineno, 1, "bad species name '" + name + "'");
        crc.crn.add_species(name);
      }
      continue;
    }
    if (auto v = header("inputs")) {
      for (const auto& name : split_commas(*v)) {
        if (!is_valid_species_name(name))
          throw ParseError(lineno, 1, "bad input species '" + name + "'");
        crc.inputs.push_back(name);
        crc.crn.add_species(name);
      }
      continue;
    }
    if (auto v = header("output")) {
      std::string name = split_commas(*v)[0];
      if (!is_valid_species_name(name))
        throw ParseError(lineno, 1, "bad output species '" + name + "'");
      crc.output = name;
      crc.crn.add_species(name);
      continue;
    }
    if (auto v = header("context")) {
      for (const auto& entry : split_commas(*v)) {
        auto eq = entry.find('=');
        if (eq == std::string::npos)
          throw ParseError(lineno, 1, "context entry needs name=value");
        std::string name = split_commas(entry.substr(0, eq))[0];
        if (!is_valid_species_name(name))
          throw ParseError(lineno, 1, "bad context species '" + name + "'");
        Rational val;
        try {
          val = parse_rational(split_commas(entry.substr(eq + 1))[0]);
        } catch (const std::invalid_argument& e) {
          throw ParseError(lineno, 1, e.what());
        }
        crc.context[name] = val;
        crc.crn.add_species(name);
      }
      continue;
    }

    bool reversible = false;
    size_t arrow = line.find("<->");
    if (arrow != std::string::npos) {
      reversible = true;
    } else {
      arrow = line.find("->");
      if (arrow == std::string::npos)
        throw ParseError(lineno, 1, "expected '->' in reaction line");
    }
    std::string lhs = line.substr(0, arrow);
    std::string rhs = line.substr(arrow + (reversible ? 3 : 2));

    Reaction r;
    std::vector<std::string> appearance;
    LineLexer llex{lhs, lineno};
    parse_side(llex, r.reactants, appearance, /*allow_empty=*/false);
    if (!llex.done()) llex.fail("trailing input after reactants");
    LineLexer rlex{rhs, lineno};
    parse_side(rlex, r.products, appearance, /*allow_empty=*/true);
    if (!rlex.done()) rlex.fail("trailing input after products");
    if (r.reactants.empty())
      throw ParseError(lineno, 1, "reactions with empty reactants are not allowed");
    for (const auto& name : appearance) crc.crn.add_species(name);
    crc.crn.add_reaction(r);
    if (reversible) {
      if (r.products.empty())
        throw ParseError(lineno, 1, "reverse direction has empty reactants");
      crc.crn.add_reaction(Reaction{r.products, r.reactants});
    }
  }

  // Header sanity: output not an input; context disjoint from inputs/output.
  for (const auto& x : crc.inputs) {
    if (x == crc.output)
      throw ParseError(0, 0, "output species listed among inputs");
    if (crc.context.count(x))
      throw ParseError(0, 0, "context species '" + x + "' is an input");
  }
  if (!crc.output.empty() && crc.context.count(crc.output))
    throw ParseError(0, 0, "context species is the output");
  return crc;
}

namespace {

void write_side(std::ostringstream& out, const std::map<std::string, int>& side,
                const std::vector<std::string>& order) {
  bool first = true;
  for (const auto& s : order) {
    auto it = side.find(s);
    if (it == side.end()) continue;
    if (!first) out << " + ";
    if (it->second != 1) out << it->second << " ";
    out << s;
    first = false;
  }
  if (first) out << "0";
}

}  // namespace

std::string serialize_crc(const Crc& crc) {
  std::ostringstream out;
  if (!crc.crn.species.empty()) {
    out << "species: ";
    for (size_t i = 0; i < crc.crn.species.size(); ++i)
      out << (i ? ", " : "") << crc.crn.species[i];
    out << "\n";
  }
  if (!crc.inputs.empty()) {
    out << "inputs: ";
    for (size_t i = 0; i < crc.inputs.size(); ++i)
      out << (i ? ", " : "") << crc.inputs[i];
    out << "\n";
  }
  if (!crc.output.empty()) out << "output: " << crc.output << "\n";
  if (!crc.context.empty()) {
    out << "context: ";
    bool first = true;
    for (const auto& [s, v] : crc.context) {
      if (!first) out << ", ";
      out << s << "=" << to_string(v);
      first = false;
    }
    out << "\n";
  }
  for (const auto& r : crc.crn.reactions) {
    write_side(out, r.reactants, crc.crn.species);
    out << " -> ";
    write_side(out, r.products, crc.crn.species);
    out << "\n";
  }
  return out.str();
}

State parse_state(const std::string& text) {
  std::map<std::string, Rational> conc;
  std::string normalized = text;
  for (char& c : normalized)
    if (c == ',') c = '\n';
  std::istringstream in(normalized);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError(lineno, 1, "expected 'species = value'");
    auto trim = [](std::string s) {
      size_t a = s.find_first_not_of(" \t\r");
      if (a == std::string::npos) return std::string();
      size_t b = s.find_last_not_of(" \t\r");
      return s.substr(a, b - a + 1);
    };
    std::string name = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (!is_valid_species_name(name))
      throw ParseError(lineno, 1, "bad species name '" + name + "'");
    Rational q;
    try {
      q = parse_rational(val);
    } catch (const std::invalid_argument& e) {
      throw ParseError(lineno, static_cast<int>(eq) + 2, e.what());
    }
    if (q < 0) throw ParseError(lineno, 1, "negative concentration");
    conc[name] = q;
  }
  return State(std::move(conc));
}

std::string serialize_state(const State& s) {
  std::ostringstream out;
  for (const auto& [name, v] : s.concentrations())
    out << name << " = " << to_string(v) << "\n";
  return out.str();
}

}  // namespace crnc
