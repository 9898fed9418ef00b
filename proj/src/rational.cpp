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

#include "crnc/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace crnc {

Rational parse_rational(std::string_view text) {
  auto bad = [&] {
    return std::invalid_argument("malformed rational: '" + std::string(text) +
                                 "'");
  };
  if (text.empty()) throw bad();
  std::string s(text);
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' ||
              (c == '-' && (i == 0 || s[i - 1] == '/'));
    if (!ok) throw bad();
  }
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    if (slash == 0 || slash + 1 == s.size() ||
        s.find('/', slash + 1) != std::string::npos) {
      throw bad();
    }
    if (s.substr(slash + 1).find_first_not_of("0") == std::string::npos)
      throw std::invalid_argument("zero denominator in '" + s + "'");
  }
  try {
    // The string constructor does not reduce to lowest terms; rebuilding from
    // the parts does.
    Rational r(s);
    return Rational(numerator(r), denominator(r));
  } catch (const std::exception&) {
    throw bad();
  }
}

std::string to_string(const Rational& q) {
  return q.str();
}

std::vector<RationalVector> left_null_space(
    const std::vector<std::vector<int>>& m) {
  const size_t rows = m.size();
  const size_t cols = rows ? m[0].size() : 0;
  // Row-reduce the transpose: solutions of M^T v = 0 are left null vectors.
  std::vector<RationalVector> a(cols, RationalVector(rows));
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) a[j][i] = m[i][j];

  std::vector<size_t> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < rows && r < cols; ++c) {
    size_t p = r;
    while (p < cols && a[p][c] == 0) ++p;
    if (p == cols) continue;
    std::swap(a[p], a[r]);
    Rational inv = a[r][c];
    for (size_t j = 0; j < rows; ++j) a[r][j] /= inv;
    for (size_t i = 0; i < cols; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (size_t j = 0; j < rows; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(rows, false);
  for (size_t c : pivot_col) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (size_t free = 0; free < rows; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(rows, Rational(0));
    v[free] = 1;
    for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -a[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace crnc
