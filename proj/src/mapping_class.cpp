// Copyright 2026 the laminarium authors
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

#include "laminarium/mapping_class.hpp"

#include <cstdlib>
#include <sstream>

namespace lam {

MappingClass mc_from_entries(long long a, long long b, long long c,
                             long long d) {
  MappingClass g;
  g.m = {a, b, c, d};
  long long det = g.det();
  if (det != 1 && det != -1)
    fail(ErrorCode::SemanticError, "mapping class must have det +-1");
  return g;
}

MappingClass mc_mul(const MappingClass& a, const MappingClass& b) {
  MappingClass r;
  r.m = {a.m[0] * b.m[0] + a.m[1] * b.m[2], a.m[0] * b.m[1] + a.m[1] * b.m[3],
         a.m[2] * b.m[0] + a.m[3] * b.m[2], a.m[2] * b.m[1] + a.m[3] * b.m[3]};
  return r;
}

MappingClass mc_inverse(const MappingClass& a) {
  long long det = a.det();
  MappingClass r;
  r.m = {a.m[3] * det, -a.m[1] * det, -a.m[2] * det, a.m[0] * det};
  return r;
}

std::string mc_to_string(const MappingClass& a) {
  std::ostringstream os;
  os << "[[" << a.m[0] << "," << a.m[1] << "],[" << a.m[2] << "," << a.m[3]
     << "]]";
  return os.str();
}

namespace {

// Parses "T(p/q)^n" twist words, possibly chained with '*'.
MappingClass parse_twist_word(const std::string& text) {
  MappingClass acc = MappingClass::identity();
  size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == '*') {
      ++pos;
      continue;
    }
    if (text[pos] != 'T' || pos + 1 >= text.size() || text[pos + 1] != '(')
      fail(ErrorCode::ParseError, "bad mapping class word: " + text);
    size_t close = text.find(')', pos);
    if (close == std::string::npos)
      fail(ErrorCode::ParseError, "bad mapping class word: " + text);
    Slope c = slope_from_string(text.substr(pos + 2, close - pos - 2));
    long long n = 1;
    pos = close + 1;
    if (pos < text.size() && text[pos] == '^') {
      size_t used = 0;
      n = std::stoll(text.substr(pos + 1), &used);
      pos += 1 + used;
    }
    acc = mc_mul(acc, twist(c, n));
  }
  acc.word = text;
  return acc;
}

}  // namespace

MappingClass mc_from_string(const std::string& text) {
  if (!text.empty() && text[0] == 'T') return parse_twist_word(text);
  // Matrix form [[a,b],[c,d]].
  long long v[4];
  int idx = 0;
  std::string num;
  for (char ch : text) {
    if ((ch >= '0' && ch <= '9') || ch == '-' || ch == '+') {
      num += ch;
    } else if (!num.empty()) {
      if (idx >= 4) fail(ErrorCode::ParseError, "bad matrix: " + text);
      v[idx++] = std::stoll(num);
      num.clear();
    }
  }
  if (!num.empty() && idx < 4) v[idx++] = std::stoll(num);
  if (idx != 4) fail(ErrorCode::ParseError, "bad matrix: " + text);
  return mc_from_entries(v[0], v[1], v[2], v[3]);
}

Slope apply(const MappingClass& g, const Slope& s) {
  return make_slope(g.m[0] * s.p + g.m[1] * s.q, g.m[2] * s.p + g.m[3] * s.q);
}

MappingClass conjugator(const Slope& c) {
  if (c.q == 0) return MappingClass::identity();
  // Unique 0 <= s < q with p*s = -1 (mod q); then r = (p*s + 1) / q.
  long long p = c.p, q = c.q;
  long long s = 0;
  if (q == 1) {
    s = 0;
  } else {
    // Extended Euclid for p^-1 mod q.
    long long t0 = 0, t1 = 1, r0 = q, r1 = ((p % q) + q) % q;
    while (r1 != 0) {
      long long q0 = r0 / r1;
      long long tmp = t0 - q0 * t1;
      t0 = t1;
      t1 = tmp;
      tmp = r0 - q0 * r1;
      r0 = r1;
      r1 = tmp;
    }
    long long pinv = ((t0 % q) + q) % q;
    s = ((-pinv) % q + q) % q;
  }
  long long r = (p * s + 1) / q;
  MappingClass g = mc_from_entries(p, r, q, s);
  return g;
}

MappingClass twist(const Slope& c, long long n) {
  MappingClass t;
  t.m = {1, n, 0, 1};
  MappingClass g = conjugator(c);
  MappingClass result = mc_mul(mc_mul(g, t), mc_inverse(g));
  std::ostringstream os;
  os << "T(" << slope_to_string(c) << ")^" << n;
  result.word = os.str();
  return result;
}

}  // namespace lam
