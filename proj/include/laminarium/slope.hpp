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

#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <string>

#include "laminarium/errors.hpp"

namespace lam {

// Surface signature.  Numeric machinery is shipped only for the two
// complexity-4 surfaces; everything else is carried symbolically.
struct SurfaceSig {
  int genus = 1;
  int punctures = 1;

  enum class Kind { Numeric_S11, Numeric_S04, Symbolic };

  int xi() const { return 3 * genus + punctures; }

  Kind kind() const {
    if (genus == 1 && punctures == 1) return Kind::Numeric_S11;
    if (genus == 0 && punctures == 4) return Kind::Numeric_S04;
    return Kind::Symbolic;
  }

  bool numeric() const { return kind() != Kind::Symbolic; }

  static SurfaceSig s11() { return SurfaceSig{1, 1}; }
  static SurfaceSig s04() { return SurfaceSig{0, 4}; }

  bool operator==(const SurfaceSig&) const = default;
};

// An essential simple closed curve as a reduced fraction p/q.  Canonical
// form: gcd(|p|, q) = 1, q >= 0, and q = 0 forces p = 1 (the slope "1/0").
struct Slope {
  long long p = 1;
  long long q = 0;

  bool operator==(const Slope&) const = default;

  bool is_infinity() const { return q == 0; }

  // Total order by extended rational value; 1/0 compares greatest.
  // Used wherever a deterministic canonical choice is needed.
  friend bool operator<(const Slope& a, const Slope& b) {
    if (a == b) return false;
    if (a.is_infinity()) return false;
    if (b.is_infinity()) return true;
    return a.p * b.q < b.p * a.q;
  }
};

inline Slope make_slope(long long p, long long q) {
  if (p == 0 && q == 0) fail(ErrorCode::SemanticError, "slope 0/0");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  long long g = std::gcd(p < 0 ? -p : p, q);
  if (g > 1) {
    p /= g;
    q /= g;
  }
  if (q == 0) p = 1;
  if (p == 0) q = 1;
  return Slope{p, q};
}

std::string slope_to_string(const Slope& s);
Slope slope_from_string(const std::string& text);

// Geometric intersection number of two slopes on a numeric surface:
// |p_a q_b - q_a p_b|, doubled on the four-punctured sphere.
inline long long intersection_number(const Slope& a, const Slope& b,
                                     const SurfaceSig& sig = SurfaceSig::s11()) {
  switch (sig.kind()) {
    case SurfaceSig::Kind::Numeric_S11:
      return std::abs(a.p * b.q - a.q * b.p);
    case SurfaceSig::Kind::Numeric_S04:
      return 2 * std::abs(a.p * b.q - a.q * b.p);
    case SurfaceSig::Kind::Symbolic:
    default:
      fail(ErrorCode::SymbolicSurface,
           "intersection numbers are undefined on symbolic surfaces");
  }
}

// Farey adjacency: |det| = 1 regardless of the doubling convention.
inline bool farey_adjacent(const Slope& a, const Slope& b) {
  return std::abs(a.p * b.q - a.q * b.p) == 1;
}

struct SlopeHash {
  size_t operator()(const Slope& s) const {
    return std::hash<long long>()(s.p * 0x9e3779b97f4a7c15LL) ^
           std::hash<long long>()(s.q);
  }
};

}  // namespace lam
