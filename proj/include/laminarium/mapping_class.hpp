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

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "laminarium/slope.hpp"

namespace lam {

// An integer 2x2 matrix with det +-1 acting on slopes by fractional-linear
// action on (p, q).  Twist words are kept alongside when known.
struct MappingClass {
  // Row-major [[a, b], [c, d]].
  std::array<long long, 4> m{1, 0, 0, 1};
  std::optional<std::string> word;

  long long det() const { return m[0] * m[3] - m[1] * m[2]; }

  bool operator==(const MappingClass& o) const { return m == o.m; }

  static MappingClass identity() { return MappingClass{}; }
};

MappingClass mc_from_entries(long long a, long long b, long long c,
                             long long d);
MappingClass mc_mul(const MappingClass& a, const MappingClass& b);
MappingClass mc_inverse(const MappingClass& a);
std::string mc_to_string(const MappingClass& a);
MappingClass mc_from_string(const std::string& text);

// Fractional-linear action, result canonical.
Slope apply(const MappingClass& g, const Slope& s);

// The canonical normalizing class for a slope c: conjugator(c) maps 1/0 to
// c, and its inverse is the fixed class used to normalize c to 1/0 in
// annular projections.  For c = p/q with q > 0 it is [[p, r], [q, s]] with
// p*s - q*r = -1 and 0 <= s < q; for c = 1/0 it is the identity.
MappingClass conjugator(const Slope& c);

// n-th power of the right-hand Dehn twist about c.  About 1/0 this is
// [[1, n], [0, 1]]; all other slopes by conjugation with conjugator(c).
MappingClass twist(const Slope& c, long long n);

}  // namespace lam
