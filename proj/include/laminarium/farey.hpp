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

#include <optional>
#include <string>
#include <vector>

#include "laminarium/lamination.hpp"
#include "laminarium/mapping_class.hpp"
#include "laminarium/slope.hpp"

namespace lam {

// A vertex path in the Farey graph.
struct GeodesicPath {
  std::vector<Slope> vertices;
  std::string support = "S";
};

// Exact distance in the Farey graph (edges where |p q' - q p'| = 1).
// Computed by normalizing one endpoint to 1/0 and running the min-plus
// recursion over the continued-fraction expansion of the other.
long long farey_distance(const Slope& u, const Slope& v);

// Independent test oracle: breadth-first search over canonical slopes with
// |p|, |q| below a growth cap derived from `bound`.  Exact on its domain;
// throws BoundExceeded when the capped frontier is exhausted first.
long long farey_distance_bfs(const Slope& u, const Slope& v, long long bound);

// Cap used by farey_distance_bfs; exposed so sweeps can reuse it.
long long farey_bfs_cap(long long bound);

// The canonical geodesic from u to v: the lexicographically least vertex
// sequence (under the canonical slope order) among all geodesics.
GeodesicPath farey_geodesic(const Slope& u, const Slope& v);

// Checks the tight-sequence law d(v_i, v_j) = |j - i| for all pairs.
bool is_tight_geodesic(const GeodesicPath& path);

// The convergent sequence from u toward the target: u followed by the
// continued-fraction convergents of the target seen from u.  Rational
// targets yield a finite path ending at the target; irrational targets a
// stream truncated to max_terms entries.
std::vector<Slope> pivot_sequence(const Slope& u, const Lamination& target,
                                  int max_terms = 64);

// Twist class of u about `core` (empty when disjoint): core is normalized
// to 1/0 by the fixed class conjugator(core)^-1 and the integer part of the
// image slope is taken.  Equivariant: projecting twist(core, n) * u shifts
// the class by exactly n.
std::optional<long long> annular_projection(const Slope& core, const Slope& u);

// Distance in the annulus complex between twist classes.
inline long long annulus_distance(long long a, long long b) {
  return a == b ? 0 : 1 + std::abs(a - b);
}

// Detects convergence of a family of geodesics sharing their first vertex
// to a point of the boundary at infinity.  Returns the limiting irrational
// lamination when ever-longer prefixes stabilize, empty when the family is
// finite or the prefixes disagree; throws InsufficientData when the stable
// prefix is shorter than min_stable_depth.
std::optional<Lamination> converges_at_infinity(
    const std::vector<GeodesicPath>& paths, int stability_window = 10,
    int min_stable_depth = 10);

}  // namespace lam
