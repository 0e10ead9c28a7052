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

#include <random>

#include "doctest.h"
#include "laminarium/farey.hpp"

using namespace lam;

namespace {

Slope random_slope(std::mt19937& rng, long long bound) {
  std::uniform_int_distribution<long long> dp(-bound, bound);
  std::uniform_int_distribution<long long> dq(0, bound);
  for (;;) {
    long long p = dp(rng), q = dq(rng);
    if (p == 0 && q == 0) continue;
    return make_slope(p, q);
  }
}

}  // namespace

TEST_CASE("farey distance basics") {
  CHECK(farey_distance(make_slope(1, 0), make_slope(0, 1)) == 1);
  CHECK(farey_distance(make_slope(1, 0), make_slope(1, 2)) == 2);
  CHECK(farey_distance(make_slope(1, 0), make_slope(1, 0)) == 0);
  CHECK(farey_distance(make_slope(0, 1), make_slope(8, 13)) ==
        farey_distance_bfs(make_slope(0, 1), make_slope(8, 13), 30));
}

TEST_CASE("bfs oracle examples") {
  CHECK(farey_distance_bfs(make_slope(1, 0), make_slope(0, 1), 30) == 1);
  CHECK(farey_distance_bfs(make_slope(1, 0), make_slope(5, 8), 30) ==
        farey_distance(make_slope(1, 0), make_slope(5, 8)));
  CHECK_THROWS_AS(farey_distance_bfs(make_slope(1, 0), make_slope(1, 2), 0),
                  Error);
}

TEST_CASE("distance agrees with bfs on random pairs") {
  std::mt19937 rng(2026);
  for (int it = 0; it < 300; ++it) {
    Slope u = random_slope(rng, 14), v = random_slope(rng, 14);
    CAPTURE(slope_to_string(u));
    CAPTURE(slope_to_string(v));
    CHECK(farey_distance(u, v) == farey_distance_bfs(u, v, 14));
  }
}

TEST_CASE("distance symmetry and triangle inequality") {
  std::mt19937 rng(5);
  for (int it = 0; it < 500; ++it) {
    Slope a = random_slope(rng, 40), b = random_slope(rng, 40),
          c = random_slope(rng, 40);
    long long ab = farey_distance(a, b);
    CHECK(ab == farey_distance(b, a));
    CHECK(ab <= farey_distance(a, c) + farey_distance(c, b));
    CHECK((ab == 0) == (a == b));
  }
}

TEST_CASE("canonical geodesics") {
  GeodesicPath g1 = farey_geodesic(make_slope(1, 0), make_slope(0, 1));
  REQUIRE(g1.vertices.size() == 2);
  CHECK(g1.vertices[0] == make_slope(1, 0));
  CHECK(g1.vertices[1] == make_slope(0, 1));

  GeodesicPath g2 = farey_geodesic(make_slope(1, 0), make_slope(1, 2));
  REQUIRE(g2.vertices.size() == 3);
  CHECK(g2.vertices[1] == make_slope(0, 1));  // 0/1 beats 1/1 in the order

  GeodesicPath g3 = farey_geodesic(make_slope(0, 1), make_slope(8, 13));
  CHECK((long long)g3.vertices.size() ==
        farey_distance(make_slope(0, 1), make_slope(8, 13)) + 1);
  CHECK(is_tight_geodesic(g3));
}

TEST_CASE("geodesics satisfy the tight law on random pairs") {
  std::mt19937 rng(17);
  for (int it = 0; it < 100; ++it) {
    Slope u = random_slope(rng, 25), v = random_slope(rng, 25);
    if (u == v) continue;
    GeodesicPath g = farey_geodesic(u, v);
    CHECK(g.vertices.front() == u);
    CHECK(g.vertices.back() == v);
    CHECK((long long)g.vertices.size() == farey_distance(u, v) + 1);
    CHECK(is_tight_geodesic(g));
    for (size_t i = 0; i + 1 < g.vertices.size(); ++i)
      CHECK(farey_adjacent(g.vertices[i], g.vertices[i + 1]));
  }
}

TEST_CASE("pivot sequences") {
  auto seq = pivot_sequence(make_slope(1, 0),
                            Lamination{RationalLam{make_slope(0, 1)}});
  REQUIRE(seq.size() == 2);
  CHECK(seq[0] == make_slope(1, 0));
  CHECK(seq[1] == make_slope(0, 1));

  auto conv = pivot_sequence(make_slope(1, 0),
                             Lamination{RationalLam{make_slope(5, 8)}});
  std::vector<Slope> expect = {make_slope(1, 0), make_slope(0, 1),
                               make_slope(1, 1), make_slope(1, 2),
                               make_slope(2, 3), make_slope(5, 8)};
  CHECK(conv == expect);

  auto gold = pivot_sequence(make_slope(1, 0),
                             Lamination{IrrationalLam::golden_ratio()}, 6);
  std::vector<Slope> gexpect = {make_slope(1, 0), make_slope(1, 1),
                                make_slope(2, 1), make_slope(3, 2),
                                make_slope(5, 3), make_slope(8, 5),
                                make_slope(13, 8)};
  CHECK(gold == gexpect);
  for (size_t i = 0; i + 1 < gold.size(); ++i)
    CHECK(farey_adjacent(gold[i], gold[i + 1]));
}

TEST_CASE("pivot sequence on a truncated stream runs out") {
  IrrationalLam lam;
  lam.cf_prefix = {1, 2, 3};
  CHECK_THROWS_AS(pivot_sequence(make_slope(1, 0), Lamination{lam}, 10), Error);
  CHECK(pivot_sequence(make_slope(1, 0), Lamination{lam}, 3).size() == 4);
}

TEST_CASE("annular projection values") {
  CHECK(annular_projection(make_slope(1, 0), make_slope(7, 2)) == 3);
  CHECK(!annular_projection(make_slope(1, 0), make_slope(1, 0)).has_value());
  CHECK(annular_projection(make_slope(1, 0), make_slope(-1, 3)) == -1);
}

TEST_CASE("annular projection equivariance") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<long long> nw(-50, 50);
  for (int it = 0; it < 300; ++it) {
    Slope core = random_slope(rng, 10);
    Slope u = random_slope(rng, 10);
    if (intersection_number(core, u) == 0) continue;
    long long n = nw(rng);
    auto base = annular_projection(core, u);
    auto moved = annular_projection(core, apply(twist(core, n), u));
    REQUIRE(base.has_value());
    REQUIRE(moved.has_value());
    CHECK(*moved == *base + n);
  }
}

TEST_CASE("annulus metric") {
  CHECK(annulus_distance(4, 4) == 0);
  CHECK(annulus_distance(0, 1) == 2);
  CHECK(annulus_distance(-3, 5) == 9);
}

TEST_CASE("convergence at infinity") {
  // Growing prefixes of the golden ray converge to the golden lamination.
  std::vector<GeodesicPath> paths;
  for (int len = 3; len <= 26; ++len) {
    GeodesicPath p;
    p.vertices = pivot_sequence(make_slope(1, 0),
                                Lamination{IrrationalLam::golden_ratio()}, len);
    paths.push_back(p);
  }
  auto lim = converges_at_infinity(paths);
  REQUIRE(lim.has_value());
  const auto* irr = std::get_if<IrrationalLam>(&*lim);
  REQUIRE(irr != nullptr);
  double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  CHECK(std::abs(irrational_value(*irr) - phi) < 1e-3);

  // A constant family has no limit at infinity.
  std::vector<GeodesicPath> constant(12, paths[2]);
  CHECK(!converges_at_infinity(constant).has_value());

  // Eventually disagreeing second vertex: no common extension.
  std::vector<GeodesicPath> split = paths;
  for (size_t i = 0; i < split.size(); ++i) {
    if (i % 2 == 0) continue;
    split[i].vertices = pivot_sequence(
        make_slope(1, 0), Lamination{IrrationalLam{{2}, {1, 2}}},
        (int)split[i].vertices.size() - 1);
  }
  CHECK(!converges_at_infinity(split).has_value());

  // Too few stable steps.
  std::vector<GeodesicPath> shallow;
  for (int len = 3; len <= 8; ++len) {
    GeodesicPath p;
    p.vertices = pivot_sequence(make_slope(1, 0),
                                Lamination{IrrationalLam::golden_ratio()}, len);
    shallow.push_back(p);
  }
  CHECK_THROWS_AS(converges_at_infinity(shallow), Error);
}

TEST_CASE("continued fraction helpers") {
  CHECK(cf_of_fraction(5, 8) == std::vector<long long>{0, 1, 1, 1, 2});
  CHECK(cf_of_fraction(-4, 5) == std::vector<long long>{-1, 5});
  auto conv = cf_convergents({0, 1, 1, 1, 2});
  CHECK(conv.back() == make_slope(5, 8));
  IrrationalLam gold = IrrationalLam::golden_ratio();
  CHECK(std::abs(irrational_value(gold) - (1 + std::sqrt(5.0)) / 2) < 1e-9);
}
