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

#include "laminarium/farey.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace lam {

namespace {

// Distance from 1/0 to p/q via the min-plus recursion over the continued
// fraction: with convergents h_k, D(h_k) = min(D(h_{k-2}) + a_k,
// D(h_{k-1}) + 1), seeded by D(1/0) = 0 and D(integer) = 1.
long long distance_to_infinity(const Slope& w) {
  if (w.q == 0) return 0;
  if (w.q == 1) return 1;
  std::vector<long long> cf = cf_of_fraction(w.p, w.q);
  long long dm2 = 0;  // D(h_{-1}) = D(1/0)
  long long dm1 = 1;  // D(h_0), an integer
  for (size_t k = 1; k < cf.size(); ++k) {
    long long dk = std::min(dm2 + cf[k], dm1 + 1);
    dm2 = dm1;
    dm1 = dk;
  }
  return dm1;
}

}  // namespace

long long farey_distance(const Slope& u, const Slope& v) {
  if (u == v) return 0;
  MappingClass g = mc_inverse(conjugator(u));
  return distance_to_infinity(apply(g, v));
}

long long farey_bfs_cap(long long bound) { return 2 * bound + 4; }

long long farey_distance_bfs(const Slope& u, const Slope& v,
                             long long bound) {
  long long cap = farey_bfs_cap(bound);
  auto in_cap = [cap](const Slope& s) {
    return std::abs(s.p) <= cap && s.q <= cap;
  };
  auto in_bound = [bound](const Slope& s) {
    return std::abs(s.p) <= bound && s.q <= bound;
  };
  if (!in_bound(u) || !in_bound(v))
    fail(ErrorCode::BoundExceeded, "endpoint outside the search bound");
  if (u == v) return 0;

  std::unordered_map<Slope, long long, SlopeHash> dist;
  std::deque<Slope> queue;
  dist[u] = 0;
  queue.push_back(u);
  while (!queue.empty()) {
    Slope cur = queue.front();
    queue.pop_front();
    long long d = dist[cur];
    // Neighbors are +-(r0 + t p, s0 + t q); enumerate the part of both
    // families lying inside the cap.
    MappingClass g = conjugator(cur);
    // Columns of g: (p, q) and (r, s) with p*s - q*r = -1.
    long long p = g.m[0], r = g.m[1], q = g.m[2], s = g.m[3];
    auto visit = [&](long long np, long long nq) {
      if (np == 0 && nq == 0) return;
      Slope n = make_slope(np, nq);
      if (!in_cap(n)) return;
      if (dist.count(n)) return;
      dist[n] = d + 1;
      if (n == v) return;
      queue.push_back(n);
    };
    // t range so |r + t p| <= cap and |s + t q| <= cap.
    long long tmin = -3 * cap, tmax = 3 * cap;
    if (p != 0) {
      long long lo = (-cap - r) / p, hi = (cap - r) / p;
      if (lo > hi) std::swap(lo, hi);
      tmin = std::max(tmin, lo - 2);
      tmax = std::min(tmax, hi + 2);
    }
    if (q != 0) {
      long long lo = (-cap - s) / q, hi = (cap - s) / q;
      if (lo > hi) std::swap(lo, hi);
      tmin = std::max(tmin, lo - 2);
      tmax = std::min(tmax, hi + 2);
    }
    for (long long t = tmin; t <= tmax; ++t) visit(r + t * p, s + t * q);
    if (dist.count(v)) return dist[v];
  }
  fail(ErrorCode::BoundExceeded,
       "frontier exhausted the cap before reaching " + slope_to_string(v));
}

bool is_tight_geodesic(const GeodesicPath& path) {
  const auto& vs = path.vertices;
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j)
      if (farey_distance(vs[i], vs[j]) != (long long)(j - i)) return false;
  return true;
}

namespace {

// Candidate next vertices on some geodesic from cur to v, i.e. neighbors w
// of cur with d(w, v) = remaining - 1, enumerated inside a coefficient cap.
std::vector<Slope> geodesic_steps(const Slope& cur, const Slope& v,
                                  long long remaining, long long cap) {
  std::vector<Slope> out;
  MappingClass g = conjugator(cur);
  long long p = g.m[0], r = g.m[1], q = g.m[2], s = g.m[3];
  long long tmin = -3 * cap, tmax = 3 * cap;
  if (p != 0) {
    long long lo = (-cap - r) / p, hi = (cap - r) / p;
    if (lo > hi) std::swap(lo, hi);
    tmin = std::max(tmin, lo - 2);
    tmax = std::min(tmax, hi + 2);
  }
  if (q != 0) {
    long long lo = (-cap - s) / q, hi = (cap - s) / q;
    if (lo > hi) std::swap(lo, hi);
    tmin = std::max(tmin, lo - 2);
    tmax = std::min(tmax, hi + 2);
  }
  for (long long t = tmin; t <= tmax; ++t) {
    long long np = r + t * p, nq = s + t * q;
    if (np == 0 && nq == 0) continue;
    if (std::abs(np) > cap || std::abs(nq) > cap) continue;
    Slope n = make_slope(np, nq);
    if (farey_distance(n, v) == remaining - 1) out.push_back(n);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

GeodesicPath farey_geodesic(const Slope& u, const Slope& v) {
  GeodesicPath path;
  path.vertices.push_back(u);
  if (u == v) return path;
  long long d = farey_distance(u, v);
  long long maxcoef = std::max({std::abs(u.p), u.q, std::abs(v.p), v.q});
  long long cap = 8 * maxcoef + 64;
  for (int attempt = 0; attempt < 3; ++attempt) {
    path.vertices.resize(1);
    Slope cur = u;
    long long remaining = d;
    bool ok = true;
    while (remaining > 0) {
      std::vector<Slope> steps = geodesic_steps(cur, v, remaining, cap);
      if (steps.empty()) {
        ok = false;
        break;
      }
      cur = steps.front();
      path.vertices.push_back(cur);
      --remaining;
    }
    if (ok && path.vertices.back() == v) return path;
    cap *= 4;
  }
  fail(ErrorCode::Internal, "geodesic search cap exhausted");
}

std::vector<Slope> pivot_sequence(const Slope& u, const Lamination& target,
                                  int max_terms) {
  MappingClass g = conjugator(u);
  MappingClass ginv = mc_inverse(g);
  std::vector<long long> cf;
  if (const auto* rat = std::get_if<RationalLam>(&target)) {
    Slope w = apply(ginv, rat->curve);
    if (w.q == 0)
      fail(ErrorCode::SemanticError, "pivot_sequence target equals the start");
    cf = cf_of_fraction(w.p, w.q);
  } else if (const auto* irr = std::get_if<IrrationalLam>(&target)) {
    // The expansion is re-seated at u; for u = 1/0 this is the target's own
    // expansion.
    if (u.q == 0) {
      cf = cf_terms(*irr, max_terms);
    } else {
      // Express the target's value in the normalized chart, then expand.
      double x = irrational_value(*irr);
      double num = ginv.m[0] * x + ginv.m[1];
      double den = ginv.m[2] * x + ginv.m[3];
      cf = cf_of_real(num / den, max_terms);
    }
  } else {
    fail(ErrorCode::SemanticError,
         "pivot_sequence needs a rational or irrational target");
  }
  if ((int)cf.size() > max_terms) cf.resize(max_terms);
  std::vector<Slope> out;
  out.push_back(u);
  for (const Slope& c : cf_convergents(cf)) out.push_back(apply(g, c));
  return out;
}

std::optional<long long> annular_projection(const Slope& core,
                                            const Slope& u) {
  if (intersection_number(core, u, SurfaceSig::s11()) == 0) return std::nullopt;
  Slope w = apply(mc_inverse(conjugator(core)), u);
  // Floor of the extended rational w.p / w.q; w.q != 0 since u crosses core.
  long long p = w.p, q = w.q;
  return p >= 0 ? p / q : -((-p + q - 1) / q);
}

std::optional<Lamination> converges_at_infinity(
    const std::vector<GeodesicPath>& paths, int stability_window,
    int min_stable_depth) {
  if (paths.size() < 2)
    fail(ErrorCode::InsufficientData, "need at least two geodesics");
  for (const auto& p : paths)
    if (p.vertices.empty() || !(p.vertices.front() == paths[0].vertices.front()))
      fail(ErrorCode::SemanticError, "geodesics must share their first vertex");

  size_t w = std::min<size_t>(stability_window, paths.size());
  auto tail_begin = paths.end() - w;

  // No growth in the tail window means no limit at infinity.
  size_t min_len = SIZE_MAX, max_len = 0;
  for (auto it = tail_begin; it != paths.end(); ++it) {
    min_len = std::min(min_len, it->vertices.size());
    max_len = std::max(max_len, it->vertices.size());
  }
  bool growing = paths.back().vertices.size() > tail_begin->vertices.size();

  // Depth up to which all tail geodesics agree (on indices they all have).
  size_t agree = 0;
  for (size_t k = 0; k < min_len; ++k) {
    bool same = true;
    for (auto it = tail_begin; it != paths.end(); ++it)
      if (!(it->vertices[k] == tail_begin->vertices[k])) same = false;
    if (!same) break;
    agree = k + 1;
  }
  if (agree < min_len) return std::nullopt;  // genuine disagreement
  if (!growing) return std::nullopt;         // finite family, no ray

  if ((long long)agree - 1 < min_stable_depth)
    fail(ErrorCode::InsufficientData,
         "stable prefix of " + std::to_string(agree) +
             " vertices is below the stability depth");

  // Stable ray prefix: expand the deepest stable vertex in the chart of the
  // shared first vertex and drop the last two partial quotients, which are
  // not yet pinned by the data.
  const Slope& start = paths[0].vertices.front();
  Slope deep = tail_begin->vertices[agree - 1];
  Slope wslope = apply(mc_inverse(conjugator(start)), deep);
  if (wslope.q == 0) return std::nullopt;
  std::vector<long long> cf = cf_of_fraction(wslope.p, wslope.q);
  if (cf.size() <= 2) return std::nullopt;
  cf.resize(cf.size() - 2);
  IrrationalLam lim;
  lim.cf_prefix = cf;
  return Lamination{lim};
}

}  // namespace lam
