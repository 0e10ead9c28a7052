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

#include "laminarium/lamination.hpp"

#include <cmath>

namespace lam {

std::vector<long long> cf_terms(const IrrationalLam& lam, int count) {
  std::vector<long long> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    if (i < (int)lam.cf_prefix.size()) {
      out.push_back(lam.cf_prefix[i]);
    } else if (!lam.cf_period.empty()) {
      size_t k = (i - lam.cf_prefix.size()) % lam.cf_period.size();
      out.push_back(lam.cf_period[k]);
    } else {
      fail(ErrorCode::PrecisionExhausted,
           "continued-fraction stream has only " +
               std::to_string(lam.cf_prefix.size()) + " terms, " +
               std::to_string(count) + " requested");
    }
  }
  return out;
}

double irrational_value(const IrrationalLam& lam) {
  int depth = (int)lam.cf_prefix.size();
  if (!lam.cf_period.empty()) depth += 40;
  std::vector<long long> terms;
  try {
    terms = cf_terms(lam, depth);
  } catch (const Error&) {
    terms = lam.cf_prefix;
  }
  double x = 0.0;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    if (x != 0.0) x = 1.0 / x;
    x += (double)*it;
  }
  return x;
}

std::vector<long long> cf_of_fraction(long long p, long long q) {
  if (q <= 0) fail(ErrorCode::SemanticError, "cf_of_fraction needs q > 0");
  std::vector<long long> cf;
  while (q != 0) {
    long long a = p >= 0 ? p / q : -((-p + q - 1) / q);  // floor division
    cf.push_back(a);
    long long r = p - a * q;
    p = q;
    q = r;
  }
  return cf;
}

std::vector<long long> cf_of_real(double x, int max_terms) {
  std::vector<long long> cf;
  for (int i = 0; i < max_terms; ++i) {
    double fl = std::floor(x);
    cf.push_back((long long)fl);
    double frac = x - fl;
    if (frac < 1e-12) break;
    x = 1.0 / frac;
    if (x > 1e12) break;
  }
  return cf;
}

std::vector<Slope> cf_convergents(const std::vector<long long>& cf) {
  std::vector<Slope> out;
  long long hp = 1, hq = 0;   // h_{-1} = 1/0
  long long hpp = 0, hqq = 1; // h_{-2} = 0/1
  for (long long a : cf) {
    long long np = a * hp + hpp;
    long long nq = a * hq + hqq;
    hpp = hp;
    hqq = hq;
    hp = np;
    hq = nq;
    out.push_back(make_slope(hp, hq));
  }
  return out;
}

}  // namespace lam
