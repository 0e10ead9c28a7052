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
#include <variant>
#include <vector>

#include "laminarium/slope.hpp"

namespace lam {

// A weighted simple closed curve.
struct RationalLam {
  Slope curve;
  double weight = 1.0;
};

// An irrational lamination carried by a continued-fraction expansion.
// A non-empty period makes the expansion eventually periodic and the data
// exact (a quadratic irrational); an empty period is an honestly truncated
// stream with the prefix as the declared precision.
struct IrrationalLam {
  std::vector<long long> cf_prefix;
  std::vector<long long> cf_period;

  bool exact() const { return !cf_period.empty(); }

  static IrrationalLam golden_ratio() { return IrrationalLam{{1}, {1}}; }
};

// Partial quotients of the expansion, up to `count` terms.  Throws
// PrecisionExhausted on a truncated stream that runs out.
std::vector<long long> cf_terms(const IrrationalLam& lam, int count);

double irrational_value(const IrrationalLam& lam);

struct SymbolicComponent {
  std::string id;
  bool is_scc = false;
  std::string supporting_surface;
  std::optional<double> weight;

  bool operator==(const SymbolicComponent&) const = default;
};

struct SymbolicUnion {
  std::vector<SymbolicComponent> components;  // pairwise distinct ids
};

using Lamination = std::variant<RationalLam, IrrationalLam, SymbolicUnion>;

// Continued-fraction plumbing shared by the Farey and Teichmueller layers.
std::vector<long long> cf_of_fraction(long long p, long long q);
std::vector<long long> cf_of_real(double x, int max_terms);
std::vector<Slope> cf_convergents(const std::vector<long long>& cf);

}  // namespace lam
