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

#include "laminarium/slope.hpp"

#include <cctype>
#include <cstdlib>

namespace lam {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::Internal: return "Internal";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SemanticError: return "SemanticError";
    case ErrorCode::SymbolicSurface: return "SymbolicSurface";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::MalformedTubeUnion: return "MalformedTubeUnion";
    case ErrorCode::NoPenetratingUnion: return "NoPenetratingUnion";
    case ErrorCode::NonAffineExponents: return "NonAffineExponents";
    case ErrorCode::NumericalInstability: return "NumericalInstability";
    case ErrorCode::CertificationFailed: return "CertificationFailed";
    case ErrorCode::OptimizationFailed: return "OptimizationFailed";
    case ErrorCode::IrrationalLamination: return "IrrationalLamination";
    case ErrorCode::InsufficientSamples: return "InsufficientSamples";
    case ErrorCode::EstimationFailed: return "EstimationFailed";
    case ErrorCode::DegenerateTrace: return "DegenerateTrace";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::ParabolicOrElliptic: return "ParabolicOrElliptic";
    case ErrorCode::DegenerateConfiguration: return "DegenerateConfiguration";
    case ErrorCode::HypothesisUnverifiable: return "HypothesisUnverifiable";
    case ErrorCode::HypothesisViolation: return "HypothesisViolation";
    case ErrorCode::NoConvergenceCandidate: return "NoConvergenceCandidate";
    case ErrorCode::IOError: return "IOError";
  }
  return "Unknown";
}

std::string slope_to_string(const Slope& s) {
  return std::to_string(s.p) + "/" + std::to_string(s.q);
}

Slope slope_from_string(const std::string& text) {
  size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      // Bare integers are accepted as n/1.
      size_t used = 0;
      long long p = std::stoll(text, &used);
      if (used != text.size()) fail(ErrorCode::ParseError, "bad slope: " + text);
      return make_slope(p, 1);
    }
    size_t used = 0;
    long long p = std::stoll(text.substr(0, slash), &used);
    if (used != slash) fail(ErrorCode::ParseError, "bad slope: " + text);
    long long q = std::stoll(text.substr(slash + 1), &used);
    if (used != text.size() - slash - 1)
      fail(ErrorCode::ParseError, "bad slope: " + text);
    if (p == 0 && q == 0) fail(ErrorCode::ParseError, "bad slope: " + text);
    return make_slope(p, q);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(ErrorCode::ParseError, "bad slope: " + text);
  }
}

}  // namespace lam
