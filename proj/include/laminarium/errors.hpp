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

#include <stdexcept>
#include <string>

namespace lam {

enum class ErrorCode {
  Internal = 1,
  ParseError,
  SemanticError,
  SymbolicSurface,
  BoundExceeded,
  PrecisionExhausted,
  InsufficientData,
  DegenerateInput,
  NonFinite,
  UnknownVertex,
  MalformedTubeUnion,
  NoPenetratingUnion,
  NonAffineExponents,
  NumericalInstability,
  CertificationFailed,
  OptimizationFailed,
  IrrationalLamination,
  InsufficientSamples,
  EstimationFailed,
  DegenerateTrace,
  SingularSystem,
  ParabolicOrElliptic,
  DegenerateConfiguration,
  HypothesisUnverifiable,
  HypothesisViolation,
  NoConvergenceCandidate,
  IOError,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace lam
