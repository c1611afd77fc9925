// Copyright 2026 The Authors.
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

#ifndef APPROXSUB_ERRORS_HPP
#define APPROXSUB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace approxsub {

enum class ErrorCode {
  InvalidTable,
  InvalidSubset,
  InvalidGrouping,
  NotModular,
  GroundMismatch,
  InvalidParams,
  NotNonnegative,
  NotSubmodular,
  NotNormalized,
  NotCertified,
  InvalidPoint,
  InvalidPerm,
  TooLarge,
  LpError,
  SandwichViolation,
  BoundViolation,
  NotApplicable,
  NotACover,
  NotInGamma,
  Infeasible,
  IoError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace approxsub

#endif  // APPROXSUB_ERRORS_HPP
