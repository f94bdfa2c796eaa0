// Copyright 2026 The qcorr Authors
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
#include <string_view>

namespace qcorr {

enum class ErrorCode {
  NonHermitianInput,
  SingularLog,
  DimensionMismatch,
  NotHermitian,
  NotPositive,
  TraceNotOne,
  UnsupportedDimension,
  BasisMismatch,
  SingularMarginal,
  ZeroChi,
  GridTooLarge,
  FormMismatch,
  SingularReference,
  NotThermalInitial,
  InvalidStateInSweep,
  InvalidConfig,
};

std::string_view to_string(ErrorCode code);

/// Library error. `measured()` carries the violating quantity where one
/// exists (hermiticity defect, minimum eigenvalue, trace deviation, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, double measured = 0.0)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        measured_(measured) {}

  ErrorCode code() const noexcept { return code_; }
  double measured() const noexcept { return measured_; }

 private:
  ErrorCode code_;
  double measured_;
};

}  // namespace qcorr
