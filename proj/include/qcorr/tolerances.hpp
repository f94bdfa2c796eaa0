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

namespace qcorr {

/// Numerical thresholds shared by every module.
struct Tolerances {
  double hermiticity = 1e-10;     // max |M - M^dagger| entrywise
  double reconstruction = 1e-10;  // eigendecomposition round trip
  double support = 1e-12;         // eigenvalues at or below are treated as 0
  double positivity = 1e-10;      // allowed negative eigenvalue slack
  double trace = 1e-10;           // |Tr rho - 1|
};

inline constexpr Tolerances kDefaultTolerances{};

}  // namespace qcorr
