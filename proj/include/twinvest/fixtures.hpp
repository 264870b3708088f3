// Copyright 2026 The twinvest Authors. All Rights Reserved.
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
// ==============================================================================

#pragma once

#include "twinvest/continuous.hpp"
#include "twinvest/model.hpp"

/// Canonical instances, one per analytic regime. The JSON files under
/// fixtures/ carry the same values.
namespace twinvest::fixtures {

/// Full investment, no displacement risk.
inline ModelPrimitives f1() {
  return {ParametricFamily::affine(0.2, 0.3), ParametricFamily::affine(0.7, 0.1),
          ParametricFamily::affine(0.2, -0.1), 1.0, 2.0, 0.0};
}

/// f1 with low quality importance: the displacement threshold is interior.
inline ModelPrimitives f2() {
  auto m = f1();
  m.s_high = 0.85;
  return m;
}

/// Interior optimum.
inline ModelPrimitives f3() {
  return {ParametricFamily::affine(0.2, 0.3), ParametricFamily::constant(0.8),
          ParametricFamily::exponential_decay(0.2, 1.8), 1.0, 2.0, 0.0};
}

/// Outcome separability increasing: no investment.
inline ModelPrimitives f4() {
  return {ParametricFamily::constant(0.2), ParametricFamily::affine(0.7, 0.2),
          ParametricFamily::affine(0.2, -0.1), 1.0, 2.0, 0.0};
}

/// Continuous effort with p(e) = sqrt(e), c(e) = 0.25 e.
inline ContinuousEffortModel f5() {
  return {ParametricFamily::power(0.0, 1.0, 0.5), 0.25, 0.04, 1.0, 2.0, 0.0};
}

}  // namespace twinvest::fixtures
