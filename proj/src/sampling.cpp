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

#include "twinvest/sampling.hpp"

#include <cmath>

namespace twinvest {

double ModelSampler::uniform(double lo, double hi) {
  const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

std::size_t ModelSampler::pick(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

ParametricFamily ModelSampler::probability_family(double floor, double v_max) {
  const double a = uniform(floor, std::min(floor + 0.45, 0.9));
  const double rise = uniform(0.0, 0.45);
  switch (pick(10)) {
    case 0:
    case 1:
      return ParametricFamily::constant(a);
    case 2:
    case 3:
    case 4: {
      const double gamma = uniform(1.0, 3.0);
      return ParametricFamily::power(a, rise / std::pow(v_max, gamma), gamma);
    }
    default:
      return ParametricFamily::affine(a, rise / v_max);
  }
}

ParametricFamily ModelSampler::cost_family(double v_max) {
  const double a = uniform(0.02, 0.5);
  const double drop = uniform(0.0, 0.9);
  switch (pick(4)) {
    case 0:
      return ParametricFamily::affine(a, -a * drop / v_max);
    case 1:
      return ParametricFamily::exponential_decay(a, uniform(0.0, 3.0) / v_max);
    case 2: {
      const double gamma = uniform(1.0, 3.0);
      return ParametricFamily::power(a, -a * drop / std::pow(v_max, gamma), gamma);
    }
    default:
      return ParametricFamily::constant(a);
  }
}

ModelPrimitives ModelSampler::next_model() {
  for (;;) {
    const double v_max = pick(2) == 0 ? 1.0 : uniform(0.5, 2.0);
    auto pi0 = probability_family(0.02, v_max);
    auto pi1 = probability_family(pi0.value(0.0) + 0.02, v_max);
    auto cost = cost_family(v_max);
    const double s_low = uniform(0.0, 0.5);
    const double s_high = s_low + uniform(0.15, 3.0);
    ModelPrimitives m{std::move(pi0), std::move(pi1), std::move(cost), v_max, s_high, s_low};
    if (validate(m)) return m;
  }
}

ContinuousEffortModel ModelSampler::next_continuous() {
  for (;;) {
    const double e_min = uniform(0.01, 0.2);
    const double e_max = e_min + uniform(0.2, 1.3);
    const double a = uniform(0.0, 0.3);
    const double gamma = uniform(0.3, 1.0);
    const double b = (1.0 - a) / std::pow(e_max, gamma) * uniform(0.3, 1.0);
    const double s_low = uniform(0.0, 0.3);
    ContinuousEffortModel m{ParametricFamily::power(a, b, gamma), uniform(0.05, 1.0), e_min, e_max,
                            s_low + uniform(0.1, 3.0), s_low};
    if (validate(m)) return m;
  }
}

}  // namespace twinvest
