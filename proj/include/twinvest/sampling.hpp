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

#include <cstdint>
#include <random>

#include "twinvest/continuous.hpp"
#include "twinvest/model.hpp"

namespace twinvest {

/// Seeded generator of valid random instances. The draw sequence depends only
/// on the seed (no std distributions), so runs reproduce across toolchains.
class ModelSampler {
 public:
  explicit ModelSampler(std::uint64_t seed) : rng_(seed) {}

  /// A model that passes validate(); rejection-sampled.
  ModelPrimitives next_model();
  ContinuousEffortModel next_continuous();

  double uniform(double lo, double hi);
  std::size_t pick(std::size_t n);

 private:
  ParametricFamily probability_family(double floor, double v_max);
  ParametricFamily cost_family(double v_max);

  std::mt19937_64 rng_;
};

}  // namespace twinvest
