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

#include <cstddef>

namespace twinvest {

/// i-th of n equally spaced points on [lo, hi]; the last point is exactly hi.
inline double grid_point(double lo, double hi, std::size_t n, std::size_t i) {
  if (n <= 1) return lo;
  if (i + 1 >= n) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

/// Number of points of step `step` covering [lo, hi], both ends included.
inline std::size_t grid_size_for_step(double lo, double hi, double step) {
  const double span = (hi - lo) / step;
  auto n = static_cast<std::size_t>(span + 0.5);
  return n + 1;
}

inline constexpr std::size_t kDefaultGridPoints = 1001;

}  // namespace twinvest
