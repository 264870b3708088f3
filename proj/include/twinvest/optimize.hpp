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
#include <functional>

namespace twinvest {

using ScalarFn = std::function<double(double)>;

struct ScalarMax {
  double x;
  double value;
};

/// Maximizes f on [lo, hi]: golden-section (Brent) search inside the bracket,
/// compared against both bracket ends. Ties go to the smaller x.
ScalarMax refine_max(const ScalarFn& f, double lo, double hi);

/// Global maximization on [lo, hi] for functions that need not be
/// quasiconcave: scan `points` grid points, then refine inside the
/// neighbouring cells of the best one. Ties go to the smaller x.
ScalarMax grid_refine_max(const ScalarFn& f, double lo, double hi, std::size_t points);

/// Root of g between `keep` (g >= 0) and `drop` (g < 0) by bisection, to a
/// bracket narrower than xtol with |g| < ftol at the returned end. Returns the
/// end of the final bracket on the g >= 0 side, so the result is always feasible.
double bisect_boundary(const ScalarFn& g, double keep, double drop, double xtol = 1e-9, double ftol = 1e-10);

}  // namespace twinvest
