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

#include "twinvest/optimize.hpp"

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <limits>

#include "twinvest/grid.hpp"

namespace twinvest {

namespace {

void take_if_better(ScalarMax& best, double x, double value) {
  if (value > best.value || (value == best.value && x < best.x)) best = {x, value};
}

}  // namespace

ScalarMax refine_max(const ScalarFn& f, double lo, double hi) {
  ScalarMax best{lo, f(lo)};
  if (hi <= lo) return best;
  take_if_better(best, hi, f(hi));
  constexpr int bits = std::numeric_limits<double>::digits / 2;
  std::uintmax_t iterations = 200;
  const auto [x, neg] =
      boost::math::tools::brent_find_minima([&](double t) { return -f(t); }, lo, hi, bits, iterations);
  take_if_better(best, x, -neg);
  return best;
}

ScalarMax grid_refine_max(const ScalarFn& f, double lo, double hi, std::size_t points) {
  if (points < 3) points = 3;
  std::size_t best_i = 0;
  double best_value = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < points; ++i) {
    const double value = f(grid_point(lo, hi, points, i));
    if (value > best_value) {
      best_value = value;
      best_i = i;
    }
  }
  const double a = grid_point(lo, hi, points, best_i == 0 ? 0 : best_i - 1);
  const double b = grid_point(lo, hi, points, std::min(best_i + 1, points - 1));
  ScalarMax best{grid_point(lo, hi, points, best_i), best_value};
  const auto refined = refine_max(f, a, b);
  take_if_better(best, refined.x, refined.value);
  return best;
}

double bisect_boundary(const ScalarFn& g, double keep, double drop, double xtol, double ftol) {
  // Stop once the bracket is narrow and the feasible end is close to the root;
  // the second test is dropped when the bracket cannot shrink any further.
  const auto feasible_end = [&](double a, double b) { return g(a) >= 0.0 ? a : b; };
  const auto done = [&](double a, double b) {
    const double width = std::abs(b - a);
    if (width <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(a))) return true;
    return width < xtol && std::abs(g(feasible_end(a, b))) < ftol;
  };
  const double lo = std::min(keep, drop);
  const double hi = std::max(keep, drop);
  std::uintmax_t iterations = 400;
  const auto bracket = boost::math::tools::bisect(g, lo, hi, done, iterations);
  if (bracket.first == bracket.second) return bracket.first;
  return feasible_end(bracket.first, bracket.second);
}

}  // namespace twinvest
