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

#include "doctest.h"
#include "twinvest/errors.hpp"
#include "twinvest/fixtures.hpp"
#include "twinvest/model.hpp"
#include "twinvest/sampling.hpp"

using namespace twinvest;

TEST_CASE("fixtures validate") {
  for (const auto& m : {fixtures::f1(), fixtures::f2(), fixtures::f3(), fixtures::f4()}) {
    const auto r = validate(m);
    CHECK_MESSAGE(r.ok, r.condition << ": " << r.detail);
  }
}

TEST_CASE("evaluate reports values and derivatives") {
  const auto p = evaluate(fixtures::f1(), 0.5);
  CHECK(p.pi0 == doctest::Approx(0.35));
  CHECK(p.pi1 == doctest::Approx(0.75));
  CHECK(p.cost == doctest::Approx(0.15));
  CHECK(p.delta_pi() == doctest::Approx(0.4));
  CHECK(p.d_delta_pi() == doctest::Approx(-0.2));
  CHECK(p.separability() == doctest::Approx(0.75 / 0.35));
}

TEST_CASE("evaluate rejects v outside the investment range") {
  CHECK_THROWS_AS(evaluate(fixtures::f1(), -0.1), DomainError);
  CHECK_THROWS_AS(evaluate(fixtures::f1(), 1.1), DomainError);
  CHECK_NOTHROW(evaluate(fixtures::f1(), 1.0 + 1e-14));
}

TEST_CASE("validation names the first violated invariant") {
  SUBCASE("baseline inducement fails when quality matters little") {
    auto m = fixtures::f1();
    m.s_high = 0.5;
    const auto r = validate(m);
    CHECK_FALSE(r.ok);
    CHECK(r.condition == "baseline_inducement");
    CHECK(r.v == 0.0);
  }
  SUBCASE("pi1 must dominate pi0") {
    auto m = fixtures::f1();
    m.pi1 = ParametricFamily::affine(0.3, 0.1);
    const auto r = validate(m);
    CHECK(r.condition == "strict_ordering");
    REQUIRE(r.v.has_value());
    CHECK(*r.v == doctest::Approx(0.5).epsilon(0.01));
  }
  SUBCASE("cost must not increase with training") {
    auto m = fixtures::f1();
    m.cost = ParametricFamily::affine(0.2, 0.1);
    CHECK(validate(m).condition == "cost_nonincreasing");
  }
  SUBCASE("probabilities stay inside the open unit interval") {
    auto m = fixtures::f1();
    m.pi0 = ParametricFamily::constant(0.0);
    CHECK(validate(m).condition == "probability_bounds");
    m = fixtures::f1();
    m.pi1 = ParametricFamily::affine(0.7, 0.4);
    CHECK(validate(m).condition == "probability_bounds");
  }
  SUBCASE("quality ordering and positive range") {
    auto m = fixtures::f1();
    m.s_low = 3.0;
    CHECK(validate(m).condition == "quality_ordering");
    m = fixtures::f1();
    m.v_max = 0.0;
    CHECK(validate(m).condition == "v_max_positive");
  }
}

TEST_CASE("flat pi1 regions are noted but accepted") {
  const auto r = validate(fixtures::f3());
  CHECK(r.ok);
  CHECK_FALSE(r.notes.empty());
}

TEST_CASE("sampled models always validate") {
  ModelSampler sampler(42);
  for (int i = 0; i < 100; ++i) CHECK(validate(sampler.next_model()).ok);
}

TEST_CASE("sampling is reproducible from the seed") {
  ModelSampler a(3), b(3);
  for (int i = 0; i < 10; ++i) CHECK(a.next_model() == b.next_model());
}
