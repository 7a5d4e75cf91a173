// Copyright 2026 The Kantian Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cmath>

#include "doctest.h"
#include "kantian/lp.h"
#include "oracles.h"

namespace kantian {
namespace {

TEST_CASE("max-min LP on a two-profile game") {
  // Variables x1, x2, z+, z-.
  LinearProgram lp(4, Sense::kMaximize, {0, 0, 1, -1});
  lp.AddConstraint({6, 3, -1, 1}, Relation::kGreaterEqual, 0);
  lp.AddConstraint({1, 2, -1, 1}, Relation::kGreaterEqual, 0);
  lp.AddConstraint({1, 1, 0, 0}, Relation::kEqual, 1);
  const LpOutcome out = SolveLp(lp);
  REQUIRE(out.status == LpStatus::kOptimal);
  CHECK(out.objective_value == doctest::Approx(2.0));
  CHECK(out.solution[0] == doctest::Approx(0.0));
  CHECK(out.solution[1] == doctest::Approx(1.0));
}

TEST_CASE("single equality") {
  LinearProgram lp(2, Sense::kMaximize, {1, 0});
  lp.AddConstraint({1, 1}, Relation::kEqual, 1);
  const LpOutcome out = SolveLp(lp);
  REQUIRE(out.status == LpStatus::kOptimal);
  CHECK(out.objective_value == doctest::Approx(1.0));
  CHECK(out.solution == std::vector<double>{1.0, 0.0});
}

TEST_CASE("infeasible and unbounded") {
  LinearProgram infeasible(2, Sense::kMaximize, {1, 0});
  infeasible.AddConstraint({1, 0}, Relation::kGreaterEqual, 2);
  infeasible.AddConstraint({1, 1}, Relation::kEqual, 1);
  CHECK(SolveLp(infeasible).status == LpStatus::kInfeasible);

  LinearProgram unbounded(2, Sense::kMaximize, {1, 1});
  unbounded.AddConstraint({1, -1}, Relation::kLessEqual, 1);
  CHECK(SolveLp(unbounded).status == LpStatus::kUnbounded);

  LinearProgram no_rows(1, Sense::kMinimize, {1});
  const LpOutcome out = SolveLp(no_rows);
  REQUIRE(out.status == LpStatus::kOptimal);
  CHECK(out.objective_value == 0.0);
}

TEST_CASE("negative right-hand sides and minimization") {
  // min x + 2y  s.t.  -x - y <= -3,  x <= 2.
  LinearProgram lp(2, Sense::kMinimize, {1, 2});
  lp.AddConstraint({-1, -1}, Relation::kLessEqual, -3);
  lp.AddConstraint({1, 0}, Relation::kLessEqual, 2);
  const LpOutcome out = SolveLp(lp);
  REQUIRE(out.status == LpStatus::kOptimal);
  CHECK(out.objective_value == doctest::Approx(4.0));
  CHECK(out.solution[0] == doctest::Approx(2.0));
  CHECK(out.solution[1] == doctest::Approx(1.0));
}

TEST_CASE("redundant equalities") {
  LinearProgram lp(3, Sense::kMaximize, {1, 2, 3});
  lp.AddConstraint({1, 1, 1}, Relation::kEqual, 1);
  lp.AddConstraint({2, 2, 2}, Relation::kEqual, 2);
  lp.AddConstraint({0, 0, 1}, Relation::kLessEqual, 0.5);
  const LpOutcome out = SolveLp(lp);
  REQUIRE(out.status == LpStatus::kOptimal);
  CHECK(out.objective_value == doctest::Approx(2.5));
}

TEST_CASE("dimension mismatch") {
  LinearProgram lp(2, Sense::kMaximize, {1, 0});
  lp.AddConstraint({1}, Relation::kEqual, 1);
  CHECK_THROWS_AS(SolveLp(lp), std::invalid_argument);
  LinearProgram bad_objective(2, Sense::kMaximize, {1});
  CHECK_THROWS_AS(SolveLp(bad_objective), std::invalid_argument);
}

TEST_CASE("status names") {
  CHECK(ToString(LpStatus::kOptimal) == "optimal");
  CHECK(ToString(LpStatus::kInfeasible) == "infeasible");
  CHECK(ToString(LpStatus::kUnbounded) == "unbounded");
}

TEST_CASE("property: simplex agrees with vertex enumeration") {
  testing::TestRng rng(2024);
  int feasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int vars = rng.Int(1, 6);
    const int cons = rng.Int(1, 6);
    const LinearProgram lp = testing::RandomBoundedLp(rng, vars, cons);
    const LpOutcome out = SolveLp(lp);
    const testing::VertexOracleResult oracle =
        testing::VertexEnumerationOptimum(lp);
    CHECK(out.status != LpStatus::kUnbounded);
    CHECK((out.status == LpStatus::kOptimal) == oracle.feasible);
    if (out.status != LpStatus::kOptimal || !oracle.feasible) continue;
    ++feasible;
    CHECK(out.objective_value == doctest::Approx(oracle.best).epsilon(1e-6));
    CHECK(MaxConstraintViolation(lp, out.solution) <= 1e-9);
    for (double x : out.solution) CHECK(x >= -1e-12);
    // A basic solution has at most one positive variable per row.
    int positive = 0;
    for (double x : out.solution) positive += x > 1e-9;
    CHECK(positive <= static_cast<int>(lp.constraints.size()));
  }
  CHECK(feasible > 100);
}

}  // namespace
}  // namespace kantian
