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

#ifndef KANTIAN_LP_H_
#define KANTIAN_LP_H_

#include <string>
#include <vector>

namespace kantian {

enum class Relation { kLessEqual, kEqual, kGreaterEqual };
enum class Sense { kMaximize, kMinimize };

struct LpConstraint {
  std::vector<double> coefficients;
  Relation relation = Relation::kLessEqual;
  double bound = 0.0;
};

// Dense LP over non-negative variables:
//   optimize objective . x  s.t.  each constraint,  x >= 0.
struct LinearProgram {
  int variable_count = 0;
  Sense sense = Sense::kMaximize;
  std::vector<double> objective;
  std::vector<LpConstraint> constraints;

  LinearProgram() = default;
  LinearProgram(int variables, Sense direction, std::vector<double> costs)
      : variable_count(variables),
        sense(direction),
        objective(std::move(costs)) {}

  void AddConstraint(std::vector<double> coefficients, Relation relation,
                     double bound) {
    constraints.push_back({std::move(coefficients), relation, bound});
  }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

std::string ToString(LpStatus status);

struct LpOutcome {
  LpStatus status = LpStatus::kInfeasible;
  // Set only when status == kOptimal.
  std::vector<double> solution;
  double objective_value = 0.0;
};

// Two-phase dense tableau simplex with Bland's pivoting rule. An optimal
// answer is always a basic feasible solution, i.e. a vertex of the feasible
// region; among tied optimal vertices the one reached by Bland's order is
// returned (deterministic, otherwise unspecified).
//
// Throws std::invalid_argument on dimension mismatch.
LpOutcome SolveLp(const LinearProgram& lp);

// Largest violation of any constraint or of non-negativity by `x`.
double MaxConstraintViolation(const LinearProgram& lp,
                              const std::vector<double>& x);

}  // namespace kantian

#endif  // KANTIAN_LP_H_
