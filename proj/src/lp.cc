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

#include "kantian/lp.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kantian {
namespace {

constexpr double kPivotEps = 1e-9;
constexpr double kRatioTieEps = 1e-12;
constexpr double kFeasibilityEps = 1e-9;
constexpr int kMaxIterations = 100000;

enum class ColumnKind { kOriginal, kSlack, kArtificial };

// Dense tableau in the form  B^-1 A | B^-1 b.
class Tableau {
 public:
  Tableau(int rows, int cols)
      : rows_(rows), cols_(cols), data_(rows * (cols + 1), 0.0),
        basis_(rows, -1) {}

  double& At(int r, int c) { return data_[r * (cols_ + 1) + c]; }
  double At(int r, int c) const { return data_[r * (cols_ + 1) + c]; }
  double& Rhs(int r) { return At(r, cols_); }
  double Rhs(int r) const { return At(r, cols_); }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::vector<int>& basis() { return basis_; }
  const std::vector<int>& basis() const { return basis_; }

  void Pivot(int row, int col) {
    const double pivot = At(row, col);
    for (int c = 0; c <= cols_; ++c) At(row, c) /= pivot;
    for (int r = 0; r < rows_; ++r) {
      if (r == row) continue;
      const double factor = At(r, col);
      if (factor == 0.0) continue;
      for (int c = 0; c <= cols_; ++c) At(r, c) -= factor * At(row, c);
      At(r, col) = 0.0;
    }
    basis_[row] = col;
  }

  // Maximizes cost . x over the current basis with Bland's rule. Columns with
  // allowed[c] == false never enter. Returns false if unbounded.
  bool Maximize(const std::vector<double>& cost,
                const std::vector<bool>& allowed) {
    for (int iter = 0; iter < kMaxIterations; ++iter) {
      int entering = -1;
      for (int c = 0; c < cols_ && entering < 0; ++c) {
        if (!allowed[c]) continue;
        double reduced = cost[c];
        for (int r = 0; r < rows_; ++r) reduced -= cost[basis_[r]] * At(r, c);
        if (reduced > kPivotEps) entering = c;
      }
      if (entering < 0) return true;

      // Minimum ratio test; ties go to the smallest basic variable index.
      int leaving = -1;
      double best_ratio = 0.0;
      for (int r = 0; r < rows_; ++r) {
        const double a = At(r, entering);
        if (a <= kPivotEps) continue;
        const double ratio = std::max(Rhs(r), 0.0) / a;
        const double tie = kRatioTieEps * (1.0 + best_ratio);
        if (leaving < 0 || ratio < best_ratio - tie) {
          leaving = r;
          best_ratio = ratio;
        } else if (ratio <= best_ratio + tie && basis_[r] < basis_[leaving]) {
          leaving = r;
          best_ratio = std::min(best_ratio, ratio);
        }
      }
      if (leaving < 0) return false;
      Pivot(leaving, entering);
    }
    throw std::runtime_error("simplex iteration limit exceeded");
  }

 private:
  int rows_;
  int cols_;
  std::vector<double> data_;
  std::vector<int> basis_;
};

}  // namespace

std::string ToString(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

double MaxConstraintViolation(const LinearProgram& lp,
                              const std::vector<double>& x) {
  double worst = 0.0;
  for (double v : x) worst = std::max(worst, -v);
  for (const LpConstraint& c : lp.constraints) {
    double lhs = 0.0;
    for (int j = 0; j < lp.variable_count; ++j) lhs += c.coefficients[j] * x[j];
    switch (c.relation) {
      case Relation::kLessEqual:
        worst = std::max(worst, lhs - c.bound);
        break;
      case Relation::kGreaterEqual:
        worst = std::max(worst, c.bound - lhs);
        break;
      case Relation::kEqual:
        worst = std::max(worst, std::abs(lhs - c.bound));
        break;
    }
  }
  return worst;
}

LpOutcome SolveLp(const LinearProgram& lp) {
  const int n = lp.variable_count;
  if (n <= 0 || static_cast<int>(lp.objective.size()) != n) {
    throw std::invalid_argument("objective length must equal variable count");
  }
  for (const LpConstraint& c : lp.constraints) {
    if (static_cast<int>(c.coefficients.size()) != n) {
      throw std::invalid_argument(
          "constraint length must equal variable count");
    }
  }

  // Normalize to non-negative right-hand sides.
  std::vector<LpConstraint> rows = lp.constraints;
  for (LpConstraint& c : rows) {
    if (c.bound < 0.0) {
      for (double& a : c.coefficients) a = -a;
      c.bound = -c.bound;
      if (c.relation == Relation::kLessEqual) {
        c.relation = Relation::kGreaterEqual;
      } else if (c.relation == Relation::kGreaterEqual) {
        c.relation = Relation::kLessEqual;
      }
    }
  }

  const int m = static_cast<int>(rows.size());
  int slack_count = 0;
  int artificial_count = 0;
  for (const LpConstraint& c : rows) {
    if (c.relation != Relation::kEqual) ++slack_count;
    if (c.relation != Relation::kLessEqual) ++artificial_count;
  }
  const int cols = n + slack_count + artificial_count;
  std::vector<ColumnKind> kind(cols, ColumnKind::kOriginal);

  Tableau t(m, cols);
  double rhs_scale = 1.0;
  int next_slack = n;
  int next_artificial = n + slack_count;
  for (int r = 0; r < m; ++r) {
    const LpConstraint& c = rows[r];
    for (int j = 0; j < n; ++j) t.At(r, j) = c.coefficients[j];
    t.Rhs(r) = c.bound;
    rhs_scale = std::max(rhs_scale, std::abs(c.bound));
    if (c.relation == Relation::kLessEqual) {
      kind[next_slack] = ColumnKind::kSlack;
      t.At(r, next_slack) = 1.0;
      t.basis()[r] = next_slack++;
    } else {
      if (c.relation == Relation::kGreaterEqual) {
        kind[next_slack] = ColumnKind::kSlack;
        t.At(r, next_slack++) = -1.0;
      }
      kind[next_artificial] = ColumnKind::kArtificial;
      t.At(r, next_artificial) = 1.0;
      t.basis()[r] = next_artificial++;
    }
  }

  LpOutcome outcome;
  std::vector<bool> allowed(cols, true);

  // Phase 1: drive the artificial variables to zero.
  if (artificial_count > 0) {
    std::vector<double> phase1(cols, 0.0);
    for (int c = 0; c < cols; ++c) {
      if (kind[c] == ColumnKind::kArtificial) phase1[c] = -1.0;
    }
    t.Maximize(phase1, allowed);
    double infeasibility = 0.0;
    for (int r = 0; r < m; ++r) {
      if (kind[t.basis()[r]] == ColumnKind::kArtificial) {
        infeasibility += std::abs(t.Rhs(r));
      }
    }
    if (infeasibility > kFeasibilityEps * rhs_scale) {
      outcome.status = LpStatus::kInfeasible;
      return outcome;
    }
    // Pivot remaining (zero-valued) artificials out of the basis. Rows where
    // that is impossible are redundant and are left alone.
    for (int r = 0; r < m; ++r) {
      if (kind[t.basis()[r]] != ColumnKind::kArtificial) continue;
      for (int c = 0; c < cols; ++c) {
        if (kind[c] != ColumnKind::kArtificial &&
            std::abs(t.At(r, c)) > kPivotEps) {
          t.Pivot(r, c);
          break;
        }
      }
    }
    for (int c = 0; c < cols; ++c) {
      if (kind[c] == ColumnKind::kArtificial) allowed[c] = false;
    }
  }

  // Phase 2.
  std::vector<double> cost(cols, 0.0);
  const double sign = lp.sense == Sense::kMaximize ? 1.0 : -1.0;
  for (int j = 0; j < n; ++j) cost[j] = sign * lp.objective[j];
  if (!t.Maximize(cost, allowed)) {
    outcome.status = LpStatus::kUnbounded;
    return outcome;
  }

  outcome.status = LpStatus::kOptimal;
  outcome.solution.assign(n, 0.0);
  for (int r = 0; r < m; ++r) {
    const int b = t.basis()[r];
    if (b < n) outcome.solution[b] = std::max(t.Rhs(r), 0.0);
  }
  outcome.objective_value = 0.0;
  for (int j = 0; j < n; ++j) {
    outcome.objective_value += lp.objective[j] * outcome.solution[j];
  }
#ifndef NDEBUG
  if (MaxConstraintViolation(lp, outcome.solution) > 1e-7 * rhs_scale) {
    throw std::logic_error("simplex returned an infeasible point");
  }
#endif
  return outcome;
}

}  // namespace kantian
