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

#include "kantian/kantian.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kantian/errors.h"
#include "linalg.h"

namespace kantian {
namespace {

constexpr double kNegativeWeightTol = 1e-12;
constexpr double kOffSupportTol = 1e-9;
constexpr double kTieTol = 1e-9;

double MaxAbsEntry(const Matrix& s) {
  double scale = 0.0;
  for (int r = 0; r < s.size(); ++r) {
    for (int c = 0; c < s.size(); ++c) scale = std::max(scale, std::abs(s(r, c)));
  }
  return scale;
}

std::vector<double> Multiply(const Matrix& s, const std::vector<double>& x) {
  std::vector<double> y(s.size(), 0.0);
  for (int r = 0; r < s.size(); ++r) {
    for (int c = 0; c < s.size(); ++c) y[r] += s(r, c) * x[c];
  }
  return y;
}

double KktResidual(const Matrix& s, const std::vector<double>& x, double value) {
  const std::vector<double> sx = Multiply(s, x);
  double residual = 0.0;
  double total = 0.0;
  for (int i = 0; i < s.size(); ++i) {
    total += x[i];
    residual = std::max(residual, -x[i]);
    if (x[i] > 0.0) {
      residual = std::max(residual, std::abs(sx[i] - value));
    } else {
      residual = std::max(residual, sx[i] - value);
    }
  }
  return std::max(residual, std::abs(total - 1.0));
}

std::vector<int> PositiveSupport(const std::vector<double>& x) {
  std::vector<int> support;
  for (int i = 0; i < static_cast<int>(x.size()); ++i) {
    if (x[i] > 0.0) support.push_back(i);
  }
  return support;
}

QpResult MakeResult(const Matrix& s, std::vector<double> x) {
  const double value = s.QuadraticForm(x);
  const double residual = KktResidual(s, x, value);
  std::vector<int> support = PositiveSupport(x);
  return QpResult{MixedStrategy(std::move(x)), value, residual,
                  std::move(support)};
}

}  // namespace

std::vector<int> PureKantianEquilibria(const Game& game) {
  if (!game.HasIdenticalActions()) {
    throw PreconditionError("Kantian equilibria need identical action sets");
  }
  const int n = game.NumPlayers();
  const int k = game.NumActions(0);
  std::vector<double> best(n, -std::numeric_limits<double>::infinity());
  for (int a = 0; a < k; ++a) {
    auto u = game.Payoff(game.Diagonal(a));
    for (int i = 0; i < n; ++i) best[i] = std::max(best[i], u[i]);
  }
  std::vector<int> result;
  for (int a = 0; a < k; ++a) {
    auto u = game.Payoff(game.Diagonal(a));
    bool everyone_best = true;
    for (int i = 0; i < n; ++i) everyone_best &= (u[i] == best[i]);
    if (everyone_best) result.push_back(a);
  }
  return result;
}

QpResult SolveStandardQp(const Matrix& s) {
  const int n = s.size();
  if (n < 1 || n > kMaxQpSize) {
    throw PreconditionError("standard QP supports 1 to 20 variables");
  }
  const double scale = std::max(1.0, MaxAbsEntry(s));
  for (int r = 0; r < n; ++r) {
    for (int c = r + 1; c < n; ++c) {
      if (std::abs(s(r, c) - s(c, r)) > 1e-12 * scale) {
        throw PreconditionError("standard QP matrix must be symmetric");
      }
    }
  }

  std::vector<double> best_x;
  std::vector<int> best_support;
  double best_value = -std::numeric_limits<double>::infinity();

  std::vector<int> support;
  std::vector<double> system;
  std::vector<double> rhs;
  std::vector<double> x(n);
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    support.clear();
    for (int i = 0; i < n; ++i) {
      if (mask & (std::uint32_t{1} << i)) support.push_back(i);
    }
    const int k = static_cast<int>(support.size());
    const int dim = k + 1;
    // [S_TT  -1] [x_T]   [0]
    // [1^T    0] [ v ] = [1]
    system.assign(dim * dim, 0.0);
    rhs.assign(dim, 0.0);
    for (int r = 0; r < k; ++r) {
      for (int c = 0; c < k; ++c) {
        system[r * dim + c] = s(support[r], support[c]);
      }
      system[r * dim + k] = -1.0;
      system[k * dim + r] = 1.0;
    }
    rhs[k] = 1.0;
    if (!SolveLinearSystem(system, rhs, dim)) continue;

    bool feasible = true;
    std::fill(x.begin(), x.end(), 0.0);
    for (int r = 0; r < k && feasible; ++r) {
      if (rhs[r] < -kNegativeWeightTol) feasible = false;
      x[support[r]] = std::max(rhs[r], 0.0);
    }
    if (!feasible) continue;
    double total = 0.0;
    for (double xi : x) total += xi;
    if (total <= 0.0) continue;
    for (double& xi : x) xi /= total;

    const double multiplier = rhs[k];
    const std::vector<double> sx = Multiply(s, x);
    for (int j = 0; j < n && feasible; ++j) {
      if (!(mask & (std::uint32_t{1} << j)) &&
          sx[j] > multiplier + kOffSupportTol * scale) {
        feasible = false;
      }
    }
    if (!feasible) continue;

    const double value = s.QuadraticForm(x);
    std::vector<int> effective = PositiveSupport(x);
    const double tie = kTieTol * std::max(1.0, std::abs(best_value));
    const bool better =
        best_x.empty() || value > best_value + tie ||
        (value >= best_value - tie && effective < best_support);
    if (better) {
      best_value = value;
      best_x = x;
      best_support = std::move(effective);
    }
  }

  if (best_x.empty()) {
    // Unreachable for finite input: the global maximum is always a KKT point
    // with a nonsingular minimal support.
    throw std::runtime_error("no KKT point found");
  }
  return MakeResult(s, std::move(best_x));
}

QpResult MinimizeStandardQp(const Matrix& s) {
  Matrix negated(s.size());
  for (int r = 0; r < s.size(); ++r) {
    for (int c = 0; c < s.size(); ++c) negated(r, c) = -s(r, c);
  }
  QpResult result = SolveStandardQp(negated);
  result.value = -result.value;
  return result;
}

Matrix RowPlayerMatrix(const Game& game) {
  if (game.NumPlayers() != 2 || !game.HasIdenticalActions()) {
    throw PreconditionError("need a two-player game with identical actions");
  }
  const int k = game.NumActions(0);
  Matrix a(k);
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < k; ++c) a(r, c) = game.Payoff({{r, c}})[0];
  }
  return a;
}

QpResult MixedKantianTwoPlayerSymmetric(const Game& game) {
  const GameClassification cls = Classify(game);
  if (!cls.two_player_symmetric) {
    throw PreconditionError(
        "mixed Kantian equilibrium needs a two-player symmetric game");
  }
  const Matrix s = RowPlayerMatrix(game).Symmetrized();
  if (cls.symmetric_coordination) {
    // x^T A x <= max_k a_kk on the simplex, attained by a pure action.
    int best = 0;
    for (int a = 1; a < s.size(); ++a) {
      if (s(a, a) > s(best, best)) best = a;
    }
    std::vector<double> x(s.size(), 0.0);
    x[best] = 1.0;
    return MakeResult(s, std::move(x));
  }
  return SolveStandardQp(s);
}

PlatoniaMixedResult PlatoniaMixedKantian(int num_players) {
  if (num_players < 2) {
    throw PreconditionError("Platonia needs at least two players");
  }
  const double p = 1.0 / num_players;
  return {p, p * std::pow(1.0 - p, num_players - 1)};
}

MiscoordinationReport PriceOfMiscoordination(const Game& game) {
  if (!game.HasIdenticalActions()) {
    throw PreconditionError("price of miscoordination needs identical actions");
  }
  const GameClassification cls = Classify(game);
  const int n = game.NumPlayers();
  if (n == 2 ? !cls.two_player_symmetric
             : cls.standard_symmetric.value_or(false) == false) {
    throw PreconditionError("price of miscoordination needs a symmetric game");
  }

  MiscoordinationReport report;
  report.kantian_actions = PureKantianEquilibria(game);
  if (report.kantian_actions.empty()) {
    throw PreconditionError("game has no pure Kantian action");
  }
  report.optimal_value =
      game.Payoff(game.Diagonal(report.kantian_actions.front()))[0];

  std::vector<double> on_kantian(game.NumActions(0), 0.0);
  for (int a : report.kantian_actions) {
    on_kantian[a] = 1.0 / static_cast<double>(report.kantian_actions.size());
  }
  const std::vector<MixedStrategy> uniform(n, MixedStrategy(on_kantian));
  report.uniform_mix_value = ExpectedPayoffsMixed(game, uniform)[0];
  if (!(report.uniform_mix_value > 0.0)) {
    throw PreconditionError(
        "uniform Kantian mix has non-positive expected utility");
  }
  report.pom_uniform = report.optimal_value / report.uniform_mix_value;

  if (n == 2) {
    const Matrix s = RowPlayerMatrix(game).Symmetrized();
    const int r = static_cast<int>(report.kantian_actions.size());
    Matrix restricted(r);
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) {
        restricted(i, j) =
            s(report.kantian_actions[i], report.kantian_actions[j]);
      }
    }
    const double worst = MinimizeStandardQp(restricted).value;
    report.worst_symmetric_mix_value = worst;
    report.pom_worst = worst > 0.0 ? report.optimal_value / worst
                                   : std::numeric_limits<double>::infinity();
  }
  return report;
}

}  // namespace kantian
