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

#ifndef KANTIAN_KANTIAN_H_
#define KANTIAN_KANTIAN_H_

#include <optional>
#include <vector>

#include "kantian/game.h"
#include "kantian/matrix.h"

namespace kantian {

inline constexpr int kMaxQpSize = 20;

// Global maximizer of x^T S x over the probability simplex.
struct QpResult {
  MixedStrategy maximizer;
  double value = 0.0;
  double kkt_residual = 0.0;
  // Indices with strictly positive weight, ascending.
  std::vector<int> support;
};

// Actions a such that the all-a profile maximizes every player's payoff among
// all diagonal profiles ("everyone switches to b" variation). Ascending.
// Throws PreconditionError if the players' action sets differ.
std::vector<int> PureKantianEquilibria(const Game& game);

// Exact global optimum of the standard quadratic program by enumerating every
// support, solving the stationarity system (Sx)_i = v on it and keeping the
// KKT points. Ties are broken towards the lexicographically smallest support.
// Throws PreconditionError for asymmetric input or size > kMaxQpSize.
QpResult SolveStandardQp(const Matrix& s);

// min x^T S x over the simplex, returned in the same shape (value is the
// minimum, `maximizer` the minimizing point).
QpResult MinimizeStandardQp(const Matrix& s);

// Row player's payoff matrix of a two-player game with identical actions.
Matrix RowPlayerMatrix(const Game& game);

// Common mixed strategy maximizing the expected payoff when both players
// adopt it. Symmetric coordination games take the pure fast path.
// Throws PreconditionError unless the game is a two-player symmetric game.
QpResult MixedKantianTwoPlayerSymmetric(const Game& game);

struct PlatoniaMixedResult {
  double submit_probability = 0.0;
  double value = 0.0;
};

// Closed form for the n-player lottery: p = 1/n, value p (1 - p)^(n - 1).
PlatoniaMixedResult PlatoniaMixedKantian(int num_players);

struct MiscoordinationReport {
  std::vector<int> kantian_actions;
  // Payoff on a pure Kantian diagonal profile.
  double optimal_value = 0.0;
  // Every player mixes uniformly and independently over the Kantian actions.
  double uniform_mix_value = 0.0;
  // Two-player games only: worst common mix over the Kantian actions.
  std::optional<double> worst_symmetric_mix_value;
  double pom_uniform = 0.0;
  std::optional<double> pom_worst;
};

MiscoordinationReport PriceOfMiscoordination(const Game& game);

}  // namespace kantian

#endif  // KANTIAN_KANTIAN_H_
