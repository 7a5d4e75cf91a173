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


#ifndef KANTIAN_GREED_H_
#define KANTIAN_GREED_H_

#include <span>
#include <string_view>
#include <vector>

#include "kantian/game.h"

namespace kantian {

// Per-player thresholds lambda in [1, inf]. A player leaves the Kantian
// action only for a payoff above lambda times its Kantian payoff. The greed
// index 1 / (lambda - 1) runs from 0 (lambda = inf) to inf (lambda = 1).
struct GreedProfile {
  std::vector<double> lambda;

  // Throws PreconditionError for lambda < 1.
  static GreedProfile FromLambdas(std::vector<double> lambdas);
  // Throws PreconditionError for negative indices.
  static GreedProfile FromGreedIndices(std::span<const double> indices);

  double GreedIndex(int player) const;
};

// "3,inf,0.5" -> greed indices. Throws ParseError.
std::vector<double> ParseGreedIndices(std::string_view text);

// Utilities as seen by greedy agents: a Kantian action always pays its
// diagonal payoff; any other action keeps its material payoff only if that
// beats lambda_i times the payoff on the (lowest) Kantian diagonal, and
// pays 0 otherwise. Throws PreconditionError without a pure Kantian action.
Game PerceivedGame(const Game& game, const GreedProfile& greed);

// Profiles where no player gains strictly by a unilateral deviation.
std::vector<PureProfile> PureNashEquilibria(const Game& game);

// Each player compares its best material reply to the all-Kantian profile
// against lambda_i times its Kantian payoff and defects only if strictly
// better. Uses the lowest Kantian action.
PureProfile GreedyPlay(const Game& game, const GreedProfile& greed);

}  // namespace kantian

#endif  // KANTIAN_GREED_H_
