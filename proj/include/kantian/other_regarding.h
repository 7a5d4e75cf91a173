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


#ifndef KANTIAN_OTHER_REGARDING_H_
#define KANTIAN_OTHER_REGARDING_H_

#include <string>
#include <vector>

#include "kantian/game.h"

namespace kantian {

enum class OtherRegardingConcept {
  kRawlsian,
  kBenthamHarsanyi,
  kBestOff,
  kRawlsianPercentile,
  kAspiration,
};

std::string ToString(OtherRegardingConcept concept_kind);

// Distributions are over Pareto-optimal profiles and come from vertex
// solutions of small LP sequences, so ties resolve deterministically.
struct OtherRegardingResult {
  OtherRegardingConcept concept_kind = OtherRegardingConcept::kRawlsian;
  JointDistribution distribution = JointDistribution::PointMass({});
  // Rawlsian: max-min expectation. Bentham: welfare. Best-off: best
  // expectation. Percentile: min-max expected percentile. Aspiration:
  // min-max probability of being unhappy.
  double primary_value = 0.0;
  std::vector<double> expected_payoffs;
};

// Maximize the smallest expected payoff, then welfare among the maximizers.
OtherRegardingResult RawlsianEquilibrium(const Game& game);

// Maximize the sum of expected payoffs.
OtherRegardingResult BenthamHarsanyiEquilibrium(const Game& game);

// Maximize the largest expected payoff. Among players reaching it, keep the
// welfare-maximal answer; remaining ties go to the lowest player index.
OtherRegardingResult BestOffEquilibrium(const Game& game);

// Percentage of the other Pareto profiles that give `player` strictly more
// than `profile`; 0 when the Pareto set is a singleton. Throws
// PreconditionError if `profile` is not Pareto optimal.
double PercentileIndex(const Game& game, const PureProfile& profile,
                       int player);

// Minimize the largest expected percentile index, then maximize welfare.
OtherRegardingResult RawlsianPercentileEquilibrium(const Game& game);

// Per-player median payoff over the Pareto set (mean of the two middle values
// for an even count).
std::vector<double> NaturalExpectationPoints(const Game& game);

// A player is unhappy at a profile paying strictly less than its natural
// expectation point. Minimize the largest probability of unhappiness, then
// maximize welfare.
OtherRegardingResult AspirationEquilibrium(const Game& game);

}  // namespace kantian

#endif  // KANTIAN_OTHER_REGARDING_H_
