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


#ifndef KANTIAN_ORBITS_H_
#define KANTIAN_ORBITS_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kantian/game.h"

namespace kantian {

inline constexpr int kMaxGroupParetoSize = 8;
inline constexpr double kWorthTieTolerance = 1e-9;

// Which bijections of the Pareto set count as symmetries.
//   kPayoffPermutation: h(a)'s payoff vector is a rearrangement of a's.
//   kActionPermutation: h(a)'s actions are a rearrangement of a's (requires
//                       identical action sets).
enum class SymmetryMode { kPayoffPermutation, kActionPermutation };

std::string ToString(SymmetryMode mode);

// A permutation of the Pareto profile list: profile k maps to mapping[k].
using ProfileBijection = std::vector<int>;

struct ParetoGroup {
  std::vector<PureProfile> pareto;
  // Sorted; the identity comes first.
  std::vector<ProfileBijection> elements;
};

// The largest group of compatible bijections of the Pareto set. Every
// element is enumerated, so the Pareto set must have at most
// kMaxGroupParetoSize profiles (PreconditionError otherwise). Closure under
// composition and inverses is verified before returning.
ParetoGroup ProfileGroup(const Game& game,
                         SymmetryMode mode = SymmetryMode::kPayoffPermutation);

// Checks identity, closure and inverses; exhaustive for small groups.
bool IsGroup(const std::vector<ProfileBijection>& elements);

struct Orbit {
  // Indices into the Pareto list, ascending.
  std::vector<int> members;
  // player_payoffs[i] is player i's payoffs over the orbit, sorted.
  std::vector<std::vector<double>> player_payoffs;
  // Empty when the players' multisets differ.
  std::optional<double> worth;
};

struct OrbitDecomposition {
  std::vector<PureProfile> pareto;
  // Ordered by smallest member.
  std::vector<Orbit> orbits;
  bool pareto_symmetric = true;

  // Index of the orbit holding Pareto profile `k`.
  int OrbitOf(int k) const;
};

OrbitDecomposition ComputeOrbitDecomposition(const Game& game,
                                             const ParetoGroup& group);

// Orbits of the maximal group computed straight from the compatibility
// classes (the maximal group acts as the full symmetric group on each
// class), so the Pareto set size is not limited.
OrbitDecomposition ComputeOrbitDecomposition(
    const Game& game, SymmetryMode mode = SymmetryMode::kPayoffPermutation);

struct ProgramEquilibriumFamily {
  OrbitDecomposition decomposition;
  std::vector<int> max_worth_orbits;
  double worth = 0.0;
  // Equal weight on every max-worth orbit, uniform inside each.
  JointDistribution canonical = JointDistribution::PointMass({});

  // Member of the family with the given (normalized) orbit weights, one per
  // entry of max_worth_orbits.
  JointDistribution Mix(std::span<const double> weights) const;
};

// Convex combinations of uniform distributions over maximum-worth orbits.
// Throws PreconditionError if the game is not Pareto symmetric in `mode`.
ProgramEquilibriumFamily KantianProgramEquilibria(
    const Game& game, SymmetryMode mode = SymmetryMode::kPayoffPermutation,
    double tie_tolerance = kWorthTieTolerance);

// Whether `dist` lies in the family: Pareto support, inside max-worth orbits
// and uniform within every orbit it touches.
bool InProgramEquilibriumFamily(const ProgramEquilibriumFamily& family,
                                const JointDistribution& dist,
                                double tolerance = kProbTolerance);

// ---------------------------------------------------------------------------
// Correlated symmetric equilibria.

inline constexpr int kMaxSignalProfiles = 4096;
inline constexpr long long kMaxDeviationFamilies = 1000000;

struct CorrelatedSymmetricSpec {
  std::vector<std::string> omega;
  // Measure over signal vectors; index is mixed radix over omega with
  // player 0 most significant.
  std::vector<double> xi;
  // partitions[i][t] lists the signal-vector indices in player i's class t.
  std::vector<std::vector<std::vector<int>>> partitions;
  // strategies[i][t] is player i's action on class t.
  std::vector<std::vector<int>> strategies;
};

// JSON: {"omega": [...], "xi": {"0,1": 0.25, ...},
//        "partitions": [[["0,0","0,1"], ...], ...],
//        "strategies": [{"class0": "B", ...}, ...]}
// Omitted xi entries are zero. Throws ParseError when xi does not sum to 1
// or a partition does not cover the signal space exactly once.
CorrelatedSymmetricSpec LoadCorrelatedSpec(const Game& game,
                                           std::string_view json_text);

struct CorrelatedCheckReport {
  bool xi_exchangeable = false;
  bool partitions_symmetric = false;
  bool symmetry_ok = false;
  bool no_profitable_deviation = false;
  bool is_kantian_program_eq = false;
  long long deviation_families_checked = 0;
  JointDistribution induced = JointDistribution::PointMass({});
  std::vector<double> expected_payoffs;
};

// Requires a standard symmetric game and at most kMaxSignalProfiles signal
// vectors; throws PreconditionError when the symmetric deviation families
// would exceed kMaxDeviationFamilies.
CorrelatedCheckReport CheckCorrelatedSymmetricEquilibrium(
    const Game& game, const CorrelatedSymmetricSpec& spec);

}  // namespace kantian

#endif  // KANTIAN_ORBITS_H_
