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

#ifndef KANTIAN_GAME_H_
#define KANTIAN_GAME_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kantian {

// Tolerance used by every numeric optimization comparison. Domination and
// Kantian-action tests compare stored payoffs exactly.
inline constexpr double kOptTolerance = 1e-7;
inline constexpr double kProbTolerance = 1e-9;

// One action index per player. Ordering is lexicographic on the indices,
// which is the canonical output order everywhere in the library.
struct PureProfile {
  std::vector<int> actions;

  int operator[](int player) const { return actions[player]; }
  int size() const { return static_cast<int>(actions.size()); }
  auto operator<=>(const PureProfile&) const = default;
};

// A probability vector over one player's actions.
class MixedStrategy {
 public:
  explicit MixedStrategy(std::vector<double> probs);
  static MixedStrategy Pure(int num_actions, int action);
  static MixedStrategy Uniform(int num_actions);

  const std::vector<double>& probs() const { return probs_; }
  double operator[](int action) const { return probs_[action]; }
  int size() const { return static_cast<int>(probs_.size()); }

 private:
  std::vector<double> probs_;
};

// Probability mass over pure profiles. Entries are kept sorted
// lexicographically by profile; zero-probability entries are dropped.
class JointDistribution {
 public:
  using Entry = std::pair<PureProfile, double>;

  explicit JointDistribution(std::vector<Entry> entries);
  static JointDistribution PointMass(PureProfile profile);
  static JointDistribution UniformOver(const std::vector<PureProfile>& profiles);

  const std::vector<Entry>& entries() const { return entries_; }
  double Probability(const PureProfile& profile) const;
  std::vector<PureProfile> Support() const;

 private:
  std::vector<Entry> entries_;
};

// n-player finite normal-form game with a dense payoff tensor. Profile index
// is mixed-radix with player 0 most significant, so index order coincides with
// the lexicographic profile order.
class Game {
 public:
  // `payoffs` holds NumProfiles() * NumPlayers() values, profile-major.
  Game(std::vector<std::vector<std::string>> actions,
       std::vector<double> payoffs);

  using PayoffFunction = std::function<std::vector<double>(const PureProfile&)>;
  static Game FromFunction(std::vector<std::vector<std::string>> actions,
                           const PayoffFunction& payoff);
  // Two-player game from row-player and column-player matrices.
  static Game Bimatrix(std::vector<std::string> actions,
                       const std::vector<std::vector<double>>& row_payoffs,
                       const std::vector<std::vector<double>>& col_payoffs);

  int NumPlayers() const { return static_cast<int>(actions_.size()); }
  int NumActions(int player) const {
    return static_cast<int>(actions_[player].size());
  }
  const std::vector<std::string>& Actions(int player) const {
    return actions_[player];
  }
  std::int64_t NumProfiles() const { return num_profiles_; }
  bool HasIdenticalActions() const;

  std::int64_t ProfileIndex(const PureProfile& profile) const;
  PureProfile ProfileAt(std::int64_t index) const;
  std::span<const double> PayoffAt(std::int64_t index) const;
  std::span<const double> Payoff(const PureProfile& profile) const {
    return PayoffAt(ProfileIndex(profile));
  }
  // Profile in which every player uses `action`.
  PureProfile Diagonal(int action) const;

  std::optional<int> ActionIndex(int player, std::string_view label) const;
  std::string ProfileLabel(const PureProfile& profile) const;
  std::vector<std::string> ProfileLabels(const PureProfile& profile) const;

  // Calls fn(profile, payoff) for every profile in lexicographic order.
  template <typename Fn>
  void ForEachProfile(Fn&& fn) const {
    PureProfile profile{std::vector<int>(NumPlayers(), 0)};
    for (std::int64_t index = 0; index < num_profiles_; ++index) {
      fn(static_cast<const PureProfile&>(profile), PayoffAt(index));
      for (int p = NumPlayers() - 1; p >= 0; --p) {
        if (++profile.actions[p] < NumActions(p)) break;
        profile.actions[p] = 0;
      }
    }
  }

 private:
  std::vector<std::vector<std::string>> actions_;
  std::vector<double> payoffs_;
  std::int64_t num_profiles_ = 1;
};

struct GameClassification {
  bool identical_actions = false;
  // Empty when the permutation check was refused (more than 6 players).
  std::optional<bool> standard_symmetric;
  bool two_player_symmetric = false;
  bool diagonal = false;
  bool coordination = false;
  bool symmetric_coordination = false;
};

// Parses the JSON game document. Throws ParseError with a distinct kind for
// a missing profile, a wrong payoff-vector length and a duplicate label.
Game LoadGame(std::string_view json_text);
Game LoadGameFile(const std::string& path);
std::string GameToJson(const Game& game);

// Distribution JSON: [{"profile": ["C","D"], "probability": 0.5}, ...].
JointDistribution LoadDistribution(const Game& game, std::string_view json_text);
std::string DistributionToJson(const Game& game, const JointDistribution& dist);

// True iff `a` weakly dominates `b` on every coordinate and strictly on one.
bool StrictlyDominates(const Game& game, const PureProfile& a,
                       const PureProfile& b);
bool StrictlyDominates(std::span<const double> a, std::span<const double> b);

// Pure profiles not strictly dominated by any pure profile, in lexicographic
// order.
std::vector<PureProfile> ParetoOptimalProfiles(const Game& game);
bool IsParetoOptimal(const Game& game, const PureProfile& profile);

GameClassification Classify(const Game& game);

std::vector<double> ExpectedPayoffs(const Game& game,
                                    const JointDistribution& dist);
std::vector<double> ExpectedPayoffsMixed(
    const Game& game, std::span<const MixedStrategy> strategies);

// Hofstadter's lottery: actions {S, D}; a player playing S wins 1 iff it is
// the only one doing so.
Game PlatoniaGame(int num_players);

}  // namespace kantian

#endif  // KANTIAN_GAME_H_
