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

#include "kantian/game.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

#include "kantian/errors.h"

namespace kantian {
namespace {

constexpr int kMaxSymmetryCheckPlayers = 6;
constexpr std::int64_t kMaxProfiles = std::int64_t{1} << 26;

void CheckProbabilityVector(const std::vector<double>& probs) {
  double total = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0)) {
      throw std::invalid_argument("probability must be non-negative");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > kProbTolerance) {
    throw std::invalid_argument("probabilities must sum to 1");
  }
}

}  // namespace

MixedStrategy::MixedStrategy(std::vector<double> probs)
    : probs_(std::move(probs)) {
  if (probs_.empty()) throw std::invalid_argument("empty mixed strategy");
  CheckProbabilityVector(probs_);
}

MixedStrategy MixedStrategy::Pure(int num_actions, int action) {
  std::vector<double> probs(num_actions, 0.0);
  probs.at(action) = 1.0;
  return MixedStrategy(std::move(probs));
}

MixedStrategy MixedStrategy::Uniform(int num_actions) {
  return MixedStrategy(std::vector<double>(num_actions, 1.0 / num_actions));
}

JointDistribution::JointDistribution(std::vector<Entry> entries) {
  std::vector<double> probs;
  probs.reserve(entries.size());
  for (const Entry& e : entries) probs.push_back(e.second);
  if (entries.empty()) throw std::invalid_argument("empty distribution");
  CheckProbabilityVector(probs);
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (entries[i].first == entries[i - 1].first) {
      throw std::invalid_argument("duplicate profile in distribution");
    }
  }
  for (Entry& e : entries) {
    if (e.second > 0.0) entries_.push_back(std::move(e));
  }
}

JointDistribution JointDistribution::PointMass(PureProfile profile) {
  return JointDistribution({{std::move(profile), 1.0}});
}

JointDistribution JointDistribution::UniformOver(
    const std::vector<PureProfile>& profiles) {
  std::vector<Entry> entries;
  for (const PureProfile& p : profiles) {
    entries.emplace_back(p, 1.0 / static_cast<double>(profiles.size()));
  }
  return JointDistribution(std::move(entries));
}

double JointDistribution::Probability(const PureProfile& profile) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), profile,
      [](const Entry& e, const PureProfile& p) { return e.first < p; });
  if (it != entries_.end() && it->first == profile) return it->second;
  return 0.0;
}

std::vector<PureProfile> JointDistribution::Support() const {
  std::vector<PureProfile> support;
  for (const Entry& e : entries_) support.push_back(e.first);
  return support;
}

Game::Game(std::vector<std::vector<std::string>> actions,
           std::vector<double> payoffs)
    : actions_(std::move(actions)), payoffs_(std::move(payoffs)) {
  if (actions_.empty()) throw std::invalid_argument("game needs a player");
  for (const auto& player_actions : actions_) {
    if (player_actions.empty()) {
      throw std::invalid_argument("every player needs at least one action");
    }
    if (num_profiles_ > kMaxProfiles / static_cast<std::int64_t>(
                                           player_actions.size())) {
      throw std::invalid_argument("game too large");
    }
    num_profiles_ *= static_cast<std::int64_t>(player_actions.size());
  }
  if (static_cast<std::int64_t>(payoffs_.size()) !=
      num_profiles_ * NumPlayers()) {
    throw std::invalid_argument("payoff tensor has the wrong size");
  }
}

Game Game::FromFunction(std::vector<std::vector<std::string>> actions,
                        const PayoffFunction& payoff) {
  std::int64_t profiles = 1;
  for (const auto& a : actions) profiles *= static_cast<std::int64_t>(a.size());
  const int n = static_cast<int>(actions.size());
  std::vector<double> payoffs;
  payoffs.reserve(profiles * n);
  // Build a placeholder game to reuse the profile iteration order.
  Game shape(actions, std::vector<double>(profiles * n, 0.0));
  shape.ForEachProfile([&](const PureProfile& p, std::span<const double>) {
    std::vector<double> u = payoff(p);
    if (static_cast<int>(u.size()) != n) {
      throw std::invalid_argument("payoff function returned wrong length");
    }
    payoffs.insert(payoffs.end(), u.begin(), u.end());
  });
  return Game(std::move(actions), std::move(payoffs));
}

Game Game::Bimatrix(std::vector<std::string> actions,
                    const std::vector<std::vector<double>>& row_payoffs,
                    const std::vector<std::vector<double>>& col_payoffs) {
  return FromFunction({actions, actions}, [&](const PureProfile& p) {
    return std::vector<double>{row_payoffs.at(p[0]).at(p[1]),
                               col_payoffs.at(p[0]).at(p[1])};
  });
}

bool Game::HasIdenticalActions() const {
  return std::all_of(actions_.begin(), actions_.end(),
                     [&](const auto& a) { return a == actions_[0]; });
}

std::int64_t Game::ProfileIndex(const PureProfile& profile) const {
  if (profile.size() != NumPlayers()) {
    throw std::out_of_range("profile has wrong number of players");
  }
  std::int64_t index = 0;
  for (int p = 0; p < NumPlayers(); ++p) {
    if (profile[p] < 0 || profile[p] >= NumActions(p)) {
      throw std::out_of_range("action index out of range");
    }
    index = index * NumActions(p) + profile[p];
  }
  return index;
}

PureProfile Game::ProfileAt(std::int64_t index) const {
  if (index < 0 || index >= num_profiles_) {
    throw std::out_of_range("profile index out of range");
  }
  PureProfile profile{std::vector<int>(NumPlayers(), 0)};
  for (int p = NumPlayers() - 1; p >= 0; --p) {
    profile.actions[p] = static_cast<int>(index % NumActions(p));
    index /= NumActions(p);
  }
  return profile;
}

std::span<const double> Game::PayoffAt(std::int64_t index) const {
  return std::span<const double>(payoffs_).subspan(index * NumPlayers(),
                                                   NumPlayers());
}

PureProfile Game::Diagonal(int action) const {
  return PureProfile{std::vector<int>(NumPlayers(), action)};
}

std::optional<int> Game::ActionIndex(int player, std::string_view label) const {
  const auto& a = actions_.at(player);
  auto it = std::find(a.begin(), a.end(), label);
  if (it == a.end()) return std::nullopt;
  return static_cast<int>(it - a.begin());
}

std::vector<std::string> Game::ProfileLabels(const PureProfile& profile) const {
  std::vector<std::string> labels;
  for (int p = 0; p < profile.size(); ++p) {
    labels.push_back(actions_.at(p).at(profile[p]));
  }
  return labels;
}

std::string Game::ProfileLabel(const PureProfile& profile) const {
  std::string out = "(";
  const auto labels = ProfileLabels(profile);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0) out += ",";
    out += labels[i];
  }
  return out + ")";
}

bool StrictlyDominates(std::span<const double> a, std::span<const double> b) {
  bool strict = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
    if (a[i] > b[i]) strict = true;
  }
  return strict;
}

bool StrictlyDominates(const Game& game, const PureProfile& a,
                       const PureProfile& b) {
  return StrictlyDominates(game.Payoff(a), game.Payoff(b));
}

std::vector<PureProfile> ParetoOptimalProfiles(const Game& game) {
  // A profile can only be dominated by one that is lexicographically larger
  // in payoff space, and if it is dominated at all then it is dominated by a
  // maximal element. Scanning in decreasing payoff order therefore only needs
  // to compare against the frontier found so far.
  std::vector<std::int64_t> order(game.NumProfiles());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::int64_t a, std::int64_t b) {
                     auto pa = game.PayoffAt(a);
                     auto pb = game.PayoffAt(b);
                     return std::lexicographical_compare(
                         pb.begin(), pb.end(), pa.begin(), pa.end());
                   });
  std::vector<std::int64_t> frontier;
  for (std::int64_t index : order) {
    auto payoff = game.PayoffAt(index);
    bool dominated = std::any_of(
        frontier.begin(), frontier.end(), [&](std::int64_t f) {
          return StrictlyDominates(game.PayoffAt(f), payoff);
        });
    if (!dominated) frontier.push_back(index);
  }
  std::sort(frontier.begin(), frontier.end());
  std::vector<PureProfile> result;
  result.reserve(frontier.size());
  for (std::int64_t index : frontier) result.push_back(game.ProfileAt(index));
  return result;
}

bool IsParetoOptimal(const Game& game, const PureProfile& profile) {
  auto payoff = game.Payoff(profile);
  for (std::int64_t i = 0; i < game.NumProfiles(); ++i) {
    if (StrictlyDominates(game.PayoffAt(i), payoff)) return false;
  }
  return true;
}

namespace {

// (perm . a)_{perm[j]} = a_j: player perm[j] takes over what j was doing.
bool IsPlayerAutomorphism(const Game& game, const std::vector<int>& perm) {
  const int n = game.NumPlayers();
  PureProfile image{std::vector<int>(n)};
  bool ok = true;
  game.ForEachProfile([&](const PureProfile& a, std::span<const double> u) {
    if (!ok) return;
    for (int j = 0; j < n; ++j) image.actions[perm[j]] = a[j];
    auto v = game.Payoff(image);
    for (int i = 0; i < n; ++i) {
      if (u[i] != v[perm[i]]) {
        ok = false;
        return;
      }
    }
  });
  return ok;
}

bool HasTransitiveAutomorphismGroup(const Game& game) {
  const int n = game.NumPlayers();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<bool> reached(n, false);
  reached[0] = true;
  // The automorphisms form a group; it contains a transitive subgroup iff it
  // is itself transitive, i.e. player 0 can be sent to every player.
  do {
    if (reached[perm[0]]) continue;
    if (IsPlayerAutomorphism(game, perm)) reached[perm[0]] = true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::all_of(reached.begin(), reached.end(), [](bool b) { return b; });
}

}  // namespace

GameClassification Classify(const Game& game) {
  GameClassification c;
  const int n = game.NumPlayers();
  c.identical_actions = game.HasIdenticalActions();

  if (n == 2 && c.identical_actions) {
    c.two_player_symmetric = true;
    const int k = game.NumActions(0);
    for (int a = 0; a < k && c.two_player_symmetric; ++a) {
      for (int b = 0; b < k; ++b) {
        if (game.Payoff({{a, b}})[0] != game.Payoff({{b, a}})[1]) {
          c.two_player_symmetric = false;
          break;
        }
      }
    }
  }

  if (!c.identical_actions) {
    c.standard_symmetric = false;
    return c;
  }

  const int k = game.NumActions(0);
  c.diagonal = true;
  bool zero_off_diagonal = true;
  game.ForEachProfile([&](const PureProfile& a, std::span<const double> u) {
    bool on_diagonal = std::all_of(a.actions.begin(), a.actions.end(),
                                   [&](int x) { return x == a[0]; });
    if (on_diagonal) return;
    if (std::any_of(u.begin(), u.end(), [](double x) { return x != 0.0; })) {
      zero_off_diagonal = false;
    }
    bool covered = false;
    for (int d = 0; d < k && !covered; ++d) {
      auto v = game.Payoff(game.Diagonal(d));
      covered = std::equal(v.begin(), v.end(), u.begin(),
                           [](double x, double y) { return x >= y; });
    }
    if (!covered) c.diagonal = false;
  });
  c.coordination = c.diagonal && zero_off_diagonal;

  bool equal_diagonal = true;
  for (int d = 0; d < k; ++d) {
    auto v = game.Payoff(game.Diagonal(d));
    if (std::any_of(v.begin(), v.end(), [&](double x) { return x != v[0]; })) {
      equal_diagonal = false;
    }
  }
  c.symmetric_coordination = c.coordination && equal_diagonal;

  if (n <= kMaxSymmetryCheckPlayers) {
    c.standard_symmetric = HasTransitiveAutomorphismGroup(game);
  } else if (c.symmetric_coordination) {
    // Every player permutation is an automorphism of such a game.
    c.standard_symmetric = true;
  }
  return c;
}

std::vector<double> ExpectedPayoffs(const Game& game,
                                    const JointDistribution& dist) {
  std::vector<double> expected(game.NumPlayers(), 0.0);
  for (const auto& [profile, prob] : dist.entries()) {
    auto u = game.Payoff(profile);
    for (int i = 0; i < game.NumPlayers(); ++i) expected[i] += prob * u[i];
  }
  return expected;
}

std::vector<double> ExpectedPayoffsMixed(
    const Game& game, std::span<const MixedStrategy> strategies) {
  const int n = game.NumPlayers();
  if (static_cast<int>(strategies.size()) != n) {
    throw std::invalid_argument("need one mixed strategy per player");
  }
  for (int i = 0; i < n; ++i) {
    if (strategies[i].size() != game.NumActions(i)) {
      throw std::invalid_argument("mixed strategy has wrong length");
    }
  }
  std::vector<double> expected(n, 0.0);
  game.ForEachProfile([&](const PureProfile& a, std::span<const double> u) {
    double prob = 1.0;
    for (int i = 0; i < n && prob != 0.0; ++i) prob *= strategies[i][a[i]];
    if (prob == 0.0) return;
    for (int i = 0; i < n; ++i) expected[i] += prob * u[i];
  });
  return expected;
}

Game PlatoniaGame(int num_players) {
  if (num_players < 2 || num_players > 12) {
    throw PreconditionError("Platonia game needs 2 to 12 players");
  }
  std::vector<std::vector<std::string>> actions(num_players, {"S", "D"});
  return Game::FromFunction(std::move(actions), [&](const PureProfile& a) {
    std::vector<double> u(num_players, 0.0);
    int submitted = 0;
    int last = -1;
    for (int i = 0; i < num_players; ++i) {
      if (a[i] == 0) {
        ++submitted;
        last = i;
      }
    }
    if (submitted == 1) u[last] = 1.0;
    return u;
  });
}

}  // namespace kantian
