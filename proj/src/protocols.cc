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


#include "kantian/protocols.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "kantian/errors.h"
#include "kantian/orbits.h"

namespace kantian {
namespace {

void CheckTrials(std::int64_t trials) {
  if (trials < 1) throw PreconditionError("need at least one trial");
}

double MaxAbsDifference(const JointDistribution& a,
                        const JointDistribution& b) {
  double worst = 0.0;
  for (const auto& [p, q] : a.entries()) {
    worst = std::max(worst, std::abs(q - b.Probability(p)));
  }
  for (const auto& [p, q] : b.entries()) {
    worst = std::max(worst, std::abs(q - a.Probability(p)));
  }
  return worst;
}

JointDistribution Empirical(const std::map<PureProfile, std::int64_t>& counts,
                            std::int64_t trials) {
  std::vector<JointDistribution::Entry> entries;
  for (const auto& [p, c] : counts) {
    entries.emplace_back(p, static_cast<double>(c) / static_cast<double>(trials));
  }
  return JointDistribution(std::move(entries));
}

// Shared driver for the two-agent coin protocols.
template <typename Decide, typename Violates>
SimulationReport SimulateTwoAgent(const std::string& name, const Game& game,
                                  std::int64_t trials, std::uint64_t seed,
                                  Decide decide, Violates violates) {
  CheckTrials(trials);
  AgentRng first(seed, 1);
  AgentRng second(seed, 2);
  std::map<PureProfile, std::int64_t> counts;
  SimulationReport report;
  report.protocol = name;
  report.trials = trials;
  report.seed = seed;
  report.mean_payoffs.assign(2, 0.0);
  for (std::int64_t t = 0; t < trials; ++t) {
    const int bit1 = first.Bit() ? 1 : 0;
    const int bit2 = second.Bit() ? 1 : 0;
    // Each agent sees its own bit and the broadcast bit of the other.
    PureProfile play{{decide(1, bit1, bit2), decide(2, bit2, bit1)}};
    if (violates(play)) ++report.support_violations;
    ++counts[play];
    auto u = game.Payoff(play);
    report.mean_payoffs[0] += u[0];
    report.mean_payoffs[1] += u[1];
  }
  for (double& m : report.mean_payoffs) m /= static_cast<double>(trials);
  for (int i = 0; i < 2; ++i) report.actions.push_back(game.Actions(i));
  report.empirical = Empirical(counts, trials);
  report.theoretical = KantianProgramEquilibria(game).canonical;
  report.max_abs_freq_error =
      MaxAbsDifference(report.empirical, report.theoretical);
  return report;
}

}  // namespace

std::uint64_t SplitMix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

AgentRng::AgentRng(std::uint64_t seed, std::uint64_t agent_id) {
  std::uint64_t state = seed;
  std::uint64_t mixed = SplitMix64(state) ^ agent_id;
  engine_.seed(SplitMix64(mixed));
}

int AgentRng::Below(int n) {
  if (n < 1) throw std::invalid_argument("range must be positive");
  const std::uint64_t range = static_cast<std::uint64_t>(n);
  // Largest multiple of n representable, computed without overflow.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      (std::numeric_limits<std::uint64_t>::max() % range + 1) % range;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x > limit);
  return static_cast<int>(x % range);
}

Game RoemerBattleOfSexes() {
  return Game::Bimatrix({"B", "S"}, {{2, 0}, {1, 3}}, {{3, 0}, {1, 2}});
}

Game AntiCoordinationGame() {
  return Game::Bimatrix({"C", "S"}, {{10, 100}, {200, 6}},
                        {{10, 200}, {100, 6}});
}

SimulationReport SimulateBos(std::int64_t trials, std::uint64_t seed) {
  constexpr int kB = 0;
  constexpr int kS = 1;
  return SimulateTwoAgent(
      "bos", RoemerBattleOfSexes(), trials, seed,
      [](int, int mine, int other) { return (mine ^ other) == 0 ? kB : kS; },
      [](const PureProfile& p) { return p[0] != p[1]; });
}

SimulationReport SimulateAnticoord(std::int64_t trials, std::uint64_t seed) {
  constexpr int kC = 0;
  constexpr int kS = 1;
  return SimulateTwoAgent(
      "anticoord", AntiCoordinationGame(), trials, seed,
      [](int agent, int mine, int other) {
        return (mine ^ other) == agent % 2 ? kC : kS;
      },
      [](const PureProfile& p) { return p[0] == p[1]; });
}

SimulationReport SimulatePlatonia(int num_agents, std::int64_t trials,
                                  std::uint64_t seed) {
  if (num_agents < 2 || num_agents > kMaxPlatoniaAgents) {
    throw PreconditionError("Platonia simulation supports 2 to 64 agents");
  }
  CheckTrials(trials);
  constexpr int kSubmit = 0;
  constexpr int kDecline = 1;
  const int n = num_agents;
  std::vector<AgentRng> agents;
  for (int i = 1; i <= n; ++i) agents.emplace_back(seed, i);

  SimulationReport report;
  report.protocol = "platonia";
  report.trials = trials;
  report.seed = seed;
  report.mean_payoffs.assign(n, 0.0);
  report.actions.assign(n, {"S", "D"});
  std::map<PureProfile, std::int64_t> counts;
  std::vector<int> draws(n);
  PureProfile play{std::vector<int>(n)};
  for (std::int64_t t = 0; t < trials; ++t) {
    int sum = 0;
    for (int i = 0; i < n; ++i) {
      draws[i] = agents[i].Below(n);
      sum = (sum + draws[i]) % n;
    }
    // Every agent sees all draws; agent i (1-based) owns residue i mod n.
    int submitters = 0;
    int winner = -1;
    for (int i = 1; i <= n; ++i) {
      const bool submit = sum == i % n;
      play.actions[i - 1] = submit ? kSubmit : kDecline;
      if (submit) {
        ++submitters;
        winner = i - 1;
      }
    }
    if (submitters != 1) {
      ++report.support_violations;
    } else {
      report.mean_payoffs[winner] += 1.0;
    }
    ++counts[play];
  }
  for (double& m : report.mean_payoffs) m /= static_cast<double>(trials);
  report.empirical = Empirical(counts, trials);

  std::vector<PureProfile> single;
  for (int i = 0; i < n; ++i) {
    PureProfile p{std::vector<int>(n, kDecline)};
    p.actions[i] = kSubmit;
    single.push_back(std::move(p));
  }
  report.theoretical = JointDistribution::UniformOver(single);
  report.max_abs_freq_error =
      MaxAbsDifference(report.empirical, report.theoretical);
  return report;
}

}  // namespace kantian
