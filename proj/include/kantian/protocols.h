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


#ifndef KANTIAN_PROTOCOLS_H_
#define KANTIAN_PROTOCOLS_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "kantian/game.h"

namespace kantian {

inline constexpr int kMaxPlatoniaAgents = 64;

// SplitMix64 step: advances `state` and returns the next output.
std::uint64_t SplitMix64(std::uint64_t& state);

// Private random stream of one agent. The mt19937_64 engine is seeded from
// SplitMix64 applied to (seed, agent_id), so every (seed, agent) pair gets a
// reproducible, platform-independent stream. No std distributions are used.
class AgentRng {
 public:
  AgentRng(std::uint64_t seed, std::uint64_t agent_id);

  std::uint64_t Next() { return engine_(); }
  bool Bit() { return (engine_() >> 63) != 0; }
  // Uniform on {0, ..., n - 1} by rejection sampling.
  int Below(int n);

 private:
  std::mt19937_64 engine_;
};

struct SimulationReport {
  std::string protocol;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<std::vector<std::string>> actions;
  JointDistribution empirical = JointDistribution::PointMass({});
  JointDistribution theoretical = JointDistribution::PointMass({});
  std::vector<double> mean_payoffs;
  double max_abs_freq_error = 0.0;
  // Trials that broke the protocol's support guarantee (expected 0).
  std::int64_t support_violations = 0;
};

// Asymmetric battle of the sexes: BB=(2,3), BS=(0,0), SB=(1,1), SS=(3,2).
Game RoemerBattleOfSexes();
// CC=(10,10), CS=(100,200), SC=(200,100), SS=(6,6).
Game AntiCoordinationGame();

// Both agents draw a bit and play B iff the bits agree.
SimulationReport SimulateBos(std::int64_t trials, std::uint64_t seed);
// Agent i in {1, 2} plays C iff the XOR of the bits equals i mod 2.
SimulationReport SimulateAnticoord(std::int64_t trials, std::uint64_t seed);
// Agents 1..n draw from Z_n; agent i submits iff the sum is i mod n (residue
// 0 belongs to agent n). Payoffs are evaluated directly, so n may exceed
// the size limit of PlatoniaGame.
SimulationReport SimulatePlatonia(int num_agents, std::int64_t trials,
                                  std::uint64_t seed);

}  // namespace kantian

#endif  // KANTIAN_PROTOCOLS_H_
