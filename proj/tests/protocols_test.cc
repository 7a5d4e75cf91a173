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


#include <cmath>
#include <vector>

#include "doctest.h"
#include "kantian/errors.h"
#include "kantian/orbits.h"
#include "kantian/protocols.h"
#include "example_games.h"

namespace kantian {
namespace {

PureProfile P(std::initializer_list<int> a) { return PureProfile{a}; }

TEST_CASE("SplitMix64 reference values") {
  // First outputs for state 0 of the reference generator.
  std::uint64_t state = 0;
  CHECK(SplitMix64(state) == 0xE220A8397B1DCDAFULL);
  CHECK(SplitMix64(state) == 0x6E789E6AA1B965F4ULL);
  CHECK(SplitMix64(state) == 0x06C45D188009454FULL);
}

TEST_CASE("agent streams are deterministic and distinct") {
  AgentRng a(42, 1);
  AgentRng b(42, 1);
  AgentRng c(42, 2);
  AgentRng d(43, 1);
  int same_c = 0;
  int same_d = 0;
  for (int i = 0; i < 100; ++i) {
    const std::uint64_t x = a.Next();
    CHECK(x == b.Next());
    same_c += x == c.Next();
    same_d += x == d.Next();
  }
  CHECK(same_c == 0);
  CHECK(same_d == 0);
}

TEST_CASE("Below is in range and roughly uniform") {
  AgentRng rng(7, 3);
  for (int n : {1, 2, 3, 7, 20, 64}) {
    std::vector<int> counts(n, 0);
    const int draws = 2000 * n;
    for (int i = 0; i < draws; ++i) {
      const int x = rng.Below(n);
      REQUIRE(x >= 0);
      REQUIRE(x < n);
      ++counts[x];
    }
    const double p = 1.0 / n;
    const double sigma = std::sqrt(draws * p * (1 - p));
    for (int c : counts) CHECK(std::abs(c - draws * p) <= 5 * sigma + 1e-9);
  }
  CHECK_THROWS(rng.Below(0));
}

TEST_CASE("built-in games match the test copies") {
  const Game bos = RoemerBattleOfSexes();
  const Game ref = testing::RoemerBos();
  CHECK(GameToJson(bos) == GameToJson(ref));
  CHECK(GameToJson(AntiCoordinationGame()) ==
        GameToJson(testing::AntiCoordination()));
}

TEST_CASE("battle of the sexes protocol") {
  const SimulationReport r = SimulateBos(100000, 42);
  CHECK(r.protocol == "bos");
  CHECK(r.support_violations == 0);
  CHECK(r.empirical.Probability(P({0, 1})) == 0.0);
  CHECK(r.empirical.Probability(P({1, 0})) == 0.0);
  CHECK(r.theoretical.Probability(P({0, 0})) == doctest::Approx(0.5));
  // 3 sigma for a Bernoulli(1/2) frequency over 1e5 trials.
  const double sigma = std::sqrt(0.25 / 100000);
  CHECK(r.max_abs_freq_error <= 3 * sigma);
  CHECK(r.mean_payoffs[0] == doctest::Approx(2.5).epsilon(0.01));
  CHECK(r.mean_payoffs[1] == doctest::Approx(2.5).epsilon(0.01));
}

TEST_CASE("anti-coordination protocol") {
  const SimulationReport r = SimulateAnticoord(100000, 42);
  CHECK(r.support_violations == 0);
  CHECK(r.empirical.Probability(P({0, 0})) == 0.0);
  CHECK(r.empirical.Probability(P({1, 1})) == 0.0);
  const double sigma = std::sqrt(0.25 / 100000);
  CHECK(r.max_abs_freq_error <= 3 * sigma);
  // Payoff 100 or 200 with probability 1/2: sd 50.
  const double payoff_sigma = 50.0 / std::sqrt(100000.0);
  CHECK(std::abs(r.mean_payoffs[0] - 150.0) <= 3 * payoff_sigma);
  CHECK(std::abs(r.mean_payoffs[1] - 150.0) <= 3 * payoff_sigma);
}

TEST_CASE("Platonia protocol") {
  const int n = 20;
  const std::int64_t trials = 100000;
  const SimulationReport r = SimulatePlatonia(n, trials, 42);
  CHECK(r.support_violations == 0);
  CHECK(r.theoretical.entries().size() == static_cast<std::size_t>(n));
  const double p = 1.0 / n;
  const double sigma = std::sqrt(p * (1 - p) / trials);
  CHECK(r.max_abs_freq_error <= 3 * sigma + 1e-3);
  double total = 0.0;
  for (double m : r.mean_payoffs) {
    total += m;
    CHECK(std::abs(m - p) <= 4 * sigma);
  }
  CHECK(total == doctest::Approx(1.0));
}

TEST_CASE("small Platonia matches the program equilibrium") {
  const SimulationReport r = SimulatePlatonia(3, 3000, 1);
  const ProgramEquilibriumFamily f = KantianProgramEquilibria(PlatoniaGame(3));
  CHECK(r.theoretical.entries() == f.canonical.entries());
  CHECK(r.support_violations == 0);
}

TEST_CASE("runs are reproducible") {
  const SimulationReport a = SimulateBos(1000, 9);
  const SimulationReport b = SimulateBos(1000, 9);
  const SimulationReport c = SimulateBos(1000, 10);
  CHECK(a.empirical.entries() == b.empirical.entries());
  CHECK(a.mean_payoffs == b.mean_payoffs);
  CHECK(a.empirical.entries() != c.empirical.entries());
  const SimulationReport one = SimulatePlatonia(5, 1, 3);
  CHECK(one.empirical.entries().size() == 1);
  CHECK(one.support_violations == 0);
}

TEST_CASE("protocol preconditions") {
  CHECK_THROWS_AS(SimulateBos(0, 1), PreconditionError);
  CHECK_THROWS_AS(SimulateAnticoord(-5, 1), PreconditionError);
  CHECK_THROWS_AS(SimulatePlatonia(1, 10, 1), PreconditionError);
  CHECK_THROWS_AS(SimulatePlatonia(65, 10, 1), PreconditionError);
  CHECK_NOTHROW(SimulatePlatonia(64, 10, 1));
}

}  // namespace
}  // namespace kantian
