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


#include <algorithm>
#include <cmath>
#include <limits>

#include "doctest.h"
#include "kantian/errors.h"
#include "kantian/kantian.h"
#include "kantian/other_regarding.h"
#include "oracles.h"
#include "example_games.h"

namespace kantian {
namespace {

PureProfile P(std::initializer_list<int> a) { return PureProfile{a}; }

using Solver = OtherRegardingResult (*)(const Game&);

const std::vector<Solver>& AllSolvers() {
  static const std::vector<Solver> solvers = {
      RawlsianEquilibrium, BenthamHarsanyiEquilibrium, BestOffEquilibrium,
      RawlsianPercentileEquilibrium, AspirationEquilibrium};
  return solvers;
}

Game Transform(const Game& game, const std::function<double(double)>& f) {
  std::vector<std::vector<std::string>> actions;
  for (int i = 0; i < game.NumPlayers(); ++i) actions.push_back(game.Actions(i));
  return Game::FromFunction(actions, [&](const PureProfile& a) {
    auto u = game.Payoff(a);
    std::vector<double> v;
    for (double x : u) v.push_back(f(x));
    return v;
  });
}

double Welfare(const std::vector<double>& e) {
  double w = 0.0;
  for (double x : e) w += x;
  return w;
}

TEST_CASE("concept names") {
  CHECK(ToString(OtherRegardingConcept::kRawlsian) == "rawlsian");
  CHECK(ToString(OtherRegardingConcept::kBenthamHarsanyi) == "bentham");
  CHECK(ToString(OtherRegardingConcept::kBestOff) == "best-off");
  CHECK(ToString(OtherRegardingConcept::kRawlsianPercentile) == "percentile");
  CHECK(ToString(OtherRegardingConcept::kAspiration) == "aspiration");
}

TEST_CASE("welfare game: Rawlsian, Bentham and best-off differ") {
  const Game g = testing::WelfareGame();
  const OtherRegardingResult r = RawlsianEquilibrium(g);
  CHECK(r.primary_value == doctest::Approx(2.0));
  CHECK(r.distribution.Probability(P({1, 1})) == doctest::Approx(1.0));
  const OtherRegardingResult b = BenthamHarsanyiEquilibrium(g);
  CHECK(b.primary_value == doctest::Approx(7.0));
  CHECK(b.distribution.Probability(P({0, 0})) == doctest::Approx(1.0));
  const OtherRegardingResult best = BestOffEquilibrium(g);
  CHECK(best.primary_value == doctest::Approx(6.0));
  CHECK(best.distribution.Probability(P({0, 0})) == doctest::Approx(1.0));
}

TEST_CASE("anti-coordination game") {
  const Game g = testing::AntiCoordination();
  const OtherRegardingResult best = BestOffEquilibrium(g);
  CHECK(best.primary_value == doctest::Approx(200.0));
  CHECK(best.distribution.Probability(P({1, 0})) == doctest::Approx(1.0));
  const OtherRegardingResult b = BenthamHarsanyiEquilibrium(g);
  CHECK(b.primary_value == doctest::Approx(300.0));
  CHECK(Welfare(b.expected_payoffs) == doctest::Approx(300.0));
  const OtherRegardingResult r = RawlsianEquilibrium(g);
  CHECK(r.primary_value == doctest::Approx(150.0));
  CHECK(r.expected_payoffs[0] == doctest::Approx(150.0));
  CHECK(r.expected_payoffs[1] == doctest::Approx(150.0));
}

TEST_CASE("three-action game: best-off picks a unilateral deviation") {
  const OtherRegardingResult best = BestOffEquilibrium(testing::ThreeActionGame());
  CHECK(best.primary_value == doctest::Approx(6.0));
  CHECK(best.distribution.Probability(P({1, 0})) == doctest::Approx(1.0));
}

TEST_CASE("percentile equilibrium splits the two diagonals") {
  const Game g = testing::PercentileGame();
  CHECK(PercentileIndex(g, P({0, 0}), 0) == 0.0);
  CHECK(PercentileIndex(g, P({0, 0}), 1) == 100.0);
  CHECK_THROWS_AS(PercentileIndex(g, P({0, 1}), 0), PreconditionError);
  const OtherRegardingResult r = RawlsianPercentileEquilibrium(g);
  CHECK(r.primary_value == doctest::Approx(50.0));
  CHECK(r.distribution.Probability(P({0, 0})) == doctest::Approx(0.5));
  CHECK(r.expected_payoffs[0] == doctest::Approx(7.0));
  CHECK(r.expected_payoffs[1] == doctest::Approx(1.5));
}

TEST_CASE("aspiration equilibrium") {
  const Game g = testing::AspirationGame();
  const std::vector<double> nep = NaturalExpectationPoints(g);
  CHECK(nep[0] == doctest::Approx(8.5));
  CHECK(nep[1] == doctest::Approx(2.5));
  const OtherRegardingResult r = AspirationEquilibrium(g);
  CHECK(r.primary_value == doctest::Approx(0.5));
  CHECK(r.distribution.Probability(P({0, 0})) == doctest::Approx(0.5));
  CHECK(r.distribution.Probability(P({2, 2})) == doctest::Approx(0.5));

  const Game pd = testing::PrisonersDilemma();
  CHECK(NaturalExpectationPoints(pd) == std::vector<double>{2, 2});
  const OtherRegardingResult c = AspirationEquilibrium(pd);
  CHECK(c.primary_value == 0.0);
  CHECK(c.distribution.Probability(P({0, 0})) == doctest::Approx(1.0));
}

TEST_CASE("a single Pareto profile") {
  const Game pd = testing::TiedPrisonersDilemma();
  for (Solver solve : AllSolvers()) {
    CHECK(solve(testing::TrivialGame()).distribution.entries().size() == 1);
  }
  CHECK(RawlsianPercentileEquilibrium(testing::TrivialGame()).primary_value == 0.0);
  CHECK(RawlsianEquilibrium(pd).expected_payoffs[0] ==
        doctest::Approx(RawlsianEquilibrium(pd).expected_payoffs[1]));
}

TEST_CASE("property: supports stay on the Pareto frontier") {
  testing::TestRng rng(99);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = rng.Int(2, 3);
    const Game g = testing::RandomGame(rng, n, rng.Int(2, 3), 0, 9);
    for (Solver solve : AllSolvers()) {
      const OtherRegardingResult r = solve(g);
      double total = 0.0;
      for (const auto& [p, q] : r.distribution.entries()) {
        CHECK(IsParetoOptimal(g, p));
        CHECK(q > 0.0);
        total += q;
      }
      CHECK(total == doctest::Approx(1.0));
    }
    // Welfare ordering and the Rawlsian bound.
    const OtherRegardingResult raw = RawlsianEquilibrium(g);
    const OtherRegardingResult ben = BenthamHarsanyiEquilibrium(g);
    CHECK(Welfare(ben.expected_payoffs) >=
          Welfare(raw.expected_payoffs) - 1e-7);
    for (double e : raw.expected_payoffs) CHECK(e >= raw.primary_value - 1e-7);
    double max_min_pure = -std::numeric_limits<double>::infinity();
    for (const PureProfile& p : ParetoOptimalProfiles(g)) {
      auto u = g.Payoff(p);
      max_min_pure = std::max(max_min_pure, *std::min_element(u.begin(), u.end()));
    }
    CHECK(raw.primary_value >= max_min_pure - 1e-7);
    const OtherRegardingResult best = BestOffEquilibrium(g);
    double top = -std::numeric_limits<double>::infinity();
    g.ForEachProfile([&](const PureProfile&, std::span<const double> u) {
      top = std::max(top, *std::max_element(u.begin(), u.end()));
    });
    CHECK(best.primary_value == doctest::Approx(top));
  }
}

TEST_CASE("property: symmetric coordination games settle on a Kantian diagonal") {
  testing::TestRng rng(31337);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.Int(2, 3);
    const int k = rng.Int(2, 4);
    const Game g = testing::RandomSymmetricDiagonalGame(rng, n, k, rng.Int(1, k));
    const std::vector<int> kantian = PureKantianEquilibria(g);
    REQUIRE_FALSE(kantian.empty());
    const double v = g.Payoff(g.Diagonal(kantian[0]))[0];
    for (Solver solve : AllSolvers()) {
      const OtherRegardingResult r = solve(g);
      for (const PureProfile& p : r.distribution.Support()) {
        CHECK(std::find(kantian.begin(), kantian.end(), p[0]) != kantian.end());
        CHECK(p == g.Diagonal(p[0]));
      }
    }
    CHECK(RawlsianEquilibrium(g).primary_value == doctest::Approx(v));
    CHECK(BenthamHarsanyiEquilibrium(g).primary_value == doctest::Approx(n * v));
    CHECK(BestOffEquilibrium(g).primary_value == doctest::Approx(v));
  }
}

TEST_CASE("property: scaling and monotone transforms") {
  testing::TestRng rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const Game g = testing::RandomGame(rng, 2, rng.Int(2, 3), 1, 9);
    const double c = rng.Real(0.5, 4.0);
    const Game scaled = Transform(g, [c](double x) { return c * x; });
    CHECK(RawlsianEquilibrium(scaled).primary_value ==
          doctest::Approx(c * RawlsianEquilibrium(g).primary_value));
    CHECK(BenthamHarsanyiEquilibrium(scaled).primary_value ==
          doctest::Approx(c * BenthamHarsanyiEquilibrium(g).primary_value));
    CHECK(BestOffEquilibrium(scaled).primary_value ==
          doctest::Approx(c * BestOffEquilibrium(g).primary_value));
    const Game warped = Transform(g, [](double x) { return x * x * x + 2 * x; });
    CHECK(RawlsianPercentileEquilibrium(warped).primary_value ==
          doctest::Approx(RawlsianPercentileEquilibrium(g).primary_value));
    CHECK(AspirationEquilibrium(warped).primary_value ==
          doctest::Approx(AspirationEquilibrium(g).primary_value));
  }
}

TEST_CASE("percentile value against a grid search") {
  const Game pd = testing::PrisonersDilemma();
  const std::vector<PureProfile> pareto = ParetoOptimalProfiles(pd);
  double best = std::numeric_limits<double>::infinity();
  testing::ForEachGridPoint(3, 100, [&](const std::vector<double>& x) {
    double worst = 0.0;
    for (int i = 0; i < 2; ++i) {
      double q = 0.0;
      for (int j = 0; j < 3; ++j) q += x[j] * PercentileIndex(pd, pareto[j], i);
      worst = std::max(worst, q);
    }
    best = std::min(best, worst);
  });
  const double lp = RawlsianPercentileEquilibrium(pd).primary_value;
  CHECK(lp <= best + 1e-9);
  CHECK(lp >= best - 1.0);
}

}  // namespace
}  // namespace kantian
