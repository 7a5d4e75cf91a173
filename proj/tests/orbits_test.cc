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
#include <set>

#include "doctest.h"
#include "kantian/errors.h"
#include "kantian/lp.h"
#include "kantian/orbits.h"
#include "oracles.h"
#include "example_games.h"

namespace kantian {
namespace {

PureProfile P(std::initializer_list<int> a) { return PureProfile{a}; }

std::vector<std::vector<int>> Members(const OrbitDecomposition& d) {
  std::vector<std::vector<int>> out;
  for (const Orbit& o : d.orbits) out.push_back(o.members);
  return out;
}

TEST_CASE("symmetry group of the prisoners' dilemma") {
  const ParetoGroup g = ProfileGroup(testing::PrisonersDilemma());
  CHECK(g.pareto == std::vector<PureProfile>{P({0, 0}), P({0, 1}), P({1, 0})});
  REQUIRE(g.elements.size() == 2);
  CHECK(g.elements[0] == ProfileBijection{0, 1, 2});
  CHECK(g.elements[1] == ProfileBijection{0, 2, 1});
}

TEST_CASE("symmetry group of the asymmetric battle of the sexes") {
  const ParetoGroup g = ProfileGroup(testing::RoemerBos());
  REQUIRE(g.elements.size() == 2);
  CHECK(g.elements[1] == ProfileBijection{1, 0});
  // Under action permutations (B,B) and (S,S) are unrelated.
  const ParetoGroup a =
      ProfileGroup(testing::RoemerBos(), SymmetryMode::kActionPermutation);
  CHECK(a.elements.size() == 1);
}

TEST_CASE("groups contain the identity and are closed") {
  const std::vector<Game> games = {
      testing::PrisonersDilemma(), testing::RoemerBos(),
      testing::ThreeActionGame(), testing::AntiCoordination(),
      testing::TiedPrisonersDilemma(), PlatoniaGame(3),
      testing::SymmetricCoordination({1, 1, 1, 1, 1, 1, 1, 1}),
      testing::TrivialGame()};
  for (const Game& game : games) {
    for (SymmetryMode mode : {SymmetryMode::kPayoffPermutation,
                              SymmetryMode::kActionPermutation}) {
      const ParetoGroup g = ProfileGroup(game, mode);
      ProfileBijection id(g.pareto.size());
      for (std::size_t k = 0; k < id.size(); ++k) id[k] = static_cast<int>(k);
      CHECK(g.elements.front() == id);
      if (g.elements.size() <= 2048) CHECK(IsGroup(g.elements));
    }
  }
  // Eight interchangeable diagonal profiles give the full symmetric group.
  CHECK(ProfileGroup(testing::SymmetricCoordination({1, 1, 1, 1, 1, 1, 1, 1}))
            .elements.size() == 40320);
  CHECK(ProfileGroup(testing::ThreeActionGame()).elements.size() == 48);
}

TEST_CASE("IsGroup rejects non-groups") {
  CHECK_FALSE(IsGroup({{1, 0}}));
  CHECK_FALSE(IsGroup({{0, 1, 2}, {1, 2, 0}}));
  CHECK(IsGroup({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}));
}

TEST_CASE("group enumeration refuses large Pareto sets") {
  CHECK_THROWS_AS(
      ProfileGroup(testing::SymmetricCoordination(std::vector<double>(9, 1))),
      PreconditionError);
}

TEST_CASE("orbit decompositions") {
  const OrbitDecomposition pd =
      ComputeOrbitDecomposition(testing::PrisonersDilemma());
  CHECK(Members(pd) == std::vector<std::vector<int>>{{0}, {1, 2}});
  CHECK(*pd.orbits[0].worth == doctest::Approx(2.0));
  CHECK(*pd.orbits[1].worth == doctest::Approx(1.5));
  CHECK(pd.pareto_symmetric);

  const OrbitDecomposition plat = ComputeOrbitDecomposition(PlatoniaGame(3));
  REQUIRE(plat.orbits.size() == 1);
  CHECK(plat.orbits[0].members.size() == 3);
  CHECK(*plat.orbits[0].worth == doctest::Approx(1.0 / 3.0));

  const OrbitDecomposition anti =
      ComputeOrbitDecomposition(testing::AntiCoordination());
  REQUIRE(anti.orbits.size() == 1);
  CHECK(*anti.orbits[0].worth == doctest::Approx(150.0));
  CHECK(anti.orbits[0].player_payoffs[0] == std::vector<double>{100, 200});
}

TEST_CASE("group orbits match the compatibility classes") {
  const std::vector<Game> games = {
      testing::PrisonersDilemma(), testing::RoemerBos(),
      testing::ThreeActionGame(), testing::AspirationGame(), PlatoniaGame(4)};
  for (const Game& game : games) {
    for (SymmetryMode mode : {SymmetryMode::kPayoffPermutation,
                              SymmetryMode::kActionPermutation}) {
      const auto from_group =
          ComputeOrbitDecomposition(game, ProfileGroup(game, mode));
      const auto direct = ComputeOrbitDecomposition(game, mode);
      CHECK(Members(from_group) == Members(direct));
      CHECK(from_group.pareto_symmetric == direct.pareto_symmetric);
    }
  }
}

TEST_CASE("Platonia orbit worth is 1/n") {
  for (int n = 2; n <= 12; ++n) {
    const ProgramEquilibriumFamily f = KantianProgramEquilibria(PlatoniaGame(n));
    CHECK(f.worth == doctest::Approx(1.0 / n));
    CHECK(f.canonical.entries().size() == static_cast<std::size_t>(n));
  }
}

TEST_CASE("program equilibria of the worked examples") {
  const ProgramEquilibriumFamily pd =
      KantianProgramEquilibria(testing::PrisonersDilemma());
  CHECK(pd.max_worth_orbits == std::vector<int>{0});
  CHECK(pd.canonical.entries() ==
        JointDistribution::PointMass(P({0, 0})).entries());

  const ProgramEquilibriumFamily tied =
      KantianProgramEquilibria(testing::TiedPrisonersDilemma());
  CHECK(tied.max_worth_orbits == std::vector<int>{0, 1});
  CHECK(tied.canonical.Probability(P({0, 0})) == doctest::Approx(0.5));
  CHECK(tied.canonical.Probability(P({0, 1})) == doctest::Approx(0.25));
  CHECK(tied.canonical.Probability(P({1, 0})) == doctest::Approx(0.25));
  for (double lambda : {0.0, 0.3, 1.0}) {
    const std::vector<double> w = {lambda, 1.0 - lambda};
    const JointDistribution d = tied.Mix(w);
    CHECK(d.Probability(P({0, 0})) == doctest::Approx(lambda));
    CHECK(d.Probability(P({1, 0})) == doctest::Approx((1.0 - lambda) / 2));
    CHECK(InProgramEquilibriumFamily(tied, d));
  }
  CHECK_FALSE(InProgramEquilibriumFamily(
      tied, JointDistribution::PointMass(P({0, 1}))));

  const ProgramEquilibriumFamily bos =
      KantianProgramEquilibria(testing::RoemerBos());
  CHECK(bos.canonical.Probability(P({0, 0})) == doctest::Approx(0.5));
  CHECK(bos.canonical.Probability(P({1, 1})) == doctest::Approx(0.5));
  const auto e = ExpectedPayoffs(testing::RoemerBos(), bos.canonical);
  CHECK(e[0] == doctest::Approx(2.5));
  CHECK(e[1] == doctest::Approx(2.5));

  const ProgramEquilibriumFamily anti =
      KantianProgramEquilibria(testing::AntiCoordination());
  CHECK(anti.worth == doctest::Approx(150.0));
  CHECK(anti.canonical.Probability(P({0, 1})) == doctest::Approx(0.5));
}

TEST_CASE("worth tie tolerance") {
  // Orbits {(a,a)} and {(a,b),(b,a)} with worths 1 + 1e-12 and 1.
  const double eps = 1e-12;
  const Game g = Game::Bimatrix({"a", "b"}, {{1 + eps, 2}, {0, 0}},
                                {{1 + eps, 0}, {2, 0}});
  CHECK(KantianProgramEquilibria(g).max_worth_orbits.size() == 2);
  CHECK(KantianProgramEquilibria(g, SymmetryMode::kPayoffPermutation, 0.0)
            .max_worth_orbits.size() == 1);
}

TEST_CASE("games that are not Pareto symmetric") {
  // A single Pareto profile paying the players differently.
  const Game g = Game::Bimatrix({"a", "b"}, {{2, 0}, {0, 0}}, {{1, 0}, {0, 0}});
  const OrbitDecomposition d = ComputeOrbitDecomposition(g);
  CHECK_FALSE(d.pareto_symmetric);
  CHECK_FALSE(d.orbits[0].worth.has_value());
  CHECK_THROWS_AS(KantianProgramEquilibria(g), PreconditionError);
  const Game different({{"a", "b"}, {"c", "d"}}, std::vector<double>(8, 0));
  CHECK_THROWS_AS(
      ComputeOrbitDecomposition(different, SymmetryMode::kActionPermutation),
      PreconditionError);
}

// Best welfare over distributions that are uniform inside each orbit and
// give every player at least `floor`.
double BestOrbitWelfareAbove(const Game& game, const OrbitDecomposition& d,
                             const std::vector<double>& floor) {
  const int n = game.NumPlayers();
  const int m = static_cast<int>(d.orbits.size());
  std::vector<std::vector<double>> mean(n, std::vector<double>(m, 0.0));
  for (int o = 0; o < m; ++o) {
    for (int k : d.orbits[o].members) {
      auto u = game.Payoff(d.pareto[k]);
      for (int i = 0; i < n; ++i) {
        mean[i][o] += u[i] / d.orbits[o].members.size();
      }
    }
  }
  std::vector<double> welfare(m, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int o = 0; o < m; ++o) welfare[o] += mean[i][o];
  }
  LinearProgram lp(m, Sense::kMaximize, welfare);
  for (int i = 0; i < n; ++i) {
    lp.AddConstraint(mean[i], Relation::kGreaterEqual, floor[i] - 1e-9);
  }
  lp.AddConstraint(std::vector<double>(m, 1.0), Relation::kEqual, 1.0);
  return SolveLp(lp).objective_value;
}

TEST_CASE("property: orbit structure on random symmetric games") {
  testing::TestRng rng(404);
  int symmetric = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const int players = rng.Int(2, 3);
    const int k = rng.Int(2, 3);
    const Game g = testing::SymmetricGameFrom(
        players, k, [&](int own, const std::vector<int>& others) {
          return static_cast<double>((own * 7 + others.back() * 3 +
                                      others.front() * 5 + trial) % 6);
        });
    const OrbitDecomposition d = ComputeOrbitDecomposition(g);
    // Orbits partition the Pareto set.
    std::vector<int> seen;
    for (const Orbit& o : d.orbits) {
      seen.insert(seen.end(), o.members.begin(), o.members.end());
    }
    std::sort(seen.begin(), seen.end());
    CHECK(seen.size() == d.pareto.size());
    CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
    if (!d.pareto_symmetric) continue;
    ++symmetric;
    for (const Orbit& o : d.orbits) {
      for (const auto& v : o.player_payoffs) CHECK(v == o.player_payoffs[0]);
    }
    const ProgramEquilibriumFamily f = KantianProgramEquilibria(g);
    for (const auto& [p, q] : f.canonical.entries()) {
      CHECK(std::binary_search(d.pareto.begin(), d.pareto.end(), p));
    }
    // No per-orbit-uniform distribution Pareto-improves on the canonical one.
    const auto e = ExpectedPayoffs(g, f.canonical);
    double w = 0.0;
    for (double x : e) w += x;
    CHECK(BestOrbitWelfareAbove(g, d, e) <= w + 1e-7);
  }
  CHECK(symmetric > 50);
}

}  // namespace
}  // namespace kantian
