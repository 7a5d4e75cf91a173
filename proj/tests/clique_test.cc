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

#include "doctest.h"
#include "kantian/clique.h"
#include "kantian/errors.h"
#include "kantian/kantian.h"
#include "oracles.h"

namespace kantian {
namespace {

Graph Complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  }
  return Graph(n, e);
}

Graph Cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u) e.emplace_back(u, (u + 1) % n);
  return Graph(n, e);
}

Graph RandomGraph(testing::TestRng& rng, int n, double density) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.Real(0, 1) < density) e.emplace_back(u, v);
    }
  }
  return Graph(n, e);
}

TEST_CASE("graph to game") {
  const Game k2 = GameFromGraph(Complete(2));
  CHECK(k2.Payoff({{0, 0}})[0] == 0);
  CHECK(k2.Payoff({{0, 0}})[1] == 0);
  CHECK(k2.Payoff({{0, 1}})[0] == 1);
  CHECK(k2.Payoff({{1, 0}})[1] == 1);
  CHECK(k2.Actions(0) == std::vector<std::string>{"0", "1"});

  const Game k3 = GameFromGraph(Complete(3));
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      CHECK(k3.Payoff({{a, b}})[0] == (a != b ? 1 : 0));
    }
  }
  CHECK(Classify(k3).two_player_symmetric);

  const Game empty = GameFromGraph(Graph(3, {}));
  for (std::int64_t i = 0; i < empty.NumProfiles(); ++i) {
    CHECK(empty.PayoffAt(i)[0] == 0);
    CHECK(empty.PayoffAt(i)[1] == 0);
  }
}

TEST_CASE("brute-force clique number") {
  CHECK(MaxCliqueBruteForce(Complete(3)) == 3);
  CHECK(MaxCliqueBruteForce(Cycle(5)) == 2);
  CHECK(MaxCliqueBruteForce(Graph(4, {})) == 1);
  CHECK_THROWS_AS(MaxCliqueBruteForce(Graph(21, {})), PreconditionError);
}

TEST_CASE("Motzkin-Straus verification") {
  const MotzkinStrausReport k3 = VerifyMotzkinStraus(Complete(3));
  CHECK(k3.qp_value == doctest::Approx(2.0 / 3.0));
  CHECK(k3.implied_clique == doctest::Approx(3.0));
  CHECK(k3.omega == 3);
  CHECK(k3.pass);

  const MotzkinStrausReport k2 = VerifyMotzkinStraus(Complete(2));
  CHECK(k2.qp_value == doctest::Approx(0.5));
  CHECK(k2.implied_clique == doctest::Approx(2.0));
  CHECK(k2.pass);

  const MotzkinStrausReport single = VerifyMotzkinStraus(Graph(1, {}));
  CHECK(single.qp_value == 0.0);
  CHECK(single.implied_clique == 1.0);
  CHECK(single.pass);

  CHECK_THROWS_AS(ImpliedCliqueSize(1.0), PreconditionError);
}

TEST_CASE("mixed Kantian decision problem") {
  CHECK(DecideMixedKantian(GameFromGraph(Complete(3)), 2.0 / 3.0));
  CHECK_FALSE(DecideMixedKantian(GameFromGraph(Cycle(5)), 2.0 / 3.0));
  CHECK(DecideMixedKantian(GameFromGraph(Cycle(5)), 0.0));
  CHECK(DecideMixedKantian(GameFromGraph(Graph(4, {})), 0.0));
}

TEST_CASE("graph validation and JSON") {
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), PreconditionError);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), PreconditionError);
  const Graph g = LoadGraph(R"({"vertices": 4, "edges": [[0,1],[1,0],[2,3]]})");
  CHECK(g.vertex_count == 4);
  CHECK(g.edges.size() == 2);
  CHECK_THROWS_AS(LoadGraph(R"({"vertices": 2, "edges": [[0,0]]})"),
                  ParseError);
  CHECK_THROWS_AS(LoadGraph(R"({"vertices": 2, "edges": [[0,2]]})"),
                  ParseError);
  CHECK_THROWS_AS(LoadGraph(R"({"edges": []})"), ParseError);
  CHECK_THROWS_AS(LoadGraph(R"({"vertices": 2, "edges": [[0]]})"), ParseError);
}

TEST_CASE("property: implied clique size equals the clique number") {
  testing::TestRng rng(1234);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = rng.Int(1, 10);
    const Graph g = RandomGraph(rng, n, rng.Real(0.1, 0.9));
    const int omega = testing::NaiveCliqueNumber(n, g.edges);
    CHECK(MaxCliqueBruteForce(g) == omega);
    const double o = SolveStandardQp(g.Adjacency()).value;
    CHECK(std::lround(ImpliedCliqueSize(o)) == omega);
    CHECK(VerifyMotzkinStraus(g).pass);
  }
}

TEST_CASE("property: the reduction answers CLIQUE in both directions") {
  testing::TestRng rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = rng.Int(1, 9);
    const Graph g = RandomGraph(rng, n, rng.Real(0.2, 0.8));
    const int omega = testing::NaiveCliqueNumber(n, g.edges);
    const Game game = GameFromGraph(g);
    for (int k = 1; k <= n; ++k) {
      CHECK(DecideMixedKantian(game, (k - 1.0) / k) == (omega >= k));
    }
  }
}

}  // namespace
}  // namespace kantian
