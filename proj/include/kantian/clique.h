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


#ifndef KANTIAN_CLIQUE_H_
#define KANTIAN_CLIQUE_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kantian/game.h"
#include "kantian/matrix.h"

namespace kantian {

inline constexpr int kMaxOracleVertices = 20;

// Simple undirected graph. Edges are stored normalized (u < v), sorted and
// deduplicated.
struct Graph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;

  Graph() = default;
  // Throws PreconditionError on self-loops or out-of-range endpoints.
  Graph(int vertices, std::vector<std::pair<int, int>> edge_list);

  Matrix Adjacency() const;
};

// {"vertices": n, "edges": [[0,1], ...]}. Throws ParseError.
Graph LoadGraph(std::string_view json_text);
Graph LoadGraphFile(const std::string& path);

// Two-player game whose payoff matrices are both the adjacency matrix.
// Actions are labelled "0" .. "n-1".
Game GameFromGraph(const Graph& graph);

// Clique number by exhaustive subset search. Throws PreconditionError above
// kMaxOracleVertices.
int MaxCliqueBruteForce(const Graph& graph);

struct MotzkinStrausReport {
  double qp_value = 0.0;
  double implied_clique = 0.0;
  int omega = 0;
  bool pass = false;
};

MotzkinStrausReport VerifyMotzkinStraus(const Graph& graph);

// Implied clique size 1 / (1 - o) for a standard-QP optimum o over an
// adjacency matrix. Throws PreconditionError when o is (numerically) 1.
double ImpliedCliqueSize(double qp_value);

// Is there a common mixed strategy whose expected payoff is at least r?
bool DecideMixedKantian(const Game& game, double r);

}  // namespace kantian

#endif  // KANTIAN_CLIQUE_H_
