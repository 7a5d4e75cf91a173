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


#include "kantian/clique.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>

#include "json.hpp"
#include "json_util.h"
#include "kantian/errors.h"
#include "kantian/kantian.h"

namespace kantian {

Graph::Graph(int vertices, std::vector<std::pair<int, int>> edge_list)
    : vertex_count(vertices) {
  if (vertices < 1) throw PreconditionError("graph needs at least one vertex");
  std::set<std::pair<int, int>> unique;
  for (auto [u, v] : edge_list) {
    if (u < 0 || v < 0 || u >= vertices || v >= vertices) {
      throw PreconditionError("edge endpoint out of range");
    }
    if (u == v) throw PreconditionError("self-loops are not allowed");
    unique.insert({std::min(u, v), std::max(u, v)});
  }
  edges.assign(unique.begin(), unique.end());
}

Matrix Graph::Adjacency() const {
  Matrix a(vertex_count);
  for (auto [u, v] : edges) {
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  return a;
}

Graph LoadGraph(std::string_view json_text) {
  const nlohmann::json doc = ParseJsonText(json_text);
  if (!doc.is_object() || !doc.contains("vertices") ||
      !doc["vertices"].is_number_integer()) {
    throw ParseError(ParseErrorKind::kMalformed,
                     "graph needs an integer \"vertices\" field");
  }
  const std::int64_t n = doc["vertices"].get<std::int64_t>();
  if (n < 1 || n > 4096) {
    throw ParseError(ParseErrorKind::kInvalidValue,
                     "vertex count out of range");
  }
  std::vector<std::pair<int, int>> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) {
      throw ParseError(ParseErrorKind::kMalformed, "\"edges\" must be a list");
    }
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer()) {
        throw ParseError(ParseErrorKind::kMalformed,
                         "each edge must be a pair of vertex indices");
      }
      const std::int64_t u = e[0].get<std::int64_t>();
      const std::int64_t v = e[1].get<std::int64_t>();
      if (u < 0 || v < 0 || u >= n || v >= n) {
        throw ParseError(ParseErrorKind::kInvalidValue,
                         "edge endpoint out of range");
      }
      if (u == v) {
        throw ParseError(ParseErrorKind::kInvalidValue, "self-loop in graph");
      }
      edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

Graph LoadGraphFile(const std::string& path) {
  return LoadGraph(ReadTextFile(path));
}

Game GameFromGraph(const Graph& graph) {
  std::vector<std::string> labels;
  for (int v = 0; v < graph.vertex_count; ++v) {
    labels.push_back(std::to_string(v));
  }
  const Matrix a = graph.Adjacency();
  std::vector<std::vector<double>> rows(graph.vertex_count,
                                        std::vector<double>(graph.vertex_count));
  for (int r = 0; r < graph.vertex_count; ++r) {
    for (int c = 0; c < graph.vertex_count; ++c) rows[r][c] = a(r, c);
  }
  // u2(i, j) = A_ji, which equals A_ij for an undirected graph.
  std::vector<std::vector<double>> cols(rows);
  for (int r = 0; r < graph.vertex_count; ++r) {
    for (int c = 0; c < graph.vertex_count; ++c) cols[r][c] = a(c, r);
  }
  return Game::Bimatrix(labels, rows, cols);
}

int MaxCliqueBruteForce(const Graph& graph) {
  const int n = graph.vertex_count;
  if (n > kMaxOracleVertices) {
    throw PreconditionError("clique oracle supports at most 20 vertices");
  }
  std::vector<std::uint32_t> neighbours(n, 0);
  for (auto [u, v] : graph.edges) {
    neighbours[u] |= std::uint32_t{1} << v;
    neighbours[v] |= std::uint32_t{1} << u;
  }
  // is_clique[S] built from S minus its lowest vertex.
  const std::uint32_t subsets = std::uint32_t{1} << n;
  std::vector<char> is_clique(subsets, 0);
  is_clique[0] = 1;
  int best = 0;
  for (std::uint32_t s = 1; s < subsets; ++s) {
    const int low = __builtin_ctz(s);
    const std::uint32_t rest = s & (s - 1);
    is_clique[s] = is_clique[rest] && (rest & ~neighbours[low]) == 0;
    if (is_clique[s]) best = std::max(best, __builtin_popcount(s));
  }
  return best;
}

double ImpliedCliqueSize(double qp_value) {
  if (qp_value >= 1.0 - 1e-12) {
    throw PreconditionError("QP value too close to 1 for the clique formula");
  }
  return 1.0 / (1.0 - qp_value);
}

MotzkinStrausReport VerifyMotzkinStraus(const Graph& graph) {
  MotzkinStrausReport report;
  report.qp_value = SolveStandardQp(graph.Adjacency()).value;
  report.implied_clique = ImpliedCliqueSize(report.qp_value);
  report.omega = MaxCliqueBruteForce(graph);
  report.pass = std::abs(report.implied_clique - report.omega) < 1e-4;
  return report;
}

bool DecideMixedKantian(const Game& game, double r) {
  if (game.NumPlayers() == 2 && game.HasIdenticalActions() &&
      game.NumActions(0) > kMaxQpSize) {
    throw PreconditionError("decision procedure supports at most 20 actions");
  }
  return MixedKantianTwoPlayerSymmetric(game).value >= r - 1e-9;
}

}  // namespace kantian
