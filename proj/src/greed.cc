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


#include "kantian/greed.h"

#include <cmath>
#include <limits>
#include <string>

#include "kantian/errors.h"
#include "kantian/kantian.h"

namespace kantian {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

int LowestKantianAction(const Game& game) {
  const std::vector<int> kantian = PureKantianEquilibria(game);
  if (kantian.empty()) throw PreconditionError("game has no pure Kantian action");
  return kantian.front();
}

// Strictly above lambda times the Kantian payoff; never for lambda = inf.
bool WorthDefecting(double payoff, double lambda, double kantian_payoff) {
  if (std::isinf(lambda)) return false;
  return payoff > lambda * kantian_payoff;
}

}  // namespace

GreedProfile GreedProfile::FromLambdas(std::vector<double> lambdas) {
  for (double l : lambdas) {
    if (!(l >= 1.0)) throw PreconditionError("lambda must be at least 1");
  }
  return GreedProfile{std::move(lambdas)};
}

GreedProfile GreedProfile::FromGreedIndices(std::span<const double> indices) {
  std::vector<double> lambdas;
  for (double g : indices) {
    if (!(g >= 0.0)) throw PreconditionError("greed index must be >= 0");
    lambdas.push_back(g == 0.0 ? kInf : 1.0 + 1.0 / g);
  }
  return GreedProfile{std::move(lambdas)};
}

double GreedProfile::GreedIndex(int player) const {
  const double l = lambda.at(player);
  if (std::isinf(l)) return 0.0;
  if (l == 1.0) return kInf;
  return 1.0 / (l - 1.0);
}

std::vector<double> ParseGreedIndices(std::string_view text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string token(text.substr(start, end - start));
    token.erase(0, token.find_first_not_of(' '));
    token.erase(token.find_last_not_of(' ') + 1);
    if (token == "inf" || token == "infinity") {
      out.push_back(kInf);
    } else {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (token.empty() || used != token.size() || !std::isfinite(v) ||
          v < 0.0) {
        throw ParseError(ParseErrorKind::kInvalidValue,
                         "bad greed index '" + token + "'");
      }
      out.push_back(v);
    }
    start = end + 1;
  }
  return out;
}

Game PerceivedGame(const Game& game, const GreedProfile& greed) {
  const int n = game.NumPlayers();
  if (static_cast<int>(greed.lambda.size()) != n) {
    throw PreconditionError("need one greed value per player");
  }
  const std::vector<int> kantian = PureKantianEquilibria(game);
  if (kantian.empty()) throw PreconditionError("game has no pure Kantian action");
  const auto kantian_payoff = game.Payoff(game.Diagonal(kantian.front()));
  std::vector<bool> is_kantian(game.NumActions(0), false);
  for (int a : kantian) is_kantian[a] = true;

  std::vector<std::vector<std::string>> actions;
  for (int i = 0; i < n; ++i) actions.push_back(game.Actions(i));
  return Game::FromFunction(actions, [&](const PureProfile& a) {
    auto u = game.Payoff(a);
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) {
      if (is_kantian[a[i]]) {
        v[i] = game.Payoff(game.Diagonal(a[i]))[i];
      } else if (WorthDefecting(u[i], greed.lambda[i], kantian_payoff[i])) {
        v[i] = u[i];
      } else {
        v[i] = 0.0;
      }
    }
    return v;
  });
}

std::vector<PureProfile> PureNashEquilibria(const Game& game) {
  const int n = game.NumPlayers();
  std::vector<PureProfile> result;
  game.ForEachProfile([&](const PureProfile& a, std::span<const double> u) {
    PureProfile dev = a;
    for (int i = 0; i < n; ++i) {
      for (int b = 0; b < game.NumActions(i); ++b) {
        if (b == a[i]) continue;
        dev.actions[i] = b;
        if (game.Payoff(dev)[i] > u[i]) return;
      }
      dev.actions[i] = a[i];
    }
    result.push_back(a);
  });
  return result;
}

PureProfile GreedyPlay(const Game& game, const GreedProfile& greed) {
  const int n = game.NumPlayers();
  if (static_cast<int>(greed.lambda.size()) != n) {
    throw PreconditionError("need one greed value per player");
  }
  const int star = LowestKantianAction(game);
  const PureProfile diagonal = game.Diagonal(star);
  const auto kantian_payoff = game.Payoff(diagonal);
  PureProfile play = diagonal;
  for (int i = 0; i < n; ++i) {
    PureProfile probe = diagonal;
    int best = star;
    double best_payoff = kantian_payoff[i];
    for (int b = 0; b < game.NumActions(i); ++b) {
      probe.actions[i] = b;
      const double v = game.Payoff(probe)[i];
      if (v > best_payoff) {
        best = b;
        best_payoff = v;
      }
    }
    if (best != star &&
        WorthDefecting(best_payoff, greed.lambda[i], kantian_payoff[i])) {
      play.actions[i] = best;
    }
  }
  return play;
}

}  // namespace kantian
