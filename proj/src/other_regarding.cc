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


#include "kantian/other_regarding.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "kantian/errors.h"
#include "kantian/lp.h"

namespace kantian {
namespace {

constexpr double kCleanupThreshold = 1e-12;

struct ParetoTable {
  std::vector<PureProfile> profiles;
  // value[i][j]: player i's number at Pareto profile j.
  std::vector<std::vector<double>> value;
  std::vector<double> welfare;
};

ParetoTable PayoffTable(const Game& game) {
  ParetoTable t;
  t.profiles = ParetoOptimalProfiles(game);
  const int n = game.NumPlayers();
  const int m = static_cast<int>(t.profiles.size());
  t.value.assign(n, std::vector<double>(m));
  t.welfare.assign(m, 0.0);
  for (int j = 0; j < m; ++j) {
    auto u = game.Payoff(t.profiles[j]);
    for (int i = 0; i < n; ++i) {
      t.value[i][j] = u[i];
      t.welfare[j] += u[i];
    }
  }
  return t;
}

std::vector<double> Solve(const LinearProgram& lp) {
  LpOutcome out = SolveLp(lp);
  if (out.status != LpStatus::kOptimal) {
    // Every LP here is feasible (point masses) and bounded (simplex).
    throw std::logic_error("LP unexpectedly " + ToString(out.status));
  }
  return out.solution;
}

void AddSimplexRow(LinearProgram& lp, int m) {
  std::vector<double> row(lp.variable_count, 0.0);
  std::fill(row.begin(), row.begin() + m, 1.0);
  lp.AddConstraint(std::move(row), Relation::kEqual, 1.0);
}

// First stage of the sequence with a free variable z = z+ - z-:
//   maximize z s.t. q_i . x >= z   (kMaximize), or
//   minimize z s.t. q_i . x <= z   (kMinimize).
double BoundStage(const std::vector<std::vector<double>>& q, int m,
                  Sense sense) {
  std::vector<double> objective(m + 2, 0.0);
  objective[m] = 1.0;
  objective[m + 1] = -1.0;
  LinearProgram lp(m + 2, sense, objective);
  const Relation rel =
      sense == Sense::kMaximize ? Relation::kGreaterEqual : Relation::kLessEqual;
  for (const auto& qi : q) {
    std::vector<double> row(qi);
    row.push_back(-1.0);
    row.push_back(1.0);
    lp.AddConstraint(std::move(row), rel, 0.0);
  }
  AddSimplexRow(lp, m);
  const std::vector<double> x = Solve(lp);
  return x[m] - x[m + 1];
}

// Welfare-maximizing vertex subject to q_i . x (rel) bound for every i.
std::vector<double> WelfareStage(const ParetoTable& t,
                                 const std::vector<std::vector<double>>& q,
                                 Relation rel, double bound) {
  const int m = static_cast<int>(t.profiles.size());
  LinearProgram lp(m, Sense::kMaximize, t.welfare);
  for (const auto& qi : q) lp.AddConstraint(qi, rel, bound);
  AddSimplexRow(lp, m);
  return Solve(lp);
}

OtherRegardingResult MakeResult(const Game& game, const ParetoTable& t,
                                OtherRegardingConcept kind,
                                std::vector<double> x, double primary) {
  double total = 0.0;
  for (double& v : x) {
    if (v < kCleanupThreshold) v = 0.0;
    total += v;
  }
  std::vector<JointDistribution::Entry> entries;
  for (std::size_t j = 0; j < t.profiles.size(); ++j) {
    if (x[j] > 0.0) entries.emplace_back(t.profiles[j], x[j] / total);
  }
  OtherRegardingResult r;
  r.concept_kind = kind;
  r.distribution = JointDistribution(std::move(entries));
  r.primary_value = primary;
  r.expected_payoffs = ExpectedPayoffs(game, r.distribution);
  return r;
}

std::vector<std::vector<double>> PercentileTable(const Game& game,
                                                 const ParetoTable& t) {
  const int n = game.NumPlayers();
  const int m = static_cast<int>(t.profiles.size());
  std::vector<std::vector<double>> q(n, std::vector<double>(m, 0.0));
  if (m == 1) return q;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      int better = 0;
      for (int l = 0; l < m; ++l) {
        if (l != j && t.value[i][l] > t.value[i][j]) ++better;
      }
      q[i][j] = 100.0 * better / static_cast<double>(m - 1);
    }
  }
  return q;
}

double Median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

std::string ToString(OtherRegardingConcept concept_kind) {
  switch (concept_kind) {
    case OtherRegardingConcept::kRawlsian:
      return "rawlsian";
    case OtherRegardingConcept::kBenthamHarsanyi:
      return "bentham";
    case OtherRegardingConcept::kBestOff:
      return "best-off";
    case OtherRegardingConcept::kRawlsianPercentile:
      return "percentile";
    case OtherRegardingConcept::kAspiration:
      return "aspiration";
  }
  return "unknown";
}

OtherRegardingResult RawlsianEquilibrium(const Game& game) {
  const ParetoTable t = PayoffTable(game);
  const int m = static_cast<int>(t.profiles.size());
  const double z = BoundStage(t.value, m, Sense::kMaximize);
  return MakeResult(game, t, OtherRegardingConcept::kRawlsian,
                    WelfareStage(t, t.value, Relation::kGreaterEqual, z), z);
}

OtherRegardingResult BenthamHarsanyiEquilibrium(const Game& game) {
  const ParetoTable t = PayoffTable(game);
  const int m = static_cast<int>(t.profiles.size());
  LinearProgram lp(m, Sense::kMaximize, t.welfare);
  AddSimplexRow(lp, m);
  std::vector<double> x = Solve(lp);
  double welfare = 0.0;
  for (int j = 0; j < m; ++j) welfare += t.welfare[j] * x[j];
  return MakeResult(game, t, OtherRegardingConcept::kBenthamHarsanyi,
                    std::move(x), welfare);
}

OtherRegardingResult BestOffEquilibrium(const Game& game) {
  const ParetoTable t = PayoffTable(game);
  const int n = game.NumPlayers();
  const int m = static_cast<int>(t.profiles.size());

  std::vector<double> best(n);
  for (int i = 0; i < n; ++i) {
    LinearProgram lp(m, Sense::kMaximize, t.value[i]);
    AddSimplexRow(lp, m);
    const std::vector<double> x = Solve(lp);
    best[i] = 0.0;
    for (int j = 0; j < m; ++j) best[i] += t.value[i][j] * x[j];
  }
  const double y = *std::max_element(best.begin(), best.end());
  const double tie = kOptTolerance * std::max(1.0, std::abs(y));

  std::vector<double> chosen;
  double chosen_welfare = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    if (best[i] < y - tie) continue;
    const std::vector<double> x =
        WelfareStage(t, {t.value[i]}, Relation::kGreaterEqual, best[i]);
    double welfare = 0.0;
    for (int j = 0; j < m; ++j) welfare += t.welfare[j] * x[j];
    if (chosen.empty() ||
        welfare > chosen_welfare +
                      kOptTolerance * std::max(1.0, std::abs(chosen_welfare))) {
      chosen = x;
      chosen_welfare = welfare;
    }
  }
  return MakeResult(game, t, OtherRegardingConcept::kBestOff, std::move(chosen),
                    y);
}

double PercentileIndex(const Game& game, const PureProfile& profile,
                       int player) {
  if (player < 0 || player >= game.NumPlayers()) {
    throw std::out_of_range("player index out of range");
  }
  const ParetoTable t = PayoffTable(game);
  auto it = std::lower_bound(t.profiles.begin(), t.profiles.end(), profile);
  if (it == t.profiles.end() || *it != profile) {
    throw PreconditionError("percentile index needs a Pareto-optimal profile");
  }
  return PercentileTable(game, t)[player][it - t.profiles.begin()];
}

OtherRegardingResult RawlsianPercentileEquilibrium(const Game& game) {
  const ParetoTable t = PayoffTable(game);
  const int m = static_cast<int>(t.profiles.size());
  const auto q = PercentileTable(game, t);
  const double z = BoundStage(q, m, Sense::kMinimize);
  return MakeResult(game, t, OtherRegardingConcept::kRawlsianPercentile,
                    WelfareStage(t, q, Relation::kLessEqual, z), z);
}

std::vector<double> NaturalExpectationPoints(const Game& game) {
  const ParetoTable t = PayoffTable(game);
  std::vector<double> nep;
  for (const auto& row : t.value) nep.push_back(Median(row));
  return nep;
}

OtherRegardingResult AspirationEquilibrium(const Game& game) {
  const ParetoTable t = PayoffTable(game);
  const int n = game.NumPlayers();
  const int m = static_cast<int>(t.profiles.size());
  std::vector<std::vector<double>> unhappy(n, std::vector<double>(m, 0.0));
  for (int i = 0; i < n; ++i) {
    const double nep = Median(t.value[i]);
    for (int j = 0; j < m; ++j) {
      if (t.value[i][j] < nep) unhappy[i][j] = 1.0;
    }
  }
  const double z = BoundStage(unhappy, m, Sense::kMinimize);
  return MakeResult(game, t, OtherRegardingConcept::kAspiration,
                    WelfareStage(t, unhappy, Relation::kLessEqual, z), z);
}

}  // namespace kantian
