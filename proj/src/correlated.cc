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
#include <map>
#include <numeric>
#include <string>

#include "json.hpp"
#include "json_util.h"
#include "kantian/errors.h"
#include "kantian/orbits.h"

namespace kantian {
namespace {

constexpr double kExchangeTolerance = 1e-12;
constexpr double kDeviationTolerance = 1e-9;

// Signal vectors of n players over an alphabet of s symbols, indexed in mixed
// radix with player 0 most significant.
class SignalSpace {
 public:
  SignalSpace(int players, int symbols) : n_(players), s_(symbols) {
    size_ = 1;
    for (int i = 0; i < n_; ++i) {
      size_ *= s_;
      if (size_ > kMaxSignalProfiles) {
        throw PreconditionError("signal space exceeds 4096 vectors");
      }
    }
  }

  int size() const { return size_; }

  std::vector<int> Decode(int index) const {
    std::vector<int> w(n_);
    for (int i = n_ - 1; i >= 0; --i) {
      w[i] = index % s_;
      index /= s_;
    }
    return w;
  }

  int Encode(const std::vector<int>& w) const {
    int index = 0;
    for (int x : w) index = index * s_ + x;
    return index;
  }

  // (perm . w)_{perm[j]} = w_j.
  int Permute(int index, const std::vector<int>& perm) const {
    const std::vector<int> w = Decode(index);
    std::vector<int> image(n_);
    for (int j = 0; j < n_; ++j) image[perm[j]] = w[j];
    return Encode(image);
  }

 private:
  int n_;
  int s_;
  int size_ = 1;
};

std::vector<std::vector<int>> AllPermutations(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

int SignalIndex(const SignalSpace& space,
                const std::map<std::string, int>& symbol,
                const std::string& key, int players) {
  const std::vector<std::string> labels = SplitProfileKey(key);
  if (static_cast<int>(labels.size()) != players) {
    throw ParseError(ParseErrorKind::kMalformed,
                     "signal key '" + key + "' has the wrong length");
  }
  std::vector<int> w;
  for (const std::string& l : labels) {
    auto it = symbol.find(l);
    if (it == symbol.end()) {
      throw ParseError(ParseErrorKind::kUnknownAction,
                       "unknown signal '" + l + "'");
    }
    w.push_back(it->second);
  }
  return space.Encode(w);
}

}  // namespace

CorrelatedSymmetricSpec LoadCorrelatedSpec(const Game& game,
                                           std::string_view json_text) {
  const nlohmann::json doc = ParseJsonText(json_text);
  const int n = game.NumPlayers();
  for (const char* field : {"omega", "xi", "partitions", "strategies"}) {
    if (!doc.is_object() || !doc.contains(field)) {
      throw ParseError(ParseErrorKind::kMalformed,
                       std::string("missing field \"") + field + "\"");
    }
  }

  CorrelatedSymmetricSpec spec;
  std::map<std::string, int> symbol;
  if (!doc["omega"].is_array() || doc["omega"].empty()) {
    throw ParseError(ParseErrorKind::kMalformed, "\"omega\" must be a list");
  }
  for (const auto& l : doc["omega"]) {
    if (!l.is_string()) {
      throw ParseError(ParseErrorKind::kMalformed, "signals must be strings");
    }
    const std::string label = l.get<std::string>();
    if (label.empty() || label.find(',') != std::string::npos) {
      throw ParseError(ParseErrorKind::kInvalidValue,
                       "signal labels must be non-empty and comma-free");
    }
    if (!symbol.emplace(label, static_cast<int>(spec.omega.size())).second) {
      throw ParseError(ParseErrorKind::kDuplicateAction,
                       "duplicate signal '" + label + "'");
    }
    spec.omega.push_back(label);
  }
  const SignalSpace space(n, static_cast<int>(spec.omega.size()));

  spec.xi.assign(space.size(), 0.0);
  if (!doc["xi"].is_object()) {
    throw ParseError(ParseErrorKind::kMalformed, "\"xi\" must be an object");
  }
  std::vector<bool> seen(space.size(), false);
  double total = 0.0;
  for (const auto& [key, value] : doc["xi"].items()) {
    const int w = SignalIndex(space, symbol, key, n);
    if (seen[w]) {
      throw ParseError(ParseErrorKind::kDuplicateAction,
                       "duplicate xi entry '" + key + "'");
    }
    seen[w] = true;
    if (!value.is_number() || !(value.get<double>() >= 0.0)) {
      throw ParseError(ParseErrorKind::kInvalidValue,
                       "xi entries must be non-negative numbers");
    }
    spec.xi[w] = value.get<double>();
    total += spec.xi[w];
  }
  if (std::abs(total - 1.0) > kProbTolerance) {
    throw ParseError(ParseErrorKind::kInvalidValue, "xi does not sum to 1");
  }

  const auto& parts = doc["partitions"];
  const auto& strategies = doc["strategies"];
  if (!parts.is_array() || static_cast<int>(parts.size()) != n ||
      !strategies.is_array() || static_cast<int>(strategies.size()) != n) {
    throw ParseError(ParseErrorKind::kMalformed,
                     "need one partition and one strategy per player");
  }
  spec.partitions.resize(n);
  spec.strategies.resize(n);
  for (int i = 0; i < n; ++i) {
    if (!parts[i].is_array()) {
      throw ParseError(ParseErrorKind::kMalformed, "partition must be a list");
    }
    std::vector<int> covered(space.size(), 0);
    for (const auto& cls : parts[i]) {
      if (!cls.is_array() || cls.empty()) {
        throw ParseError(ParseErrorKind::kMalformed,
                         "partition classes must be non-empty lists");
      }
      std::vector<int> members;
      for (const auto& key : cls) {
        if (!key.is_string()) {
          throw ParseError(ParseErrorKind::kMalformed,
                           "signal vectors must be strings");
        }
        const int w = SignalIndex(space, symbol, key.get<std::string>(), n);
        ++covered[w];
        members.push_back(w);
      }
      std::sort(members.begin(), members.end());
      spec.partitions[i].push_back(std::move(members));
    }
    if (std::any_of(covered.begin(), covered.end(),
                    [](int c) { return c != 1; })) {
      throw ParseError(ParseErrorKind::kInvalidValue,
                       "partition of player " + std::to_string(i) +
                           " does not cover every signal vector exactly once");
    }

    const int classes = static_cast<int>(spec.partitions[i].size());
    if (!strategies[i].is_object()) {
      throw ParseError(ParseErrorKind::kMalformed,
                       "strategy must be an object");
    }
    spec.strategies[i].assign(classes, -1);
    for (const auto& [key, value] : strategies[i].items()) {
      int t = -1;
      if (key.rfind("class", 0) == 0 && key.size() > 5 &&
          std::all_of(key.begin() + 5, key.end(),
                      [](char c) { return c >= '0' && c <= '9'; })) {
        t = std::stoi(key.substr(5));
      }
      if (t < 0 || t >= classes) {
        throw ParseError(ParseErrorKind::kMalformed,
                         "unknown strategy key '" + key + "'");
      }
      if (!value.is_string()) {
        throw ParseError(ParseErrorKind::kMalformed,
                         "strategy values must be action labels");
      }
      auto a = game.ActionIndex(i, value.get<std::string>());
      if (!a) {
        throw ParseError(ParseErrorKind::kUnknownAction,
                         "unknown action '" + value.get<std::string>() + "'");
      }
      spec.strategies[i][t] = *a;
    }
    if (std::count(spec.strategies[i].begin(), spec.strategies[i].end(),
                   -1) > 0) {
      throw ParseError(ParseErrorKind::kMissingProfile,
                       "strategy of player " + std::to_string(i) +
                           " misses a class");
    }
  }
  return spec;
}

CorrelatedCheckReport CheckCorrelatedSymmetricEquilibrium(
    const Game& game, const CorrelatedSymmetricSpec& spec) {
  const int n = game.NumPlayers();
  if (Classify(game).standard_symmetric != true) {
    throw PreconditionError("correlated check needs a standard symmetric game");
  }
  const SignalSpace space(n, static_cast<int>(spec.omega.size()));
  if (static_cast<int>(spec.xi.size()) != space.size() ||
      static_cast<int>(spec.partitions.size()) != n ||
      static_cast<int>(spec.strategies.size()) != n) {
    throw std::invalid_argument("spec does not match the game");
  }
  const int k = game.NumActions(0);
  const auto perms = AllPermutations(n);

  // class_of[i][w]: player i's class containing signal vector w.
  std::vector<std::vector<int>> class_of(n, std::vector<int>(space.size(), -1));
  std::vector<int> node_offset(n + 1, 0);
  for (int i = 0; i < n; ++i) {
    const auto& parts = spec.partitions[i];
    for (int t = 0; t < static_cast<int>(parts.size()); ++t) {
      for (int w : parts[t]) class_of[i][w] = t;
    }
    node_offset[i + 1] = node_offset[i] + static_cast<int>(parts.size());
  }

  CorrelatedCheckReport report;

  report.xi_exchangeable = true;
  for (const auto& perm : perms) {
    for (int w = 0; w < space.size() && report.xi_exchangeable; ++w) {
      if (std::abs(spec.xi[w] - spec.xi[space.Permute(w, perm)]) >
          kExchangeTolerance) {
        report.xi_exchangeable = false;
      }
    }
  }

  // Union-find over (player, class) nodes: a symmetric deviation must use
  // one action on a node and on all of its images.
  std::vector<int> parent(node_offset[n]);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  report.partitions_symmetric = true;
  for (const auto& perm : perms) {
    for (int i = 0; i < n; ++i) {
      const int j = perm[i];
      const auto& parts = spec.partitions[i];
      for (int t = 0; t < static_cast<int>(parts.size()); ++t) {
        std::vector<int> image;
        for (int w : parts[t]) image.push_back(space.Permute(w, perm));
        std::sort(image.begin(), image.end());
        const int target = class_of[j][image[0]];
        if (spec.partitions[j][target] != image) {
          report.partitions_symmetric = false;
          continue;
        }
        if (spec.strategies[i][t] != spec.strategies[j][target]) {
          report.partitions_symmetric = false;
        }
        const int a = find(node_offset[i] + t);
        const int b = find(node_offset[j] + target);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  report.symmetry_ok = report.xi_exchangeable && report.partitions_symmetric;

  std::vector<int> family_of(node_offset[n]);
  std::map<int, int> family_index;
  for (int v = 0; v < node_offset[n]; ++v) {
    auto [it, inserted] =
        family_index.emplace(find(v), static_cast<int>(family_index.size()));
    family_of[v] = it->second;
  }
  const int families = static_cast<int>(family_index.size());
  long long candidates = 1;
  for (int f = 0; f < families; ++f) {
    candidates *= k;
    if (candidates > kMaxDeviationFamilies) {
      throw PreconditionError("too many symmetric deviation families");
    }
  }

  // Only signal vectors with positive mass matter.
  std::vector<int> live;
  for (int w = 0; w < space.size(); ++w) {
    if (spec.xi[w] > 0.0) live.push_back(w);
  }
  // family_at[l][i]: family of player i's class at the l-th live signal.
  std::vector<std::vector<int>> family_at(live.size(), std::vector<int>(n));
  std::map<PureProfile, double> induced;
  std::vector<double> base(n, 0.0);
  for (std::size_t l = 0; l < live.size(); ++l) {
    const int w = live[l];
    PureProfile a{std::vector<int>(n)};
    for (int i = 0; i < n; ++i) {
      const int t = class_of[i][w];
      a.actions[i] = spec.strategies[i][t];
      family_at[l][i] = family_of[node_offset[i] + t];
    }
    induced[a] += spec.xi[w];
    auto u = game.Payoff(a);
    for (int i = 0; i < n; ++i) base[i] += spec.xi[w] * u[i];
  }

  double scale = 1.0;
  for (std::int64_t p = 0; p < game.NumProfiles(); ++p) {
    for (double v : game.PayoffAt(p)) scale = std::max(scale, std::abs(v));
  }

  report.no_profitable_deviation = true;
  std::vector<int> choice(families, 0);
  std::vector<double> value(n);
  PureProfile a{std::vector<int>(n)};
  for (long long c = 0; c < candidates && report.no_profitable_deviation;
       ++c) {
    std::fill(value.begin(), value.end(), 0.0);
    for (std::size_t l = 0; l < live.size(); ++l) {
      for (int i = 0; i < n; ++i) a.actions[i] = choice[family_at[l][i]];
      auto u = game.Payoff(a);
      for (int i = 0; i < n; ++i) value[i] += spec.xi[live[l]] * u[i];
    }
    for (int i = 0; i < n; ++i) {
      if (value[i] > base[i] + kDeviationTolerance * scale) {
        report.no_profitable_deviation = false;
      }
    }
    ++report.deviation_families_checked;
    for (int f = 0; f < families; ++f) {
      if (++choice[f] < k) break;
      choice[f] = 0;
    }
  }

  std::vector<JointDistribution::Entry> entries(induced.begin(),
                                                induced.end());
  const double mass = std::accumulate(
      entries.begin(), entries.end(), 0.0,
      [](double s, const auto& e) { return s + e.second; });
  for (auto& e : entries) e.second /= mass;
  report.induced = JointDistribution(std::move(entries));
  report.expected_payoffs = base;

  try {
    const ProgramEquilibriumFamily family =
        KantianProgramEquilibria(game, SymmetryMode::kActionPermutation);
    report.is_kantian_program_eq =
        InProgramEquilibriumFamily(family, report.induced);
  } catch (const PreconditionError&) {
    report.is_kantian_program_eq = false;
  }
  return report;
}

}  // namespace kantian
