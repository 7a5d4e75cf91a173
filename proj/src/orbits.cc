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


#include "kantian/orbits.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <limits>
#include <numeric>
#include <set>

#include "kantian/errors.h"

namespace kantian {
namespace {

// Profiles with equal keys are interchangeable under the chosen mode.
std::vector<double> CompatibilityKey(const Game& game, const PureProfile& p,
                                     SymmetryMode mode) {
  std::vector<double> key;
  if (mode == SymmetryMode::kPayoffPermutation) {
    auto u = game.Payoff(p);
    key.assign(u.begin(), u.end());
  } else {
    key.assign(p.actions.begin(), p.actions.end());
  }
  std::sort(key.begin(), key.end());
  return key;
}

// classes[c] = Pareto indices sharing a key, ascending; classes ordered by
// their smallest member.
std::vector<std::vector<int>> CompatibilityClasses(
    const Game& game, const std::vector<PureProfile>& pareto,
    SymmetryMode mode) {
  if (mode == SymmetryMode::kActionPermutation && !game.HasIdenticalActions()) {
    throw PreconditionError("action-perm symmetry needs identical actions");
  }
  std::map<std::vector<double>, int> class_of_key;
  std::vector<std::vector<int>> classes;
  for (int k = 0; k < static_cast<int>(pareto.size()); ++k) {
    auto key = CompatibilityKey(game, pareto[k], mode);
    auto [it, inserted] =
        class_of_key.emplace(std::move(key), static_cast<int>(classes.size()));
    if (inserted) classes.emplace_back();
    classes[it->second].push_back(k);
  }
  return classes;
}

ProfileBijection Compose(const ProfileBijection& f, const ProfileBijection& g) {
  // (f o g)(k) = f(g(k)).
  ProfileBijection h(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) h[k] = f[g[k]];
  return h;
}

ProfileBijection Inverse(const ProfileBijection& f) {
  ProfileBijection h(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) h[f[k]] = static_cast<int>(k);
  return h;
}

OrbitDecomposition DecompositionFromPartition(
    const Game& game, std::vector<PureProfile> pareto,
    std::vector<std::vector<int>> parts) {
  std::sort(parts.begin(), parts.end());
  OrbitDecomposition result;
  result.pareto = std::move(pareto);
  const int n = game.NumPlayers();
  for (std::vector<int>& members : parts) {
    Orbit orbit;
    orbit.members = std::move(members);
    orbit.player_payoffs.assign(n, {});
    for (int k : orbit.members) {
      auto u = game.Payoff(result.pareto[k]);
      for (int i = 0; i < n; ++i) orbit.player_payoffs[i].push_back(u[i]);
    }
    for (auto& v : orbit.player_payoffs) std::sort(v.begin(), v.end());
    const bool same = std::all_of(
        orbit.player_payoffs.begin(), orbit.player_payoffs.end(),
        [&](const std::vector<double>& v) {
          return v == orbit.player_payoffs[0];
        });
    if (same) {
      const auto& v = orbit.player_payoffs[0];
      orbit.worth = std::accumulate(v.begin(), v.end(), 0.0) /
                    static_cast<double>(v.size());
    } else {
      result.pareto_symmetric = false;
    }
    result.orbits.push_back(std::move(orbit));
  }
  return result;
}

}  // namespace

std::string ToString(SymmetryMode mode) {
  return mode == SymmetryMode::kPayoffPermutation ? "payoff-perm"
                                                  : "action-perm";
}

bool IsGroup(const std::vector<ProfileBijection>& elements) {
  if (elements.empty()) return false;
  const std::size_t size = elements[0].size();
  ProfileBijection identity(size);
  std::iota(identity.begin(), identity.end(), 0);
  const std::set<ProfileBijection> members(elements.begin(), elements.end());
  if (!members.count(identity)) return false;
  for (const auto& f : elements) {
    if (!members.count(Inverse(f))) return false;
    for (const auto& g : elements) {
      if (!members.count(Compose(f, g))) return false;
    }
  }
  return true;
}

ParetoGroup ProfileGroup(const Game& game, SymmetryMode mode) {
  ParetoGroup group;
  group.pareto = ParetoOptimalProfiles(game);
  const int m = static_cast<int>(group.pareto.size());
  if (m > kMaxGroupParetoSize) {
    throw PreconditionError("Pareto set too large for group enumeration");
  }
  const auto classes = CompatibilityClasses(game, group.pareto, mode);
  std::vector<int> class_of(m);
  for (int c = 0; c < static_cast<int>(classes.size()); ++c) {
    for (int k : classes[c]) class_of[k] = c;
  }

  // Backtracking: profile k may map to any unused member of its class.
  ProfileBijection current(m, -1);
  std::vector<bool> used(m, false);
  std::vector<ProfileBijection>& out = group.elements;
  auto extend = [&](auto&& self, int k) -> void {
    if (k == m) {
      out.push_back(current);
      return;
    }
    for (int target : classes[class_of[k]]) {
      if (used[target]) continue;
      used[target] = true;
      current[k] = target;
      self(self, k + 1);
      used[target] = false;
    }
  };
  extend(extend, 0);
  std::sort(out.begin(), out.end());

  // Exhaustive closure check is quadratic in |G|; for the larger groups
  // check the transposition generators and the order instead.
  bool closed = true;
  if (out.size() <= 2048) {
    closed = IsGroup(out);
  } else {
    std::set<ProfileBijection> members(out.begin(), out.end());
    std::size_t expected = 1;
    for (const auto& cls : classes) {
      for (std::size_t f = 2; f <= cls.size(); ++f) expected *= f;
    }
    closed = members.size() == expected;
    for (const auto& cls : classes) {
      for (std::size_t a = 0; a + 1 < cls.size() && closed; ++a) {
        ProfileBijection swap(m);
        std::iota(swap.begin(), swap.end(), 0);
        std::swap(swap[cls[a]], swap[cls[a + 1]]);
        closed = members.count(swap) > 0;
      }
    }
  }
  if (!closed) throw std::logic_error("profile group is not closed");
  return group;
}

int OrbitDecomposition::OrbitOf(int k) const {
  for (int o = 0; o < static_cast<int>(orbits.size()); ++o) {
    const auto& mem = orbits[o].members;
    if (std::binary_search(mem.begin(), mem.end(), k)) return o;
  }
  throw std::out_of_range("profile index not in any orbit");
}

OrbitDecomposition ComputeOrbitDecomposition(const Game& game,
                                             const ParetoGroup& group) {
  const int m = static_cast<int>(group.pareto.size());
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& h : group.elements) {
    for (int k = 0; k < m; ++k) {
      const int a = find(k);
      const int b = find(h[k]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<int, std::vector<int>> by_root;
  for (int k = 0; k < m; ++k) by_root[find(k)].push_back(k);
  std::vector<std::vector<int>> parts;
  for (auto& [root, members] : by_root) parts.push_back(std::move(members));
  return DecompositionFromPartition(game, group.pareto, std::move(parts));
}

OrbitDecomposition ComputeOrbitDecomposition(const Game& game,
                                             SymmetryMode mode) {
  auto pareto = ParetoOptimalProfiles(game);
  auto classes = CompatibilityClasses(game, pareto, mode);
  return DecompositionFromPartition(game, std::move(pareto),
                                    std::move(classes));
}

JointDistribution ProgramEquilibriumFamily::Mix(
    std::span<const double> weights) const {
  if (weights.size() != max_worth_orbits.size()) {
    throw std::invalid_argument("one weight per max-worth orbit expected");
  }
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (!(total > 0.0) ||
      std::any_of(weights.begin(), weights.end(),
                  [](double w) { return w < 0.0; })) {
    throw std::invalid_argument("orbit weights must be non-negative");
  }
  std::vector<JointDistribution::Entry> entries;
  for (std::size_t o = 0; o < weights.size(); ++o) {
    const Orbit& orbit = decomposition.orbits[max_worth_orbits[o]];
    const double each =
        weights[o] / total / static_cast<double>(orbit.members.size());
    for (int k : orbit.members) {
      entries.emplace_back(decomposition.pareto[k], each);
    }
  }
  return JointDistribution(std::move(entries));
}

ProgramEquilibriumFamily KantianProgramEquilibria(const Game& game,
                                                  SymmetryMode mode,
                                                  double tie_tolerance) {
  ProgramEquilibriumFamily family;
  family.decomposition = ComputeOrbitDecomposition(game, mode);
  if (!family.decomposition.pareto_symmetric) {
    throw PreconditionError("game is not Pareto symmetric in " +
                            ToString(mode) + " mode");
  }
  const auto& orbits = family.decomposition.orbits;
  double best = -std::numeric_limits<double>::infinity();
  for (const Orbit& o : orbits) best = std::max(best, *o.worth);
  for (int o = 0; o < static_cast<int>(orbits.size()); ++o) {
    if (*orbits[o].worth >= best - tie_tolerance) {
      family.max_worth_orbits.push_back(o);
    }
  }
  family.worth = best;
  const std::vector<double> equal(family.max_worth_orbits.size(), 1.0);
  family.canonical = family.Mix(equal);
  return family;
}

bool InProgramEquilibriumFamily(const ProgramEquilibriumFamily& family,
                                const JointDistribution& dist,
                                double tolerance) {
  const OrbitDecomposition& dec = family.decomposition;
  std::vector<double> mass(dec.pareto.size(), 0.0);
  for (const auto& [profile, p] : dist.entries()) {
    if (p <= tolerance) continue;
    auto it = std::lower_bound(dec.pareto.begin(), dec.pareto.end(), profile);
    if (it == dec.pareto.end() || *it != profile) return false;
    mass[it - dec.pareto.begin()] = p;
  }
  for (int o = 0; o < static_cast<int>(dec.orbits.size()); ++o) {
    const auto& members = dec.orbits[o].members;
    const bool max_worth =
        std::binary_search(family.max_worth_orbits.begin(),
                           family.max_worth_orbits.end(), o);
    double lo = mass[members[0]];
    double hi = lo;
    for (int k : members) {
      lo = std::min(lo, mass[k]);
      hi = std::max(hi, mass[k]);
    }
    if (!max_worth && hi > tolerance) return false;
    if (hi - lo > tolerance) return false;
  }
  return true;
}

}  // namespace kantian
