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


#include "kantian/cli.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "json_util.h"
#include "kantian/clique.h"
#include "kantian/errors.h"
#include "kantian/game.h"
#include "kantian/greed.h"
#include "kantian/kantian.h"
#include "kantian/orbits.h"
#include "kantian/other_regarding.h"
#include "kantian/protocols.h"

namespace kantian {
namespace {

using nlohmann::json;

struct Options {
  std::string path;
  bool json_output = false;
  std::string concept_name;
  std::string greed;
  std::string mode = "payoff-perm";
  double worth_tolerance = kWorthTieTolerance;
  std::string protocol;
  int agents = 20;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  std::optional<int> k;
};

std::string Num(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

// JSON numbers cannot hold infinities; those become null.
json JsonNumber(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::string Vec(const std::vector<double>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += Num(v[i]);
  }
  return s + ")";
}

std::string Flag(std::optional<bool> b) {
  return b ? (*b ? "yes" : "no") : "unknown";
}

json FlagJson(std::optional<bool> b) { return b ? json(*b) : json(nullptr); }

SymmetryMode ParseMode(const std::string& mode) {
  return mode == "action-perm" ? SymmetryMode::kActionPermutation
                               : SymmetryMode::kPayoffPermutation;
}

void PrintDistribution(std::ostream& out, const Game& game,
                       const JointDistribution& dist) {
  for (const auto& [profile, p] : dist.entries()) {
    out << "  " << game.ProfileLabel(profile) << "  " << Num(p) << "\n";
  }
}

std::vector<std::string> ActionLabels(const Game& game,
                                      const std::vector<int>& actions) {
  std::vector<std::string> labels;
  for (int a : actions) labels.push_back(game.Actions(0)[a]);
  return labels;
}

std::string JoinLabels(const std::vector<std::string>& labels) {
  std::string s = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) s += ",";
    s += labels[i];
  }
  return s + "}";
}

json OrbitsJson(const Game& game, const OrbitDecomposition& dec) {
  json orbits = json::array();
  for (const Orbit& o : dec.orbits) {
    json profiles = json::array();
    for (int k : o.members) profiles.push_back(game.ProfileLabels(dec.pareto[k]));
    orbits.push_back({{"profiles", profiles},
                      {"worth", o.worth ? json(*o.worth) : json(nullptr)}});
  }
  return orbits;
}

void PrintOrbits(std::ostream& out, const Game& game,
                 const OrbitDecomposition& dec) {
  for (const Orbit& o : dec.orbits) {
    std::string members;
    for (int k : o.members) {
      if (!members.empty()) members += " ";
      members += game.ProfileLabel(dec.pareto[k]);
    }
    out << "  {" << members << "}  worth "
        << (o.worth ? Num(*o.worth) : std::string("n/a")) << "\n";
  }
}

json FamilyJson(const Game& game, const ProgramEquilibriumFamily& family) {
  return {{"orbits", OrbitsJson(game, family.decomposition)},
          {"max_worth_orbits", family.max_worth_orbits},
          {"worth", family.worth},
          {"distribution", DistributionJson(game, family.canonical)},
          {"expected_payoffs", ExpectedPayoffs(game, family.canonical)}};
}

// Runs `fn`; a PreconditionError turns into "n/a" with the reason.
template <typename Fn>
bool Try(Fn&& fn, std::string& reason) {
  try {
    fn();
    return true;
  } catch (const PreconditionError& e) {
    reason = e.what();
    return false;
  }
}

int RunAnalyze(const Options& opt, std::ostream& out) {
  const Game game = LoadGameFile(opt.path);
  const SymmetryMode mode = ParseMode(opt.mode);
  const GameClassification cls = Classify(game);
  const auto pareto = ParetoOptimalProfiles(game);

  std::string kantian_reason, program_reason, pom_reason, orbit_reason;
  std::vector<int> kantian;
  const bool have_kantian =
      Try([&] { kantian = PureKantianEquilibria(game); }, kantian_reason);
  OrbitDecomposition dec;
  const bool have_orbits =
      Try([&] { dec = ComputeOrbitDecomposition(game, mode); }, orbit_reason);
  ProgramEquilibriumFamily family;
  const bool have_family = Try(
      [&] { family = KantianProgramEquilibria(game, mode, opt.worth_tolerance); },
      program_reason);
  MiscoordinationReport pom;
  const bool have_pom =
      Try([&] { pom = PriceOfMiscoordination(game); }, pom_reason);

  if (opt.json_output) {
    json doc;
    doc["command"] = "analyze";
    doc["players"] = game.NumPlayers();
    doc["classification"] = {
        {"identical_actions", cls.identical_actions},
        {"standard_symmetric", FlagJson(cls.standard_symmetric)},
        {"two_player_symmetric", cls.two_player_symmetric},
        {"diagonal", cls.diagonal},
        {"coordination", cls.coordination},
        {"symmetric_coordination", cls.symmetric_coordination}};
    json p = json::array();
    for (const auto& prof : pareto) p.push_back(game.ProfileLabels(prof));
    doc["pareto_optimal"] = p;
    doc["kantian_actions"] =
        have_kantian ? json(ActionLabels(game, kantian)) : json("n/a");
    doc["symmetry_mode"] = ToString(mode);
    if (have_orbits) {
      doc["orbits"] = OrbitsJson(game, dec);
      doc["pareto_symmetric"] = dec.pareto_symmetric;
    } else {
      doc["orbits"] = "n/a";
    }
    doc["program_equilibrium"] =
        have_family ? FamilyJson(game, family) : json("n/a");
    if (have_pom) {
      doc["price_of_miscoordination"] = {
          {"optimal_value", pom.optimal_value},
          {"uniform_mix_value", pom.uniform_mix_value},
          {"pom_uniform", pom.pom_uniform},
          {"worst_symmetric_mix_value",
           pom.worst_symmetric_mix_value
               ? JsonNumber(*pom.worst_symmetric_mix_value)
               : json(nullptr)},
          {"pom_worst", pom.pom_worst ? JsonNumber(*pom.pom_worst)
                                      : json(nullptr)}};
    } else {
      doc["price_of_miscoordination"] = "n/a";
    }
    out << doc.dump(2) << "\n";
    return kExitOk;
  }

  out << "players: " << game.NumPlayers() << "\n";
  out << "identical actions: " << Flag(cls.identical_actions) << "\n"
      << "standard symmetric: " << Flag(cls.standard_symmetric) << "\n"
      << "two-player symmetric: " << Flag(cls.two_player_symmetric) << "\n"
      << "diagonal: " << Flag(cls.diagonal) << "\n"
      << "coordination: " << Flag(cls.coordination) << "\n"
      << "symmetric coordination: " << Flag(cls.symmetric_coordination)
      << "\n";
  out << "pareto optimal:";
  for (const auto& prof : pareto) out << " " << game.ProfileLabel(prof);
  out << "\n";
  out << "pure kantian actions: "
      << (have_kantian ? JoinLabels(ActionLabels(game, kantian))
                       : "n/a (" + kantian_reason + ")")
      << "\n";
  out << "orbits (" << ToString(mode) << "):";
  if (have_orbits) {
    out << "\n";
    PrintOrbits(out, game, dec);
  } else {
    out << " n/a (" << orbit_reason << ")\n";
  }
  out << "program equilibrium:";
  if (have_family) {
    out << " worth " << Num(family.worth) << "\n";
    PrintDistribution(out, game, family.canonical);
    out << "  expected payoffs "
        << Vec(ExpectedPayoffs(game, family.canonical)) << "\n";
  } else {
    out << " n/a (" << program_reason << ")\n";
  }
  out << "price of miscoordination:";
  if (have_pom) {
    out << " uniform " << Num(pom.pom_uniform);
    if (pom.pom_worst) out << ", worst " << Num(*pom.pom_worst);
    out << "\n";
  } else {
    out << " n/a (" << pom_reason << ")\n";
  }
  return kExitOk;
}

json ResultJson(const Game& game, const OtherRegardingResult& r) {
  return {{"distribution", DistributionJson(game, r.distribution)},
          {"primary_value", r.primary_value},
          {"expected_payoffs", r.expected_payoffs}};
}

int RunSolve(const Options& opt, std::ostream& out) {
  const Game game = LoadGameFile(opt.path);
  json doc;
  doc["command"] = "solve";
  doc["concept"] = opt.concept_name;
  std::ostringstream table;
  const std::string& c = opt.concept_name;

  if (c == "kantian-pure") {
    const std::vector<int> actions = PureKantianEquilibria(game);
    json payoffs = json::array();
    table << "pure kantian actions: " << JoinLabels(ActionLabels(game, actions))
          << "\n";
    for (int a : actions) {
      auto u = game.Payoff(game.Diagonal(a));
      payoffs.push_back(std::vector<double>(u.begin(), u.end()));
      table << "  " << game.ProfileLabel(game.Diagonal(a)) << "  "
            << Vec({u.begin(), u.end()}) << "\n";
    }
    doc["kantian_actions"] = ActionLabels(game, actions);
    doc["diagonal_payoffs"] = payoffs;
  } else if (c == "kantian-mixed") {
    const QpResult r = MixedKantianTwoPlayerSymmetric(game);
    doc["strategy"] = r.maximizer.probs();
    doc["support"] = ActionLabels(game, r.support);
    doc["value"] = r.value;
    doc["kkt_residual"] = r.kkt_residual;
    table << "mixed kantian value: " << Num(r.value) << "\n";
    for (int a = 0; a < r.maximizer.size(); ++a) {
      if (r.maximizer[a] > 0.0) {
        table << "  " << game.Actions(0)[a] << "  " << Num(r.maximizer[a])
              << "\n";
      }
    }
    table << "kkt residual: " << Num(r.kkt_residual) << "\n";
  } else if (c == "program") {
    const ProgramEquilibriumFamily family =
        KantianProgramEquilibria(game, ParseMode(opt.mode), opt.worth_tolerance);
    doc.update(FamilyJson(game, family));
    doc["symmetry_mode"] = opt.mode;
    table << "orbits (" << opt.mode << "):\n";
    PrintOrbits(table, game, family.decomposition);
    table << "max worth " << Num(family.worth) << " on " 
          << family.max_worth_orbits.size()
          << " orbit(s); equal-weight member:\n";
    PrintDistribution(table, game, family.canonical);
    table << "expected payoffs "
          << Vec(ExpectedPayoffs(game, family.canonical)) << "\n";
  } else if (c == "greedy-nash") {
    const std::vector<double> indices = ParseGreedIndices(opt.greed);
    if (static_cast<int>(indices.size()) != game.NumPlayers()) {
      throw ParseError(ParseErrorKind::kInvalidValue,
                       "--greed needs one index per player");
    }
    const GreedProfile greed = GreedProfile::FromGreedIndices(indices);
    const PureProfile play = GreedyPlay(game, greed);
    const Game perceived = PerceivedGame(game, greed);
    const auto nash = PureNashEquilibria(perceived);
    json greed_json = json::array();
    json lambda_json = json::array();
    for (int i = 0; i < game.NumPlayers(); ++i) {
      greed_json.push_back(JsonNumber(indices[i]));
      lambda_json.push_back(JsonNumber(greed.lambda[i]));
    }
    json nash_json = json::array();
    for (const auto& p : nash) nash_json.push_back(game.ProfileLabels(p));
    doc["greed"] = greed_json;
    doc["lambda"] = lambda_json;
    doc["greedy_play"] = game.ProfileLabels(play);
    auto u = game.Payoff(play);
    doc["expected_payoffs"] = std::vector<double>(u.begin(), u.end());
    doc["perceived_nash"] = nash_json;
    table << "greedy play: " << game.ProfileLabel(play) << "  "
          << Vec({u.begin(), u.end()}) << "\n";
    table << "perceived-game pure nash:";
    for (const auto& p : nash) table << " " << game.ProfileLabel(p);
    table << "\n";
  } else {
    OtherRegardingResult r;
    if (c == "rawlsian") {
      r = RawlsianEquilibrium(game);
    } else if (c == "bentham") {
      r = BenthamHarsanyiEquilibrium(game);
    } else if (c == "best-off") {
      r = BestOffEquilibrium(game);
    } else if (c == "percentile") {
      r = RawlsianPercentileEquilibrium(game);
    } else {
      r = AspirationEquilibrium(game);
    }
    doc.update(ResultJson(game, r));
    if (c == "aspiration") {
      doc["natural_expectation_points"] = NaturalExpectationPoints(game);
    }
    table << c << " equilibrium, primary value " << Num(r.primary_value)
          << ":\n";
    PrintDistribution(table, game, r.distribution);
    table << "expected payoffs " << Vec(r.expected_payoffs) << "\n";
  }

  if (opt.json_output) {
    out << doc.dump(2) << "\n";
  } else {
    out << table.str();
  }
  return kExitOk;
}

int RunSimulate(const Options& opt, std::ostream& out) {
  SimulationReport r;
  std::optional<PlatoniaMixedResult> mixed;
  if (opt.protocol == "bos") {
    r = SimulateBos(opt.trials, opt.seed);
  } else if (opt.protocol == "anticoord") {
    r = SimulateAnticoord(opt.trials, opt.seed);
  } else {
    r = SimulatePlatonia(opt.agents, opt.trials, opt.seed);
    mixed = PlatoniaMixedKantian(opt.agents);
  }
  auto label = [&](const PureProfile& p) {
    std::vector<std::string> l;
    for (int i = 0; i < p.size(); ++i) l.push_back(r.actions[i][p[i]]);
    return l;
  };
  auto dist_json = [&](const JointDistribution& d) {
    json a = json::array();
    for (const auto& [p, q] : d.entries()) {
      a.push_back({{"profile", label(p)}, {"probability", q}});
    }
    return a;
  };
  if (opt.json_output) {
    json doc = {{"command", "simulate"},
                {"protocol", r.protocol},
                {"trials", r.trials},
                {"seed", r.seed},
                {"empirical", dist_json(r.empirical)},
                {"theoretical", dist_json(r.theoretical)},
                {"mean_payoffs", r.mean_payoffs},
                {"max_abs_freq_error", r.max_abs_freq_error},
                {"support_violations", r.support_violations}};
    if (mixed) {
      doc["mixed_kantian"] = {{"submit_probability", mixed->submit_probability},
                              {"value", mixed->value}};
    }
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  auto row = [&](const std::vector<std::string>& l) {
    std::string s = "(";
    for (std::size_t i = 0; i < l.size(); ++i) s += (i ? "," : "") + l[i];
    return s + ")";
  };
  out << "protocol " << r.protocol << ", " << r.trials << " trials, seed "
      << r.seed << "\n";
  out << "profile  empirical  theoretical\n";
  std::vector<PureProfile> profiles = r.empirical.Support();
  for (const auto& p : r.theoretical.Support()) {
    if (!std::count(profiles.begin(), profiles.end(), p)) profiles.push_back(p);
  }
  std::sort(profiles.begin(), profiles.end());
  for (const auto& p : profiles) {
    out << "  " << row(label(p)) << "  " << Num(r.empirical.Probability(p))
        << "  " << Num(r.theoretical.Probability(p)) << "\n";
  }
  out << "mean payoffs " << Vec(r.mean_payoffs) << "\n";
  out << "max |freq error| " << Num(r.max_abs_freq_error) << "\n";
  out << "support violations " << r.support_violations << "\n";
  if (mixed) {
    out << "mixed kantian: submit with p = " << Num(mixed->submit_probability)
        << ", value " << Num(mixed->value) << "\n";
  }
  return kExitOk;
}

int RunClique(const Options& opt, std::ostream& out) {
  const Graph graph = LoadGraphFile(opt.path);
  const double o = SolveStandardQp(graph.Adjacency()).value;
  const double implied = ImpliedCliqueSize(o);
  std::optional<int> omega;
  if (graph.vertex_count <= kMaxOracleVertices) {
    omega = MaxCliqueBruteForce(graph);
  }
  std::optional<bool> decision;
  if (opt.k) {
    if (*opt.k < 1) {
      throw ParseError(ParseErrorKind::kInvalidValue, "--k must be positive");
    }
    const double r = (*opt.k - 1.0) / *opt.k;
    decision = DecideMixedKantian(GameFromGraph(graph), r);
  }
  if (opt.json_output) {
    json doc = {{"command", "clique"},
                {"vertices", graph.vertex_count},
                {"qp_value", o},
                {"implied_clique", implied},
                {"omega", omega ? json(*omega) : json(nullptr)},
                {"pass", omega ? json(std::abs(implied - *omega) < 1e-4)
                               : json(nullptr)}};
    if (opt.k) {
      doc["k"] = *opt.k;
      doc["has_clique_of_size_k"] = *decision;
    }
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  out << "qp value o = " << Num(o) << "\n";
  out << "1/(1-o) = " << Num(implied) << "\n";
  if (omega) {
    out << "max clique (brute force) = " << *omega << "\n";
    out << (std::abs(implied - *omega) < 1e-4 ? "pass" : "FAIL") << "\n";
  } else {
    out << "max clique (brute force) = n/a (more than "
        << kMaxOracleVertices << " vertices)\n";
  }
  if (opt.k) {
    out << "clique of size " << *opt.k << ": " << (*decision ? "yes" : "no")
        << "\n";
  }
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Kantian and other-regarding equilibria of normal-form games",
               "kantian"};
  app.require_subcommand(1);
  Options opt;
  const std::vector<std::string> concepts = {
      "kantian-pure", "kantian-mixed", "program",    "rawlsian",
      "bentham",      "best-off",      "percentile", "aspiration",
      "greedy-nash"};
  const std::vector<std::string> modes = {"payoff-perm", "action-perm"};

  CLI::App* analyze = app.add_subcommand("analyze", "Summarize a game");
  analyze->add_option("game", opt.path, "Game JSON file")->required();
  analyze->add_flag("--json", opt.json_output, "JSON output");
  analyze->add_option("--mode", opt.mode, "Symmetry mode")
      ->check(CLI::IsMember(modes));
  analyze->add_option("--tol", opt.worth_tolerance, "Orbit worth tie tolerance")
      ->check(CLI::NonNegativeNumber);

  CLI::App* solve = app.add_subcommand("solve", "Compute one equilibrium");
  solve->add_option("game", opt.path, "Game JSON file")->required();
  solve->add_option("--concept", opt.concept_name, "Solution concept")
      ->required()
      ->check(CLI::IsMember(concepts));
  solve->add_option("--greed", opt.greed, "Greed indices g1,g2,... (inf ok)");
  solve->add_flag("--json", opt.json_output, "JSON output");
  solve->add_option("--mode", opt.mode, "Symmetry mode for 'program'")
      ->check(CLI::IsMember(modes));
  solve->add_option("--tol", opt.worth_tolerance, "Orbit worth tie tolerance")
      ->check(CLI::NonNegativeNumber);

  CLI::App* simulate = app.add_subcommand("simulate", "Run a protocol");
  simulate->add_option("--protocol", opt.protocol, "bos, anticoord or platonia")
      ->required()
      ->check(CLI::IsMember({"bos", "anticoord", "platonia"}));
  simulate->add_option("--n", opt.agents, "Platonia agents")
      ->check(CLI::Range(2, kMaxPlatoniaAgents));
  simulate->add_option("--trials", opt.trials, "Number of trials")
      ->required()
      ->check(CLI::PositiveNumber);
  simulate->add_option("--seed", opt.seed, "RNG seed")->required();
  simulate->add_flag("--json", opt.json_output, "JSON output");

  CLI::App* clique = app.add_subcommand("clique", "Motzkin-Straus check");
  clique->add_option("graph", opt.path, "Graph JSON file")->required();
  clique->add_option("--k", opt.k, "Decide whether a k-clique exists");
  clique->add_flag("--json", opt.json_output, "JSON output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (*analyze) return RunAnalyze(opt, out);
    if (*solve) {
      if (opt.concept_name == "greedy-nash" && opt.greed.empty()) {
        err << "error: --concept greedy-nash requires --greed\n";
        return kExitInputError;
      }
      return RunSolve(opt, out);
    }
    if (*simulate) return RunSimulate(opt, out);
    return RunClique(opt, out);
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace kantian
