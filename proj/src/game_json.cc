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
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "kantian/errors.h"
#include "kantian/game.h"
#include "json_util.h"

namespace kantian {

using nlohmann::json;

std::vector<std::string> SplitProfileKey(std::string_view key) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = key.find(',', start);
    std::string_view part = key.substr(
        start, comma == std::string_view::npos ? std::string_view::npos
                                               : comma - start);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    parts.emplace_back(part);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

std::string JoinProfileKey(const std::vector<std::string>& labels) {
  std::string key;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0) key += ",";
    key += labels[i];
  }
  return key;
}

json ParseJsonText(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(ParseErrorKind::kMalformed,
                     std::string("invalid JSON: ") + e.what());
  }
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError(ParseErrorKind::kMalformed, "cannot read file " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

namespace {

std::vector<std::string> ParseActionList(const json& list) {
  if (!list.is_array() || list.empty()) {
    throw ParseError(ParseErrorKind::kMalformed,
                     "action list must be a non-empty array of strings");
  }
  std::vector<std::string> labels;
  std::set<std::string> seen;
  for (const json& item : list) {
    if (!item.is_string()) {
      throw ParseError(ParseErrorKind::kMalformed, "action labels are strings");
    }
    std::string label = item.get<std::string>();
    if (label.empty() || label.find(',') != std::string::npos) {
      throw ParseError(ParseErrorKind::kMalformed,
                       "action label must be non-empty and comma-free: '" +
                           label + "'");
    }
    if (!seen.insert(label).second) {
      throw ParseError(ParseErrorKind::kDuplicateAction,
                       "duplicate action label '" + label + "'");
    }
    labels.push_back(std::move(label));
  }
  return labels;
}

}  // namespace

Game LoadGame(std::string_view json_text) {
  const json doc = ParseJsonText(json_text);
  if (!doc.is_object() || !doc.contains("players") ||
      !doc.contains("actions") || !doc.contains("payoffs")) {
    throw ParseError(ParseErrorKind::kMalformed,
                     "game needs 'players', 'actions' and 'payoffs'");
  }
  if (!doc["players"].is_number_integer() || doc["players"].get<int>() < 1) {
    throw ParseError(ParseErrorKind::kInvalidValue,
                     "'players' must be a positive integer");
  }
  const int n = doc["players"].get<int>();

  const json& actions_doc = doc["actions"];
  std::vector<std::vector<std::string>> actions;
  if (actions_doc.is_array() && !actions_doc.empty() &&
      actions_doc.front().is_array()) {
    if (static_cast<int>(actions_doc.size()) != n) {
      throw ParseError(ParseErrorKind::kMalformed,
                       "'actions' must list one action set per player");
    }
    for (const json& list : actions_doc) actions.push_back(ParseActionList(list));
  } else {
    actions.assign(n, ParseActionList(actions_doc));
  }

  const json& payoffs_doc = doc["payoffs"];
  if (!payoffs_doc.is_object()) {
    throw ParseError(ParseErrorKind::kMalformed, "'payoffs' must be an object");
  }

  std::int64_t num_profiles = 1;
  for (const auto& a : actions) {
    num_profiles *= static_cast<std::int64_t>(a.size());
    if (num_profiles > (std::int64_t{1} << 26)) {
      throw ParseError(ParseErrorKind::kInvalidValue, "game too large");
    }
  }
  std::vector<double> payoffs(num_profiles * n, 0.0);
  std::vector<bool> filled(num_profiles, false);

  for (const auto& [key, value] : payoffs_doc.items()) {
    std::vector<std::string> labels = SplitProfileKey(key);
    if (static_cast<int>(labels.size()) != n) {
      throw ParseError(ParseErrorKind::kUnknownAction,
                       "profile key '" + key + "' does not name " +
                           std::to_string(n) + " actions");
    }
    std::int64_t index = 0;
    for (int p = 0; p < n; ++p) {
      auto it = std::find(actions[p].begin(), actions[p].end(), labels[p]);
      if (it == actions[p].end()) {
        throw ParseError(ParseErrorKind::kUnknownAction,
                         "unknown action '" + labels[p] + "' for player " +
                             std::to_string(p + 1) + " in key '" + key + "'");
      }
      index = index * static_cast<std::int64_t>(actions[p].size()) +
              (it - actions[p].begin());
    }
    if (!value.is_array() || static_cast<int>(value.size()) != n) {
      throw ParseError(ParseErrorKind::kPayoffLength,
                       "payoff vector for '" + key + "' must have " +
                           std::to_string(n) + " entries");
    }
    if (filled[index]) {
      throw ParseError(ParseErrorKind::kMalformed,
                       "profile '" + key + "' given twice");
    }
    for (int p = 0; p < n; ++p) {
      if (!value[p].is_number()) {
        throw ParseError(ParseErrorKind::kMalformed,
                         "payoffs for '" + key + "' must be numbers");
      }
      payoffs[index * n + p] = value[p].get<double>();
    }
    filled[index] = true;
  }

  Game game(std::move(actions), std::move(payoffs));
  for (std::int64_t index = 0; index < num_profiles; ++index) {
    if (!filled[index]) {
      throw ParseError(ParseErrorKind::kMissingProfile,
                       "missing payoff for profile " +
                           game.ProfileLabel(game.ProfileAt(index)));
    }
  }
  return game;
}

Game LoadGameFile(const std::string& path) {
  return LoadGame(ReadTextFile(path));
}

std::string GameToJson(const Game& game) {
  json doc;
  doc["players"] = game.NumPlayers();
  json actions = json::array();
  for (int p = 0; p < game.NumPlayers(); ++p) actions.push_back(game.Actions(p));
  doc["actions"] = actions;
  json payoffs = json::object();
  game.ForEachProfile([&](const PureProfile& a, std::span<const double> u) {
    payoffs[JoinProfileKey(game.ProfileLabels(a))] =
        std::vector<double>(u.begin(), u.end());
  });
  doc["payoffs"] = payoffs;
  return doc.dump(2);
}

JointDistribution LoadDistribution(const Game& game,
                                   std::string_view json_text) {
  const json doc = ParseJsonText(json_text);
  if (!doc.is_array()) {
    throw ParseError(ParseErrorKind::kMalformed,
                     "distribution must be an array of entries");
  }
  std::vector<JointDistribution::Entry> entries;
  for (const json& item : doc) {
    if (!item.is_object() || !item.contains("profile") ||
        !item.contains("probability") || !item["profile"].is_array() ||
        !item["probability"].is_number()) {
      throw ParseError(ParseErrorKind::kMalformed,
                       "entries need 'profile' and 'probability'");
    }
    const json& labels = item["profile"];
    if (static_cast<int>(labels.size()) != game.NumPlayers()) {
      throw ParseError(ParseErrorKind::kMalformed, "profile has wrong length");
    }
    PureProfile profile;
    for (int p = 0; p < game.NumPlayers(); ++p) {
      auto index = labels[p].is_string()
                       ? game.ActionIndex(p, labels[p].get<std::string>())
                       : std::nullopt;
      if (!index) {
        throw ParseError(ParseErrorKind::kUnknownAction,
                         "unknown action in distribution profile");
      }
      profile.actions.push_back(*index);
    }
    entries.emplace_back(std::move(profile), item["probability"].get<double>());
  }
  try {
    return JointDistribution(std::move(entries));
  } catch (const std::invalid_argument& e) {
    throw ParseError(ParseErrorKind::kInvalidValue, e.what());
  }
}

json DistributionJson(const Game& game, const JointDistribution& dist) {
  json out = json::array();
  for (const auto& [profile, prob] : dist.entries()) {
    out.push_back({{"profile", game.ProfileLabels(profile)},
                   {"probability", prob}});
  }
  return out;
}

std::string DistributionToJson(const Game& game, const JointDistribution& dist) {
  return DistributionJson(game, dist).dump(2);
}

}  // namespace kantian
