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

// Internal JSON helpers shared by the loaders and the CLI.

#ifndef KANTIAN_SRC_JSON_UTIL_H_
#define KANTIAN_SRC_JSON_UTIL_H_

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "kantian/game.h"

namespace kantian {

// "C, D" -> {"C", "D"}; surrounding spaces are trimmed.
std::vector<std::string> SplitProfileKey(std::string_view key);
std::string JoinProfileKey(const std::vector<std::string>& labels);

// Throws ParseError(kMalformed) on syntax errors or unreadable files.
nlohmann::json ParseJsonText(std::string_view text);
std::string ReadTextFile(const std::string& path);

nlohmann::json DistributionJson(const Game& game, const JointDistribution& dist);

}  // namespace kantian

#endif  // KANTIAN_SRC_JSON_UTIL_H_
