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

#ifndef KANTIAN_ERRORS_H_
#define KANTIAN_ERRORS_H_

#include <stdexcept>
#include <string>

namespace kantian {

enum class ParseErrorKind {
  kMalformed,
  kMissingProfile,
  kPayoffLength,
  kDuplicateAction,
  kUnknownAction,
  kInvalidValue,
};

// Raised when an input document (game, graph, signal spec, distribution)
// cannot be turned into a valid domain object.
class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ParseErrorKind kind() const { return kind_; }

 private:
  ParseErrorKind kind_;
};

// Raised when a solver is called on a game that does not satisfy the
// structural requirements of the concept (symmetry, identical actions, size
// limits, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace kantian

#endif  // KANTIAN_ERRORS_H_
