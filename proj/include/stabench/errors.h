// Copyright 2026 The stabench Authors
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

#ifndef STABENCH_ERRORS_H
#define STABENCH_ERRORS_H

#include <stdexcept>
#include <string>

namespace stabench {

/// Malformed text input. `line` and `column` are 1-based; 0 means unknown.
class ParseError : public std::invalid_argument {
   public:
    ParseError(const std::string &message, size_t line, size_t column);
    size_t line;
    size_t column;
};

/// A circuit measured a qubit whose outcome is not determined by the state.
class NondeterministicMeasurement : public std::runtime_error {
   public:
    NondeterministicMeasurement(const std::string &message, size_t instruction);
    size_t instruction;
};

/// A circuit violates a structural rule (e.g. measures a data qubit).
class StructuralError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// The problem itself is malformed (e.g. non-commuting generators).
class MalformedProblem : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// The candidate does not prepare the code state.
class InvalidCandidate : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Cooperative cancellation of long-running oracle work.
class Cancelled : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace stabench

#endif
