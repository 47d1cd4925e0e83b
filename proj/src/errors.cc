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

#include "stabench/errors.h"

namespace stabench {

static std::string with_position(const std::string &message, size_t line, size_t column) {
    if (line == 0 && column == 0) {
        return message;
    }
    std::string out = message + " (";
    if (line != 0) {
        out += "line " + std::to_string(line);
    }
    if (column != 0) {
        if (line != 0) {
            out += ", ";
        }
        out += "column " + std::to_string(column);
    }
    return out + ")";
}

ParseError::ParseError(const std::string &message, size_t line, size_t column)
    : std::invalid_argument(with_position(message, line, column)), line(line), column(column) {
}

NondeterministicMeasurement::NondeterministicMeasurement(const std::string &message, size_t instruction)
    : std::runtime_error(message), instruction(instruction) {
}

}  // namespace stabench
