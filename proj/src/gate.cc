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

#include "stabench/gate.h"

#include <array>
#include <cctype>
#include <stdexcept>
#include <string>

namespace stabench {

namespace {

constexpr std::array<std::string_view, NUM_GATE_KINDS> NAMES = {
    "I", "X", "Y", "Z", "H", "S", "S_DAG", "CX", "CZ", "SWAP", "R", "M", "TICK"};

}  // namespace

std::string_view gate_name(GateKind kind) {
    return NAMES[static_cast<size_t>(kind)];
}

std::optional<GateKind> gate_from_name(std::string_view name) {
    std::string upper;
    upper.reserve(name.size());
    for (char c : name) {
        upper.push_back((char)std::toupper((unsigned char)c));
    }
    for (size_t k = 0; k < NAMES.size(); k++) {
        if (upper == NAMES[k]) {
            return static_cast<GateKind>(k);
        }
    }
    if (upper == "CNOT") {
        return GateKind::CX;
    }
    if (upper == "RZ") {
        return GateKind::R;
    }
    if (upper == "MZ") {
        return GateKind::M;
    }
    return std::nullopt;
}

size_t gate_arity(GateKind kind) {
    switch (kind) {
        case GateKind::TICK:
            return 0;
        case GateKind::CX:
        case GateKind::CZ:
        case GateKind::SWAP:
            return 2;
        default:
            return 1;
    }
}

bool is_two_qubit(GateKind kind) {
    return gate_arity(kind) == 2;
}

bool is_unitary(GateKind kind) {
    return kind != GateKind::R && kind != GateKind::M && kind != GateKind::TICK;
}

GateKind inverse_gate(GateKind kind) {
    if (!is_unitary(kind)) {
        throw std::invalid_argument("gate " + std::string(gate_name(kind)) + " has no inverse");
    }
    if (kind == GateKind::S) {
        return GateKind::S_DAG;
    }
    if (kind == GateKind::S_DAG) {
        return GateKind::S;
    }
    return kind;
}

}  // namespace stabench
