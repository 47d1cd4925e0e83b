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

#ifndef STABENCH_GATE_H
#define STABENCH_GATE_H

#include <cstdint>
#include <optional>
#include <string_view>

namespace stabench {

enum class GateKind : uint8_t { I, X, Y, Z, H, S, S_DAG, CX, CZ, SWAP, R, M, TICK };

constexpr size_t NUM_GATE_KINDS = 13;

/// Canonical upper-case name used when emitting circuits.
std::string_view gate_name(GateKind kind);

/// Case-insensitive lookup. Accepts CNOT, RZ and MZ as aliases.
std::optional<GateKind> gate_from_name(std::string_view name);

/// Number of qubits per application: 0 for TICK, 2 for CX/CZ/SWAP, else 1.
size_t gate_arity(GateKind kind);

bool is_two_qubit(GateKind kind);
bool is_unitary(GateKind kind);

/// Inverse of a unitary gate (S <-> S_DAG, all others self-inverse).
GateKind inverse_gate(GateKind kind);

}  // namespace stabench

#endif
