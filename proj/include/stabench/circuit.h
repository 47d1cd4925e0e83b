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

#ifndef STABENCH_CIRCUIT_H
#define STABENCH_CIRCUIT_H

#include <array>
#include <compare>
#include <span>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "stabench/gate.h"

namespace stabench {

struct Instruction {
    GateKind kind;
    std::vector<uint32_t> targets;

    bool operator==(const Instruction &other) const = default;
};

/// One gate application: a single target, or one pair of a broadcast two-qubit instruction.
struct Operation {
    GateKind kind;
    uint8_t arity;
    std::array<uint32_t, 2> qubits;
    /// Index of the instruction this operation came from.
    size_t instruction;
    /// Index of the target (or pair) within that instruction.
    size_t group;

    std::span<const uint32_t> targets() const {
        return {qubits.data(), arity};
    }
};

/// Lexicographic (two-qubit gate count, depth) cost.
struct CostTuple {
    size_t g2q = 0;
    size_t depth = 0;

    auto operator<=>(const CostTuple &other) const = default;
};

/// A straight-line Clifford circuit over the gate alphabet in gate.h.
///
/// Text format: one instruction per line, '#' comments, case-insensitive gate
/// names, whitespace separated decimal qubit indices. Two-qubit gates take an
/// even number of targets read as consecutive pairs.
class Circuit {
   public:
    Circuit() = default;

    static Circuit parse(std::string_view text);

    /// Appends a validated instruction.
    void append(GateKind kind, std::vector<uint32_t> targets);
    void append(const Circuit &other);

    const std::vector<Instruction> &instructions() const {
        return instructions_;
    }
    /// Highest referenced qubit index + 1, or the declared minimum if larger.
    size_t num_qubits() const {
        return num_qubits_;
    }
    /// Ensures num_qubits() is at least n.
    void reserve_qubits(size_t n);

    /// Flattened gate applications in program order (TICK omitted).
    std::vector<Operation> operations() const;

    /// Canonical text.
    std::string str() const;

    bool operator==(const Circuit &other) const {
        return instructions_ == other.instructions_;
    }

   private:
    std::vector<Instruction> instructions_;
    size_t num_qubits_ = 0;
};

/// ASAP schedule: `layers[j]` lists indices into `ops` executed in layer j+1.
struct LayeredCircuit {
    size_t num_qubits = 0;
    std::vector<Operation> ops;
    std::vector<std::vector<size_t>> layers;

    size_t depth() const {
        return layers.size();
    }
};

Circuit parse_circuit(std::string_view text);
std::string emit_circuit(const Circuit &c);

size_t two_qubit_gate_count(const Circuit &c);
size_t depth(const Circuit &c);
CostTuple cost(const Circuit &c);
LayeredCircuit layered_view(const Circuit &c);

/// Inverse of a unitary circuit: reversed order with each gate inverted.
Circuit inverse(const Circuit &c);

}  // namespace stabench

#endif
