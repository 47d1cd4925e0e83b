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

#include "stabench/circuit.h"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "stabench/errors.h"

namespace stabench {

namespace {

void validate_targets(GateKind kind, const std::vector<uint32_t> &targets, size_t line) {
    size_t arity = gate_arity(kind);
    std::string name(gate_name(kind));
    if (arity == 0) {
        if (!targets.empty()) {
            throw ParseError(name + " takes no targets", line, 0);
        }
        return;
    }
    if (arity == 2) {
        if (targets.size() % 2 != 0) {
            throw ParseError(name + " needs an even number of targets", line, 0);
        }
        std::vector<uint32_t> sorted = targets;
        std::sort(sorted.begin(), sorted.end());
        for (size_t k = 0; k < targets.size(); k += 2) {
            if (targets[k] == targets[k + 1]) {
                throw ParseError(name + " has a duplicate target in a pair", line, 0);
            }
        }
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw ParseError(name + " pairs overlap within one instruction", line, 0);
        }
    }
}

}  // namespace

void Circuit::append(GateKind kind, std::vector<uint32_t> targets) {
    validate_targets(kind, targets, 0);
    for (uint32_t t : targets) {
        num_qubits_ = std::max(num_qubits_, (size_t)t + 1);
    }
    instructions_.push_back({kind, std::move(targets)});
}

void Circuit::append(const Circuit &other) {
    for (const auto &inst : other.instructions_) {
        instructions_.push_back(inst);
    }
    num_qubits_ = std::max(num_qubits_, other.num_qubits_);
}

void Circuit::reserve_qubits(size_t n) {
    num_qubits_ = std::max(num_qubits_, n);
}

Circuit Circuit::parse(std::string_view text) {
    Circuit out;
    size_t line_no = 0;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        line_no++;
        size_t hash = line.find('#');
        if (hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }

        std::vector<std::pair<std::string_view, size_t>> tokens;
        size_t k = 0;
        while (k < line.size()) {
            while (k < line.size() && std::isspace((unsigned char)line[k])) {
                k++;
            }
            size_t b = k;
            while (k < line.size() && !std::isspace((unsigned char)line[k])) {
                k++;
            }
            if (k > b) {
                tokens.push_back({line.substr(b, k - b), b + 1});
            }
        }
        if (tokens.empty()) {
            if (end == text.size()) {
                break;
            }
            continue;
        }

        auto kind = gate_from_name(tokens[0].first);
        if (!kind.has_value()) {
            throw ParseError("unknown gate '" + std::string(tokens[0].first) + "'", line_no, tokens[0].second);
        }
        std::vector<uint32_t> targets;
        for (size_t t = 1; t < tokens.size(); t++) {
            auto [tok, col] = tokens[t];
            if (tok[0] == '-') {
                throw ParseError("negative qubit index '" + std::string(tok) + "'", line_no, col);
            }
            uint64_t v = 0;
            for (char c : tok) {
                if (!std::isdigit((unsigned char)c)) {
                    throw ParseError("invalid qubit target '" + std::string(tok) + "'", line_no, col);
                }
                v = v * 10 + (uint64_t)(c - '0');
                if (v > 0xFFFFFFFEull) {
                    throw ParseError("qubit index too large", line_no, col);
                }
            }
            targets.push_back((uint32_t)v);
        }
        validate_targets(*kind, targets, line_no);
        out.append(*kind, std::move(targets));
        if (end == text.size()) {
            break;
        }
    }
    return out;
}

std::vector<Operation> Circuit::operations() const {
    std::vector<Operation> ops;
    for (size_t i = 0; i < instructions_.size(); i++) {
        const auto &inst = instructions_[i];
        size_t arity = gate_arity(inst.kind);
        if (arity == 0) {
            continue;
        }
        for (size_t g = 0; g * arity < inst.targets.size(); g++) {
            Operation op{inst.kind, (uint8_t)arity, {inst.targets[g * arity], 0}, i, g};
            if (arity == 2) {
                op.qubits[1] = inst.targets[g * arity + 1];
            }
            ops.push_back(op);
        }
    }
    return ops;
}

std::string Circuit::str() const {
    std::ostringstream out;
    for (const auto &inst : instructions_) {
        out << gate_name(inst.kind);
        for (uint32_t t : inst.targets) {
            out << ' ' << t;
        }
        out << '\n';
    }
    return out.str();
}

Circuit parse_circuit(std::string_view text) {
    return Circuit::parse(text);
}

std::string emit_circuit(const Circuit &c) {
    return c.str();
}

size_t two_qubit_gate_count(const Circuit &c) {
    size_t n = 0;
    for (const auto &inst : c.instructions()) {
        if (is_two_qubit(inst.kind)) {
            n += inst.targets.size() / 2;
        }
    }
    return n;
}

LayeredCircuit layered_view(const Circuit &c) {
    LayeredCircuit out;
    out.num_qubits = c.num_qubits();
    out.ops = c.operations();
    std::vector<size_t> busy(c.num_qubits(), 0);
    for (size_t k = 0; k < out.ops.size(); k++) {
        const auto &op = out.ops[k];
        size_t layer = 0;
        for (uint32_t q : op.targets()) {
            layer = std::max(layer, busy[q]);
        }
        layer++;
        for (uint32_t q : op.targets()) {
            busy[q] = layer;
        }
        if (out.layers.size() < layer) {
            out.layers.resize(layer);
        }
        out.layers[layer - 1].push_back(k);
    }
    return out;
}

size_t depth(const Circuit &c) {
    std::vector<size_t> busy(c.num_qubits(), 0);
    size_t d = 0;
    for (const auto &op : c.operations()) {
        size_t layer = 0;
        for (uint32_t q : op.targets()) {
            layer = std::max(layer, busy[q]);
        }
        layer++;
        for (uint32_t q : op.targets()) {
            busy[q] = layer;
        }
        d = std::max(d, layer);
    }
    return d;
}

CostTuple cost(const Circuit &c) {
    return {two_qubit_gate_count(c), depth(c)};
}

Circuit inverse(const Circuit &c) {
    Circuit out;
    out.reserve_qubits(c.num_qubits());
    const auto &insts = c.instructions();
    for (size_t k = insts.size(); k-- > 0;) {
        const auto &inst = insts[k];
        if (inst.kind == GateKind::TICK) {
            out.append(GateKind::TICK, {});
            continue;
        }
        out.append(inverse_gate(inst.kind), inst.targets);
    }
    return out;
}

}  // namespace stabench
