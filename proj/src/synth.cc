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


#include "stabench/synth.h"

#include <stdexcept>

#include "stabench/errors.h"
#include "stabench/gf2.h"
#include "stabench/parallel.h"
#include "stabench/tableau.h"

namespace stabench {

namespace {

struct Reducer {
    std::vector<PauliString> rows;
    std::vector<Instruction> gates;

    void apply(GateKind g, std::vector<uint32_t> targets) {
        for (auto &r : rows) {
            detail::conjugate_unchecked(r, g, targets);
        }
        gates.push_back({g, std::move(targets)});
    }

    /// Rotates qubit q of row r to X.
    void to_x(size_t r, uint32_t q) {
        char p = rows[r].pauli_at(q);
        if (p == 'Z') {
            apply(GateKind::H, {q});
        } else if (p == 'Y') {
            apply(GateKind::S_DAG, {q});
        }
    }
};

}  // namespace

Circuit synthesize_prep(const CodeInstance &code) {
    auto report = validate_code(code);
    if (!report.ok()) {
        throw MalformedProblem("code " + code.id + " is invalid: " + report.failures[0]);
    }
    size_t n = code.num_qubits, k = code.generator_count();
    Reducer red{code.generators, {}};
    std::vector<bool> pivot(n, false);
    std::vector<bool> done(k, false);

    // Each row with an X part becomes a single Z on a fresh pivot; Z-only rows need no gates.
    while (true) {
        size_t i = 0;
        std::optional<uint32_t> q;
        for (; i < k && !q; i++) {
            if (done[i]) {
                continue;
            }
            for (uint32_t c = 0; c < n; c++) {
                if (red.rows[i].x(c)) {
                    q = c;
                    break;
                }
            }
        }
        if (!q) {
            break;
        }
        i--;
        if (pivot[*q]) {
            throw MalformedProblem("generators of " + code.id + " do not commute");
        }
        red.to_x(i, *q);
        for (uint32_t c = 0; c < n; c++) {
            if (c == *q) {
                continue;
            }
            char p = red.rows[i].pauli_at(c);
            if (p == 'Z') {
                red.apply(GateKind::CZ, {*q, c});
            } else if (p != 'I') {
                red.to_x(i, c);
                red.apply(GateKind::CX, {*q, c});
            }
        }
        red.apply(GateKind::H, {*q});
        pivot[*q] = true;
        done[i] = true;
        for (size_t j = 0; j < k; j++) {
            if (j != i && red.rows[j].z(*q)) {
                red.rows[j] *= red.rows[i];
            }
        }
    }

    Circuit out;
    out.reserve_qubits(n);
    for (auto it = red.gates.rbegin(); it != red.gates.rend(); ++it) {
        out.append(inverse_gate(it->kind), it->targets);
    }
    auto check = check_stabilizers(out, code.generators);
    std::vector<bool> flip(k);
    for (size_t i = 0; i < k; i++) {
        if (check.statuses[i] == GeneratorStatus::fail) {
            throw std::logic_error("synthesis lost generator " + std::to_string(i) + " of " + code.id);
        }
        flip[i] = check.statuses[i] == GeneratorStatus::sign_fail;
    }
    PauliString fix = sign_correction(code.generators, flip);
    for (uint32_t q = 0; q < n; q++) {
        char p = fix.pauli_at(q);
        if (p != 'I') {
            out.append(p == 'X' ? GateKind::X : p == 'Y' ? GateKind::Y : GateKind::Z, {q});
        }
    }
    return out;
}

PauliString sign_correction(std::span<const PauliString> generators, const std::vector<bool> &flip) {
    size_t k = generators.size();
    size_t n = k == 0 ? 0 : generators[0].num_qubits();
    // Unknown bits (x | z) of the correction; row i encodes <g_i, P> = g_i.z . P.x + g_i.x . P.z.
    size_t bits = 2 * n;
    std::vector<BitVec> rows(k, BitVec(num_words(bits + 1), 0));
    for (size_t i = 0; i < k; i++) {
        for (size_t q = 0; q < n; q++) {
            bit_set(rows[i], q, generators[i].z(q));
            bit_set(rows[i], n + q, generators[i].x(q));
        }
        bit_set(rows[i], bits, flip[i]);
    }
    std::vector<size_t> pivots;
    size_t rank = 0;
    for (size_t col = 0; col < bits && rank < k; col++) {
        size_t p = rank;
        while (p < k && !bit_get(rows[p], col)) {
            p++;
        }
        if (p == k) {
            continue;
        }
        std::swap(rows[rank], rows[p]);
        for (size_t r = 0; r < k; r++) {
            if (r != rank && bit_get(rows[r], col)) {
                xor_into(rows[r], rows[rank]);
            }
        }
        pivots.push_back(col);
        rank++;
    }
    for (size_t r = rank; r < k; r++) {
        if (bit_get(rows[r], bits)) {
            throw MalformedProblem("requested sign pattern is inconsistent with the generators");
        }
    }
    PauliString fix(n);
    for (size_t r = 0; r < rank; r++) {
        if (bit_get(rows[r], bits)) {
            size_t col = pivots[r];
            if (col < n) {
                fix.set_x(col, true);
            } else {
                fix.set_z(col - n, true);
            }
        }
    }
    return fix;
}

Circuit inflate_two_qubit_gates(const Circuit &c, size_t num_qubits) {
    Circuit out;
    out.reserve_qubits(std::max(num_qubits, c.num_qubits()));
    bool any = false;
    for (const auto &ins : c.instructions()) {
        out.append(ins.kind, ins.targets);
        if (!is_two_qubit(ins.kind)) {
            continue;
        }
        any = true;
        std::vector<uint32_t> reversed;
        for (size_t i = 0; i < ins.targets.size(); i += 2) {
            reversed.push_back(ins.targets[i + 1]);
            reversed.push_back(ins.targets[i]);
        }
        out.append(ins.kind, reversed);
        out.append(ins.kind, reversed);
    }
    if (!any && out.num_qubits() >= 2) {
        out.append(GateKind::CX, {0, 1});
        out.append(GateKind::CX, {0, 1});
    }
    return out;
}

Circuit make_b2_baseline(const CodeInstance &code) {
    return inflate_two_qubit_gates(synthesize_prep(code), code.num_qubits);
}

Circuit make_b3_baseline(const CodeInstance &code) {
    return synthesize_prep(code);
}

Instance make_instance(const CodeInstance &code, Task task, const FTOptions &ft_options) {
    Instance inst;
    inst.code_id = code.id;
    inst.task = task;
    if (task == Task::B2) {
        inst.baseline = make_b2_baseline(code);
        inst.baseline_cost = cost(*inst.baseline);
        inst.inflation_factor = kB2InflationFactor;
    } else if (task == Task::B3) {
        inst.baseline = make_b3_baseline(code);
        inst.baseline_cost = cost(*inst.baseline);
        inst.baseline_ft = ft_score(*inst.baseline, code, ft_options);
        inst.has_headroom = inst.baseline_ft->dangerous_count > 0 && inst.baseline_ft->ft_score < 1;
    }
    return inst;
}

std::vector<Instance> make_instances(const Suite &suite, Task task, unsigned workers) {
    std::vector<Instance> all(suite.codes.size());
    parallel_for(0, suite.codes.size(), workers,
                 [&](size_t i) { all[i] = make_instance(suite.codes[i], task); });
    std::vector<Instance> out;
    for (auto &inst : all) {
        if (inst.has_headroom) {
            out.push_back(std::move(inst));
        }
    }
    return out;
}

}  // namespace stabench
