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

#include "stabench/tableau.h"

#include <stdexcept>

#include "stabench/errors.h"
#include "stabench/gf2.h"

namespace stabench {

std::string_view membership_name(Membership m) {
    switch (m) {
        case Membership::plus_one:
            return "plus_one";
        case Membership::minus_one:
            return "minus_one";
        default:
            return "not_in_group";
    }
}

std::string_view generator_status_name(GeneratorStatus s) {
    switch (s) {
        case GeneratorStatus::pass:
            return "pass";
        case GeneratorStatus::sign_fail:
            return "sign_fail";
        default:
            return "fail";
    }
}

Tableau::Tableau(size_t num_qubits) : n_(num_qubits) {
    rows_.reserve(2 * n_);
    for (size_t i = 0; i < n_; i++) {
        rows_.push_back(PauliString::single(n_, i, 'X'));
    }
    for (size_t i = 0; i < n_; i++) {
        rows_.push_back(PauliString::single(n_, i, 'Z'));
    }
}

void Tableau::apply_unitary(GateKind gate, std::span<const uint32_t> targets) {
    if (!is_unitary(gate) || targets.size() != gate_arity(gate)) {
        throw std::invalid_argument("apply_unitary: bad gate application");
    }
    for (uint32_t t : targets) {
        if (t >= n_) {
            throw std::out_of_range("gate target out of range");
        }
    }
    if (targets.size() == 2 && targets[0] == targets[1]) {
        throw std::invalid_argument("duplicate gate targets");
    }
    for (auto &row : rows_) {
        detail::conjugate_unchecked(row, gate, targets);
    }
    for (auto &m : mixers_) {
        detail::conjugate_unchecked(m, gate, targets);
    }
}

std::optional<bool> Tableau::apply(const Operation &op) {
    switch (op.kind) {
        case GateKind::TICK:
            return std::nullopt;
        case GateKind::R:
            reset(op.qubits[0]);
            return std::nullopt;
        case GateKind::M:
            return measure_deterministic(op.qubits[0], op.instruction);
        default:
            apply_unitary(op.kind, op.targets());
            return std::nullopt;
    }
}

PauliString Tableau::stabilizer_product_for(const PauliString &s) const {
    PauliString acc(n_);
    for (size_t i = 0; i < n_; i++) {
        if (!commutes(rows_[i], s)) {
            acc *= rows_[n_ + i];
        }
    }
    return acc;
}

std::optional<bool> Tableau::peek_z(size_t q) const {
    if (q >= n_) {
        throw std::out_of_range("qubit out of range");
    }
    for (size_t i = 0; i < n_; i++) {
        if (rows_[n_ + i].x(q)) {
            return std::nullopt;
        }
    }
    for (const auto &m : mixers_) {
        if (m.x(q)) {
            return std::nullopt;
        }
    }
    PauliString acc(n_);
    for (size_t i = 0; i < n_; i++) {
        if (rows_[i].x(q)) {
            acc *= rows_[n_ + i];
        }
    }
    return acc.phase() == 2;
}

bool Tableau::measure_deterministic(size_t q, size_t instruction) {
    auto r = peek_z(q);
    if (!r.has_value()) {
        throw NondeterministicMeasurement(
            "nondeterministic measurement of qubit " + std::to_string(q) + " at instruction " +
                std::to_string(instruction),
            instruction);
    }
    return *r;
}

void Tableau::collapse_z(size_t q) {
    size_t p = n_;
    for (size_t i = 0; i < n_; i++) {
        if (rows_[n_ + i].x(q)) {
            p = i;
            break;
        }
    }
    const PauliString pivot = rows_[n_ + p];
    for (size_t r = 0; r < 2 * n_; r++) {
        if (r != n_ + p && rows_[r].x(q)) {
            rows_[r] *= pivot;
            if (r < n_) {
                rows_[r].set_phase(0);
            }
        }
    }
    rows_[p] = pivot;
    rows_[p].set_phase(0);
    rows_[n_ + p] = PauliString::single(n_, q, 'Z');
}

void Tableau::reset(size_t q) {
    if (q >= n_) {
        throw std::out_of_range("qubit out of range");
    }
    std::vector<PauliString> kept;
    for (auto &m : mixers_) {
        m.clear_qubit(q);
        if (!m.is_identity_up_to_phase()) {
            kept.push_back(std::move(m));
        }
    }
    mixers_ = std::move(kept);

    const PauliString *anti = nullptr;
    for (size_t i = 0; i < n_; i++) {
        if (rows_[n_ + i].x(q)) {
            anti = &rows_[n_ + i];
            break;
        }
    }
    if (anti != nullptr) {
        PauliString u = *anti;
        u.clear_qubit(q);
        u.set_phase(0);
        collapse_z(q);
        if (!u.is_identity_up_to_phase()) {
            mixers_.push_back(std::move(u));
        }
        return;
    }
    PauliString acc(n_);
    for (size_t i = 0; i < n_; i++) {
        if (rows_[i].x(q)) {
            acc *= rows_[n_ + i];
        }
    }
    if (acc.phase() == 2) {
        uint32_t t = (uint32_t)q;
        for (auto &row : rows_) {
            detail::conjugate_unchecked(row, GateKind::X, {&t, 1});
        }
    }
}

Membership Tableau::stabilizes(const PauliString &s) const {
    if (s.num_qubits() != n_) {
        throw std::invalid_argument("stabilizes: qubit count mismatch");
    }
    if (!s.is_hermitian()) {
        throw std::invalid_argument("stabilizes: Pauli is not Hermitian");
    }
    for (size_t i = 0; i < n_; i++) {
        if (!commutes(rows_[n_ + i], s)) {
            return Membership::not_in_group;
        }
    }
    for (const auto &m : mixers_) {
        if (!commutes(m, s)) {
            return Membership::not_in_group;
        }
    }
    PauliString acc = stabilizer_product_for(s);
    PauliString unsigned_s = s;
    unsigned_s.set_phase(acc.phase());
    if (acc != unsigned_s) {
        throw std::logic_error("tableau is not full rank");
    }
    return acc.phase() == s.phase() ? Membership::plus_one : Membership::minus_one;
}

std::string Tableau::invariant_violation() const {
    for (size_t a = 0; a < 2 * n_; a++) {
        for (size_t b = a + 1; b < 2 * n_; b++) {
            bool should_anti = b == a + n_;
            if (commutes(rows_[a], rows_[b]) == should_anti) {
                return "rows " + std::to_string(a) + " and " + std::to_string(b) + " have wrong commutation";
            }
        }
        if (a >= n_ && !rows_[a].is_hermitian()) {
            return "stabilizer row " + std::to_string(a - n_) + " is not Hermitian";
        }
    }
    if (symplectic_rank(rows_) != 2 * n_) {
        return "rows are not full rank";
    }
    return "";
}

Tableau simulate(const Circuit &c, size_t num_qubits) {
    Tableau t(std::max(num_qubits, c.num_qubits()));
    for (const auto &op : c.operations()) {
        t.apply(op);
    }
    return t;
}

void check_generator_set(std::span<const PauliString> generators) {
    if (generators.empty()) {
        throw MalformedProblem("generator set is empty");
    }
    size_t n = generators[0].num_qubits();
    for (size_t i = 0; i < generators.size(); i++) {
        if (generators[i].num_qubits() != n) {
            throw MalformedProblem("generators have different lengths");
        }
        if (!generators[i].is_hermitian()) {
            throw MalformedProblem("generator " + std::to_string(i) + " is not Hermitian");
        }
    }
    for (size_t i = 0; i < generators.size(); i++) {
        for (size_t j = i + 1; j < generators.size(); j++) {
            if (!commutes(generators[i], generators[j])) {
                throw MalformedProblem(
                    "generators " + std::to_string(i) + " and " + std::to_string(j) + " anticommute");
            }
        }
    }
}

namespace {

Tableau run_with_flags(const Circuit &c, size_t num_data_qubits, size_t total_qubits, std::vector<bool> *outcomes) {
    Tableau t(total_qubits);
    for (const auto &op : c.operations()) {
        if (op.kind == GateKind::M) {
            size_t q = op.qubits[0];
            if (q < num_data_qubits) {
                throw StructuralError(
                    "instruction " + std::to_string(op.instruction) + " measures data qubit " + std::to_string(q));
            }
            auto r = t.peek_z(q);
            if (!r.has_value()) {
                throw NondeterministicMeasurement(
                    "ill-formed flag gadget: random outcome for qubit " + std::to_string(q) + " at instruction " +
                        std::to_string(op.instruction),
                    op.instruction);
            }
            if (outcomes != nullptr) {
                outcomes->push_back(*r);
            }
            continue;
        }
        t.apply(op);
    }
    return t;
}

}  // namespace

StabReport check_stabilizers(const Circuit &c, std::span<const PauliString> generators) {
    check_generator_set(generators);
    size_t n = generators[0].num_qubits();
    size_t total = std::max(n, c.num_qubits());
    Tableau t = run_with_flags(c, n, total, nullptr);
    StabReport report;
    for (const auto &g : generators) {
        Membership m = t.stabilizes(g.extended(total));
        GeneratorStatus s = m == Membership::plus_one    ? GeneratorStatus::pass
                            : m == Membership::minus_one ? GeneratorStatus::sign_fail
                                                         : GeneratorStatus::fail;
        report.statuses.push_back(s);
        report.satisfied += s == GeneratorStatus::pass;
    }
    report.valid = report.satisfied == generators.size();
    return report;
}

std::vector<bool> deterministic_flag_outcomes(const Circuit &c, size_t num_data_qubits) {
    std::vector<bool> outcomes;
    run_with_flags(c, num_data_qubits, std::max(num_data_qubits, c.num_qubits()), &outcomes);
    return outcomes;
}

}  // namespace stabench
