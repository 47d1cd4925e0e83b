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

#ifndef STABENCH_TABLEAU_H
#define STABENCH_TABLEAU_H

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stabench/circuit.h"
#include "stabench/pauli_string.h"

namespace stabench {

enum class Membership { plus_one, minus_one, not_in_group };

std::string_view membership_name(Membership m);

/// Aaronson-Gottesman tableau of a stabilizer state, starting at |0...0>.
///
/// Resets of qubits with random Z outcomes leave a classical mixture. It is
/// represented as a pure reference tableau plus a list of "mixer" Paulis U;
/// the state is the uniform average of U rho U^dagger over the group they
/// generate. An observable has a definite value only if it also commutes with
/// every mixer.
class Tableau {
   public:
    explicit Tableau(size_t num_qubits);

    size_t num_qubits() const {
        return n_;
    }
    const PauliString &destabilizer(size_t i) const {
        return rows_[i];
    }
    const PauliString &stabilizer(size_t i) const {
        return rows_[n_ + i];
    }
    const std::vector<PauliString> &mixers() const {
        return mixers_;
    }
    bool is_pure() const {
        return mixers_.empty();
    }

    void apply_unitary(GateKind gate, std::span<const uint32_t> targets);
    /// Applies one operation. M returns the (deterministic) outcome.
    std::optional<bool> apply(const Operation &op);

    /// Deterministic Z outcome on qubit q, or nullopt if random.
    std::optional<bool> peek_z(size_t q) const;
    /// Measures Z on q; throws NondeterministicMeasurement if random.
    bool measure_deterministic(size_t q, size_t instruction = 0);
    /// Re-prepares qubit q in |0>.
    void reset(size_t q);

    Membership stabilizes(const PauliString &s) const;

    /// Commutation pattern and rank of the reference tableau; empty string when valid.
    std::string invariant_violation() const;

   private:
    size_t n_;
    std::vector<PauliString> rows_;
    std::vector<PauliString> mixers_;

    /// Product of stabilizer rows whose destabilizer anticommutes with s.
    PauliString stabilizer_product_for(const PauliString &s) const;
    void collapse_z(size_t q);
};

/// Simulates c from |0...0> on max(c.num_qubits(), num_qubits) qubits.
Tableau simulate(const Circuit &c, size_t num_qubits = 0);

enum class GeneratorStatus { pass, sign_fail, fail };

std::string_view generator_status_name(GeneratorStatus s);

struct StabReport {
    std::vector<GeneratorStatus> statuses;
    size_t satisfied = 0;
    bool valid = false;
};

/// Requires generators to be Hermitian, equal-length and pairwise commuting
/// (throws MalformedProblem otherwise).
void check_generator_set(std::span<const PauliString> generators);

/// Checks which generators the prepared state satisfies.
///
/// Qubits [0, n) are data qubits, where n is the generator length; higher
/// indices are flags and generators are extended by identity on them. M on a
/// data qubit is a StructuralError; random flag outcomes raise
/// NondeterministicMeasurement.
StabReport check_stabilizers(const Circuit &c, std::span<const PauliString> generators);

/// Fault-free outcome of every M operation, in program order.
std::vector<bool> deterministic_flag_outcomes(const Circuit &c, size_t num_data_qubits);

}  // namespace stabench

#endif
