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

#ifndef STABENCH_PAULI_STRING_H
#define STABENCH_PAULI_STRING_H

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stabench/gate.h"

namespace stabench {

inline size_t num_words(size_t num_qubits) {
    return (num_qubits + 63) / 64;
}

/// An n-qubit Pauli operator i^phase * P_0 (x) ... (x) P_{n-1}.
///
/// Qubit q carries X when x(q) is set, Z when z(q) is set, and Y when both are
/// set. Y is the Hermitian Pauli Y = iXZ, so the operator with both bits set and
/// phase 0 is Hermitian.
class PauliString {
   public:
    PauliString() = default;
    /// Identity on `num_qubits` qubits.
    explicit PauliString(size_t num_qubits);

    /// Parses a dense ("+XX_Z", "-iYZ") or sparse ("-X0*Z3") literal.
    ///
    /// Dense literals must have exactly `num_qubits` characters. Sparse
    /// indices must be below `num_qubits`.
    static PauliString from_text(std::string_view text, size_t num_qubits);
    /// Parses a literal, inferring the qubit count (dense length, or max sparse index + 1).
    static PauliString from_text(std::string_view text);
    /// Single-qubit Pauli `p` in {'X','Y','Z'} on `qubit`.
    static PauliString single(size_t num_qubits, size_t qubit, char p);

    size_t num_qubits() const {
        return num_qubits_;
    }
    uint8_t phase() const {
        return phase_;
    }
    void set_phase(uint8_t phase) {
        phase_ = phase & 3;
    }
    /// Sign bit of a Hermitian Pauli (phase 2).
    bool sign() const {
        return phase_ == 2;
    }

    bool x(size_t q) const {
        return (xs_[q >> 6] >> (q & 63)) & 1;
    }
    bool z(size_t q) const {
        return (zs_[q >> 6] >> (q & 63)) & 1;
    }
    void set_x(size_t q, bool v);
    void set_z(size_t q, bool v);
    /// 'I', 'X', 'Y' or 'Z'.
    char pauli_at(size_t q) const;
    /// Sets qubit q to 'I','X','Y','Z' without changing the phase.
    void set_pauli(size_t q, char p);

    std::span<const uint64_t> x_words() const {
        return xs_;
    }
    std::span<const uint64_t> z_words() const {
        return zs_;
    }
    std::span<uint64_t> x_words_mut() {
        return xs_;
    }
    std::span<uint64_t> z_words_mut() {
        return zs_;
    }

    bool is_identity_up_to_phase() const;
    bool is_hermitian() const {
        return (phase_ & 1) == 0;
    }

    /// Dense canonical form, e.g. "+X_YZ" or "-iZZ".
    std::string str() const;
    /// Sparse form, e.g. "+X0*Y3"; identity is "+I".
    std::string sparse_str() const;

    /// this = this * rhs with exact phase.
    PauliString &operator*=(const PauliString &rhs);
    bool operator==(const PauliString &other) const;
    bool operator!=(const PauliString &other) const {
        return !(*this == other);
    }

    /// Pads with identity up to `num_qubits` qubits.
    PauliString extended(size_t num_qubits) const;
    /// Places this Pauli at qubits [offset, offset + n) of a `num_qubits` register.
    PauliString embedded(size_t num_qubits, size_t offset) const;

    /// Clears qubit q (phase is kept).
    void clear_qubit(size_t q);

    /// X bits followed by Z bits, each padded to whole words.
    std::vector<uint64_t> symplectic_words() const;

   private:
    size_t num_qubits_ = 0;
    uint8_t phase_ = 0;
    std::vector<uint64_t> xs_;
    std::vector<uint64_t> zs_;
};

PauliString parse_pauli(std::string_view text, size_t num_qubits);
std::string emit_pauli(const PauliString &p);

bool commutes(const PauliString &a, const PauliString &b);
PauliString multiply(const PauliString &a, const PauliString &b);
PauliString operator*(const PauliString &a, const PauliString &b);

size_t weight(const PauliString &p);
size_t weight(const PauliString &p, std::span<const size_t> support);
/// Weight restricted to qubits [0, prefix).
size_t weight_prefix(const PauliString &p, size_t prefix);

/// In-place U P U^dagger for one application of `gate` (1 or 2 targets).
void conjugate_in_place(PauliString &p, GateKind gate, std::span<const uint32_t> targets);
PauliString conjugate_by_gate(const PauliString &p, GateKind gate, std::span<const uint32_t> targets);

std::ostream &operator<<(std::ostream &out, const PauliString &p);

namespace detail {
/// conjugate_in_place without target validation.
void conjugate_unchecked(PauliString &p, GateKind gate, std::span<const uint32_t> targets);
}  // namespace detail

}  // namespace stabench

#endif
