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

#include "stabench/gf2.h"

#include <bit>
#include <stdexcept>

namespace stabench {

void xor_into(std::span<uint64_t> dst, std::span<const uint64_t> src) {
    for (size_t k = 0; k < dst.size(); k++) {
        dst[k] ^= src[k];
    }
}

bool is_zero(std::span<const uint64_t> v) {
    for (uint64_t w : v) {
        if (w) {
            return false;
        }
    }
    return true;
}

std::optional<size_t> first_set_bit(std::span<const uint64_t> v) {
    for (size_t k = 0; k < v.size(); k++) {
        if (v[k]) {
            return k * 64 + (size_t)std::countr_zero(v[k]);
        }
    }
    return std::nullopt;
}

Gf2Basis::Gf2Basis(size_t num_bits) : num_bits_(num_bits) {
}

void Gf2Basis::grow_combos() {
    size_t words = num_words(num_inserted_);
    for (auto &r : rows_) {
        r.combo.resize(words, 0);
    }
}

std::optional<BitVec> Gf2Basis::insert(std::span<const uint64_t> v) {
    if (v.size() != num_words(num_bits_)) {
        throw std::invalid_argument("Gf2Basis::insert width mismatch");
    }
    size_t index = num_inserted_++;
    grow_combos();
    BitVec bits(v.begin(), v.end());
    BitVec combo(num_words(num_inserted_), 0);
    bit_flip(combo, index);
    // Rows are kept fully reduced on their pivots, so one pass suffices.
    for (const auto &r : rows_) {
        if (bit_get(bits, r.pivot)) {
            xor_into(bits, r.bits);
            xor_into(combo, r.combo);
        }
    }
    auto pivot = first_set_bit(bits);
    if (!pivot.has_value()) {
        return combo;
    }
    for (auto &r : rows_) {
        if (bit_get(r.bits, *pivot)) {
            xor_into(r.bits, bits);
            xor_into(r.combo, combo);
        }
    }
    rows_.push_back({*pivot, std::move(bits), std::move(combo)});
    return std::nullopt;
}

bool Gf2Basis::contains(std::span<const uint64_t> v) const {
    BitVec bits(v.begin(), v.end());
    for (const auto &r : rows_) {
        if (bit_get(bits, r.pivot)) {
            xor_into(bits, r.bits);
        }
    }
    return is_zero(bits);
}

std::optional<BitVec> Gf2Basis::express(std::span<const uint64_t> v) const {
    BitVec bits(v.begin(), v.end());
    BitVec combo(num_words(num_inserted_), 0);
    for (const auto &r : rows_) {
        if (bit_get(bits, r.pivot)) {
            xor_into(bits, r.bits);
            for (size_t k = 0; k < r.combo.size(); k++) {
                combo[k] ^= r.combo[k];
            }
        }
    }
    if (!is_zero(bits)) {
        return std::nullopt;
    }
    return combo;
}

size_t gf2_rank(const std::vector<BitVec> &rows, size_t num_bits) {
    Gf2Basis basis(num_bits);
    for (const auto &r : rows) {
        basis.insert(r);
    }
    return basis.rank();
}

size_t symplectic_rank(std::span<const PauliString> paulis) {
    if (paulis.empty()) {
        return 0;
    }
    size_t n = paulis[0].num_qubits();
    std::vector<BitVec> rows;
    rows.reserve(paulis.size());
    for (const auto &p : paulis) {
        if (p.num_qubits() != n) {
            throw std::invalid_argument("Pauli length mismatch in symplectic_rank");
        }
        rows.push_back(p.symplectic_words());
    }
    return gf2_rank(rows, 2 * num_words(n) * 64);
}

std::optional<std::vector<bool>> gf2_solve(const std::vector<BitVec> &rows, std::span<const uint64_t> target,
                                           size_t num_bits) {
    Gf2Basis basis(num_bits);
    for (const auto &r : rows) {
        basis.insert(r);
    }
    auto combo = basis.express(target);
    if (!combo.has_value()) {
        return std::nullopt;
    }
    std::vector<bool> out(rows.size());
    for (size_t i = 0; i < rows.size(); i++) {
        out[i] = bit_get(*combo, i);
    }
    return out;
}

}  // namespace stabench
