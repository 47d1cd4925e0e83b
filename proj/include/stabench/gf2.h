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

#ifndef STABENCH_GF2_H
#define STABENCH_GF2_H

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "stabench/pauli_string.h"

namespace stabench {

/// Word-packed GF(2) row vector.
using BitVec = std::vector<uint64_t>;

inline bool bit_get(std::span<const uint64_t> v, size_t k) {
    return (v[k >> 6] >> (k & 63)) & 1;
}
inline void bit_flip(std::span<uint64_t> v, size_t k) {
    v[k >> 6] ^= uint64_t{1} << (k & 63);
}
inline void bit_set(std::span<uint64_t> v, size_t k, bool b) {
    uint64_t m = uint64_t{1} << (k & 63);
    v[k >> 6] = b ? (v[k >> 6] | m) : (v[k >> 6] & ~m);
}
void xor_into(std::span<uint64_t> dst, std::span<const uint64_t> src);
bool is_zero(std::span<const uint64_t> v);
/// Index of the lowest set bit, or nullopt.
std::optional<size_t> first_set_bit(std::span<const uint64_t> v);

/// Incremental row-echelon basis over GF(2).
///
/// Each stored row remembers which inserted vectors it is a combination of, so
/// membership queries can also report the combination.
class Gf2Basis {
   public:
    explicit Gf2Basis(size_t num_bits);

    size_t num_bits() const {
        return num_bits_;
    }
    size_t rank() const {
        return rows_.size();
    }
    /// Number of vectors passed to insert so far.
    size_t num_inserted() const {
        return num_inserted_;
    }

    /// Inserts v. Returns nullopt if v was independent, otherwise the
    /// combination (bit set over insertion indices, including v itself) that sums to zero.
    std::optional<BitVec> insert(std::span<const uint64_t> v);

    bool contains(std::span<const uint64_t> v) const;
    /// Combination of inserted vectors summing to v, or nullopt when v is outside the span.
    std::optional<BitVec> express(std::span<const uint64_t> v) const;

   private:
    struct Row {
        size_t pivot;
        BitVec bits;
        BitVec combo;
    };
    size_t num_bits_;
    size_t num_inserted_ = 0;
    std::vector<Row> rows_;
    void grow_combos();
};

/// Rank of a list of bit rows.
size_t gf2_rank(const std::vector<BitVec> &rows, size_t num_bits);

/// Symplectic rank of a list of Paulis (signs ignored).
size_t symplectic_rank(std::span<const PauliString> paulis);

/// Solves sum_i a_i rows[i] = target; returns the coefficient vector or nullopt.
std::optional<std::vector<bool>> gf2_solve(const std::vector<BitVec> &rows, std::span<const uint64_t> target,
                                           size_t num_bits);

}  // namespace stabench

#endif
