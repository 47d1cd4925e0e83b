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


#ifndef STABENCH_FAULT_H
#define STABENCH_FAULT_H

#include <cstdint>
#include <string>
#include <vector>

#include "stabench/cancel.h"
#include "stabench/circuit.h"
#include "stabench/code.h"
#include "stabench/pauli_string.h"
#include "stabench/rational.h"

namespace stabench {

struct FaultLocation {
    uint32_t qubit = 0;
    /// Boundary index: 0 is before the first layer, depth() is after the last.
    uint32_t layer = 0;
    /// 'X', 'Y' or 'Z'.
    char pauli = 'X';

    bool operator==(const FaultLocation &other) const = default;
};

std::string fault_location_str(const FaultLocation &f);

struct PropagationResult {
    PauliString error;
    size_t data_weight = 0;
    /// One entry per measurement in program order.
    std::vector<bool> flag_flips;
    bool flagged = false;
};

struct FTReport {
    size_t num_qubits = 0;
    size_t num_data_qubits = 0;
    size_t threshold = 0;
    uint64_t total_locations = 0;
    uint64_t dangerous_count = 0;
    uint64_t flagged_dangerous = 0;
    /// Flagged faults that are not dangerous.
    uint64_t false_flags = 0;
    Rational ft_score = 1;
    size_t max_unflagged_weight = 0;
    bool fault_free_accepted = true;
    bool is_fault_tolerant = true;
};

std::vector<FaultLocation> enumerate_fault_locations(const LayeredCircuit &c);
std::vector<FaultLocation> enumerate_fault_locations(const Circuit &c, size_t num_qubits = 0);

/// Exact propagation of one fault through the rest of the circuit.
PropagationResult propagate_fault(const LayeredCircuit &c, const FaultLocation &f, size_t num_data_qubits);
PropagationResult propagate_fault(const Circuit &c, const FaultLocation &f, size_t num_data_qubits);

size_t weight_of_variant(const Circuit &c, const FaultLocation &f, size_t num_data_qubits);

/// Lanes of a bit-sliced batch: up to 64 faults propagated together.
struct FrameBatchResult {
    std::vector<uint32_t> data_weight;
    uint64_t flagged = 0;
};

FrameBatchResult propagate_frame_batch(const LayeredCircuit &c, std::span<const FaultLocation> faults,
                                       size_t num_data_qubits);

struct FTOptions {
    unsigned workers = 1;
    const CancelToken *cancel = nullptr;
    /// Faults per cancellation check; rounded up to a multiple of 64.
    size_t batch_size = 1024;
};

/// Counts over the layered circuit without validating it against a code.
FTReport ft_report(const LayeredCircuit &c, size_t num_data_qubits, size_t distance, const FTOptions &options = {});

/// Validates preservation and flag determinism, then scores.
FTReport ft_score(const Circuit &c, const CodeInstance &code, const FTOptions &options = {});

}  // namespace stabench

#endif
