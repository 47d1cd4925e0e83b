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


#ifndef STABENCH_SYNTH_H
#define STABENCH_SYNTH_H

#include <optional>
#include <string>
#include <vector>

#include "stabench/circuit.h"
#include "stabench/code.h"
#include "stabench/fault.h"
#include "stabench/scoring.h"

namespace stabench {

/// Clifford circuit taking |0...0> to a +1 eigenstate of every generator.
///
/// Gates are H, S, S_DAG, CX plus terminal X/Y/Z sign corrections. No measurements.
Circuit synthesize_prep(const CodeInstance &code);

/// Pauli string anticommuting exactly with the generators flagged in `flip`.
PauliString sign_correction(std::span<const PauliString> generators, const std::vector<bool> &flip);

/// Every two-qubit gate is followed by a reversed-orientation pair that cancels.
Circuit inflate_two_qubit_gates(const Circuit &c, size_t num_qubits);

constexpr size_t kB2InflationFactor = 3;

Circuit make_b2_baseline(const CodeInstance &code);
Circuit make_b3_baseline(const CodeInstance &code);

struct Instance {
    std::string code_id;
    Task task = Task::B1;
    std::optional<Circuit> baseline;
    std::optional<CostTuple> baseline_cost;
    std::optional<FTReport> baseline_ft;
    size_t inflation_factor = 1;
    /// False when the baseline already scores FT = 1 (B3 only).
    bool has_headroom = true;
};

Instance make_instance(const CodeInstance &code, Task task, const FTOptions &ft_options = {});

/// Instances for every code in the suite; B3 excludes codes without headroom.
std::vector<Instance> make_instances(const Suite &suite, Task task, unsigned workers = 1);

}  // namespace stabench

#endif
