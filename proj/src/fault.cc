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


#include "stabench/fault.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "stabench/errors.h"
#include "stabench/parallel.h"
#include "stabench/tableau.h"

namespace stabench {

namespace {

constexpr char kPaulis[3] = {'X', 'Y', 'Z'};

size_t total_qubits(const LayeredCircuit &c, size_t num_data_qubits) {
    return std::max(c.num_qubits, num_data_qubits);
}

void check_location(const LayeredCircuit &c, const FaultLocation &f, size_t n) {
    if (f.qubit >= n || f.layer > c.depth() || (f.pauli != 'X' && f.pauli != 'Y' && f.pauli != 'Z')) {
        throw std::invalid_argument("invalid fault location " + fault_location_str(f));
    }
}

/// Measurement record index of each operation (unused for non-M operations).
std::vector<size_t> measurement_indices(const LayeredCircuit &c, size_t *count) {
    std::vector<size_t> out(c.ops.size(), 0);
    size_t m = 0;
    for (size_t i = 0; i < c.ops.size(); i++) {
        if (c.ops[i].kind == GateKind::M) {
            out[i] = m++;
        }
    }
    *count = m;
    return out;
}

struct Counts {
    uint64_t dangerous = 0;
    uint64_t flagged_dangerous = 0;
    uint64_t false_flags = 0;
    size_t max_unflagged_weight = 0;
};

}  // namespace

std::string fault_location_str(const FaultLocation &f) {
    return std::string(1, f.pauli) + std::to_string(f.qubit) + "@" + std::to_string(f.layer);
}

std::vector<FaultLocation> enumerate_fault_locations(const LayeredCircuit &c) {
    std::vector<FaultLocation> out;
    out.reserve(c.num_qubits * (c.depth() + 1) * 3);
    for (uint32_t j = 0; j <= c.depth(); j++) {
        for (uint32_t q = 0; q < c.num_qubits; q++) {
            for (char p : kPaulis) {
                out.push_back({q, j, p});
            }
        }
    }
    return out;
}

std::vector<FaultLocation> enumerate_fault_locations(const Circuit &c, size_t num_qubits) {
    LayeredCircuit layered = layered_view(c);
    layered.num_qubits = std::max(layered.num_qubits, num_qubits);
    return enumerate_fault_locations(layered);
}

PropagationResult propagate_fault(const LayeredCircuit &c, const FaultLocation &f, size_t num_data_qubits) {
    size_t n = total_qubits(c, num_data_qubits);
    check_location(c, f, n);
    size_t num_measurements = 0;
    auto meas = measurement_indices(c, &num_measurements);

    PropagationResult result;
    result.error = PauliString::single(n, f.qubit, f.pauli);
    result.flag_flips.assign(num_measurements, false);
    for (size_t layer = f.layer; layer < c.depth(); layer++) {
        for (size_t idx : c.layers[layer]) {
            const Operation &op = c.ops[idx];
            switch (op.kind) {
                case GateKind::R:
                    result.error.clear_qubit(op.qubits[0]);
                    break;
                case GateKind::M:
                    if (result.error.x(op.qubits[0])) {
                        result.flag_flips[meas[idx]] = true;
                        result.flagged = true;
                    }
                    break;
                default:
                    detail::conjugate_unchecked(result.error, op.kind, op.targets());
            }
        }
    }
    result.data_weight = weight_prefix(result.error, num_data_qubits);
    return result;
}

PropagationResult propagate_fault(const Circuit &c, const FaultLocation &f, size_t num_data_qubits) {
    return propagate_fault(layered_view(c), f, num_data_qubits);
}

size_t weight_of_variant(const Circuit &c, const FaultLocation &f, size_t num_data_qubits) {
    return propagate_fault(c, f, num_data_qubits).data_weight;
}

FrameBatchResult propagate_frame_batch(const LayeredCircuit &c, std::span<const FaultLocation> faults,
                                       size_t num_data_qubits) {
    if (faults.size() > 64) {
        throw std::invalid_argument("a frame batch holds at most 64 faults");
    }
    size_t n = total_qubits(c, num_data_qubits);
    FrameBatchResult result;
    result.data_weight.assign(faults.size(), 0);
    if (faults.empty()) {
        return result;
    }
    std::vector<uint32_t> order(faults.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](uint32_t a, uint32_t b) { return faults[a].layer < faults[b].layer; });
    for (const auto &f : faults) {
        check_location(c, f, n);
    }

    std::vector<uint64_t> fx(n, 0), fz(n, 0);
    size_t next = 0;
    for (size_t layer = faults[order[0]].layer; layer <= c.depth(); layer++) {
        for (; next < order.size() && faults[order[next]].layer == layer; next++) {
            const FaultLocation &f = faults[order[next]];
            uint64_t bit = uint64_t{1} << order[next];
            if (f.pauli != 'Z') {
                fx[f.qubit] ^= bit;
            }
            if (f.pauli != 'X') {
                fz[f.qubit] ^= bit;
            }
        }
        if (layer == c.depth()) {
            break;
        }
        for (size_t idx : c.layers[layer]) {
            const Operation &op = c.ops[idx];
            uint32_t a = op.qubits[0], b = op.qubits[1];
            switch (op.kind) {
                case GateKind::H:
                    std::swap(fx[a], fz[a]);
                    break;
                case GateKind::S:
                case GateKind::S_DAG:
                    fz[a] ^= fx[a];
                    break;
                case GateKind::CX:
                    fx[b] ^= fx[a];
                    fz[a] ^= fz[b];
                    break;
                case GateKind::CZ:
                    fz[a] ^= fx[b];
                    fz[b] ^= fx[a];
                    break;
                case GateKind::SWAP:
                    std::swap(fx[a], fx[b]);
                    std::swap(fz[a], fz[b]);
                    break;
                case GateKind::R:
                    fx[a] = 0;
                    fz[a] = 0;
                    break;
                case GateKind::M:
                    result.flagged |= fx[a];
                    break;
                default:
                    break;
            }
        }
    }
    for (size_t q = 0; q < num_data_qubits; q++) {
        for (uint64_t bits = fx[q] | fz[q]; bits != 0; bits &= bits - 1) {
            result.data_weight[std::countr_zero(bits)]++;
        }
    }
    if (faults.size() < 64) {
        result.flagged &= (uint64_t{1} << faults.size()) - 1;
    }
    return result;
}

FTReport ft_report(const LayeredCircuit &c, size_t num_data_qubits, size_t distance, const FTOptions &options) {
    LayeredCircuit layered = c;
    layered.num_qubits = total_qubits(c, num_data_qubits);
    auto locations = enumerate_fault_locations(layered);

    FTReport report;
    report.num_qubits = layered.num_qubits;
    report.num_data_qubits = num_data_qubits;
    report.threshold = distance == 0 ? 0 : (distance - 1) / 2;
    report.total_locations = locations.size();

    size_t batch = std::max<size_t>(64, (options.batch_size + 63) / 64 * 64);
    size_t num_chunks = (locations.size() + batch - 1) / batch;
    std::vector<Counts> chunk_counts(num_chunks);
    parallel_for(0, num_chunks, options.workers, [&](size_t chunk) {
        if (options.cancel != nullptr && options.cancel->cancelled()) {
            throw Cancelled("fault enumeration cancelled");
        }
        Counts counts;
        size_t end = std::min(locations.size(), (chunk + 1) * batch);
        for (size_t begin = chunk * batch; begin < end; begin += 64) {
            std::span<const FaultLocation> lanes(locations.data() + begin, std::min<size_t>(64, end - begin));
            auto r = propagate_frame_batch(layered, lanes, num_data_qubits);
            for (size_t lane = 0; lane < lanes.size(); lane++) {
                bool flagged = (r.flagged >> lane) & 1;
                bool dangerous = r.data_weight[lane] > report.threshold;
                counts.dangerous += dangerous;
                counts.flagged_dangerous += dangerous && flagged;
                counts.false_flags += !dangerous && flagged;
                if (!flagged) {
                    counts.max_unflagged_weight = std::max<size_t>(counts.max_unflagged_weight, r.data_weight[lane]);
                }
            }
        }
        chunk_counts[chunk] = counts;
    });
    for (const auto &counts : chunk_counts) {
        report.dangerous_count += counts.dangerous;
        report.flagged_dangerous += counts.flagged_dangerous;
        report.false_flags += counts.false_flags;
        report.max_unflagged_weight = std::max(report.max_unflagged_weight, counts.max_unflagged_weight);
    }
    if (report.dangerous_count > 0) {
        report.ft_score = Rational(report.flagged_dangerous, report.dangerous_count);
    }
    report.is_fault_tolerant = report.ft_score == 1 && report.fault_free_accepted;
    return report;
}

FTReport ft_score(const Circuit &c, const CodeInstance &code, const FTOptions &options) {
    std::vector<bool> outcomes;
    StabReport stab;
    try {
        outcomes = deterministic_flag_outcomes(c, code.num_qubits);
        stab = check_stabilizers(c, code.generators);
    } catch (const NondeterministicMeasurement &e) {
        throw StructuralError(e.what());
    }
    if (!stab.valid) {
        throw InvalidCandidate("circuit preserves " + std::to_string(stab.satisfied) + " of " +
                               std::to_string(stab.statuses.size()) + " generators");
    }
    FTReport report = ft_report(layered_view(c), code.num_qubits, code.distance, options);
    report.fault_free_accepted = std::none_of(outcomes.begin(), outcomes.end(), [](bool b) { return b; });
    report.is_fault_tolerant = report.ft_score == 1 && report.fault_free_accepted;
    return report;
}

}  // namespace stabench
