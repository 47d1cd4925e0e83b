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

#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "dense_oracle.h"
#include "stabench/errors.h"

using namespace stabench;

namespace {

Circuit random_mixed_circuit(std::mt19937_64 &rng, size_t n, size_t gates) {
    static const GateKind ALL[] = {GateKind::I,  GateKind::X,  GateKind::H,    GateKind::S, GateKind::S_DAG,
                                   GateKind::CX, GateKind::CZ, GateKind::SWAP, GateKind::R, GateKind::M,
                                   GateKind::TICK};
    Circuit c;
    for (size_t g = 0; g < gates; g++) {
        GateKind k = ALL[rng() % 11];
        if (k == GateKind::TICK) {
            c.append(k, {});
        } else if (is_two_qubit(k)) {
            uint32_t a = rng() % n, b = rng() % n;
            while (b == a) {
                b = rng() % n;
            }
            c.append(k, {a, b});
        } else {
            c.append(k, {(uint32_t)(rng() % n)});
        }
    }
    return c;
}

// Exhaustive search over layer assignments respecting per-qubit order.
size_t brute_force_depth(const Circuit &c) {
    auto ops = c.operations();
    size_t best = ops.size();
    std::vector<size_t> layer(ops.size());
    std::function<void(size_t, size_t)> rec = [&](size_t k, size_t cur_max) {
        if (cur_max >= best && k < ops.size()) {
            return;
        }
        if (k == ops.size()) {
            best = std::min(best, cur_max);
            return;
        }
        size_t lo = 1;
        for (size_t j = 0; j < k; j++) {
            for (uint32_t a : ops[j].targets()) {
                for (uint32_t b : ops[k].targets()) {
                    if (a == b) {
                        lo = std::max(lo, layer[j] + 1);
                    }
                }
            }
        }
        for (size_t l = lo; l <= ops.size(); l++) {
            bool clash = false;
            for (size_t j = 0; j < k && !clash; j++) {
                if (layer[j] != l) {
                    continue;
                }
                for (uint32_t a : ops[j].targets()) {
                    for (uint32_t b : ops[k].targets()) {
                        clash |= a == b;
                    }
                }
            }
            if (clash) {
                continue;
            }
            layer[k] = l;
            rec(k + 1, std::max(cur_max, l));
        }
    };
    rec(0, 0);
    return ops.empty() ? 0 : best;
}

// Longest dependency chain, computed independently of the ASAP scheduler.
size_t longest_chain(const Circuit &c) {
    auto ops = c.operations();
    std::vector<size_t> len(ops.size(), 1);
    size_t best = 0;
    for (size_t k = 0; k < ops.size(); k++) {
        for (size_t j = 0; j < k; j++) {
            for (uint32_t a : ops[j].targets()) {
                for (uint32_t b : ops[k].targets()) {
                    if (a == b) {
                        len[k] = std::max(len[k], len[j] + 1);
                    }
                }
            }
        }
        best = std::max(best, len[k]);
    }
    return best;
}

}  // namespace

TEST(circuit, parse_examples) {
    auto c = parse_circuit("H 0\nCX 0 1");
    EXPECT_EQ(c.instructions().size(), 2u);
    EXPECT_EQ(c.num_qubits(), 2u);

    auto b = parse_circuit("CX 0 2 1 3");
    ASSERT_EQ(b.instructions().size(), 1u);
    auto ops = b.operations();
    ASSERT_EQ(ops.size(), 2u);
    EXPECT_EQ(ops[0].qubits[0], 0u);
    EXPECT_EQ(ops[0].qubits[1], 2u);
    EXPECT_EQ(ops[1].qubits[0], 1u);
    EXPECT_EQ(ops[1].qubits[1], 3u);
    EXPECT_EQ(ops[1].group, 1u);

    auto ci = parse_circuit("  h 0 # comment\n\ncnot 1 0\nTICK\n  # only comment\nrz 2\nMZ 2\ns_dag 1");
    EXPECT_EQ(ci.str(), "H 0\nCX 1 0\nTICK\nR 2\nM 2\nS_DAG 1\n");
    EXPECT_EQ(parse_circuit("").instructions().size(), 0u);
}

TEST(circuit, parse_errors) {
    EXPECT_THROW(parse_circuit("CX 0 0"), ParseError);
    EXPECT_THROW(parse_circuit("CX 0 1 2"), ParseError);
    EXPECT_THROW(parse_circuit("CX 0 1 1 2"), ParseError);
    EXPECT_THROW(parse_circuit("H -1"), ParseError);
    EXPECT_THROW(parse_circuit("H 0x"), ParseError);
    EXPECT_THROW(parse_circuit("TICK 0"), ParseError);
    EXPECT_THROW(parse_circuit("DETECTOR rec[-1]"), ParseError);
    try {
        parse_circuit("H 0\nH 1\nT 2");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line, 3u);
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
    }
}

TEST(circuit, two_qubit_gate_count) {
    EXPECT_EQ(two_qubit_gate_count(parse_circuit("H 0")), 0u);
    EXPECT_EQ(two_qubit_gate_count(parse_circuit("CX 0 1 2 3")), 2u);
    EXPECT_EQ(two_qubit_gate_count(parse_circuit("H 0\nCX 0 1")), 1u);
    EXPECT_EQ(two_qubit_gate_count(parse_circuit("CZ 0 1\nSWAP 1 2\nR 0\nM 1\nTICK")), 2u);
}

TEST(circuit, depth_examples) {
    EXPECT_EQ(depth(Circuit()), 0u);
    EXPECT_EQ(depth(parse_circuit("H 0\nH 1")), 1u);
    EXPECT_EQ(depth(parse_circuit("H 0\nCX 0 1\nCX 1 2")), 3u);
    EXPECT_EQ(brute_force_depth(parse_circuit("H 0\nCX 0 1\nCX 1 2")), 3u);
    EXPECT_EQ(depth(parse_circuit("R 0\nM 0")), 2u);
    EXPECT_EQ(depth(parse_circuit("H 0\nTICK\nH 1")), 1u);
}

TEST(circuit, depth_matches_exhaustive_schedule_search) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 150; trial++) {
        size_t n = 2 + rng() % 5;
        auto c = random_mixed_circuit(rng, n, rng() % 9);
        ASSERT_EQ(depth(c), brute_force_depth(c)) << c.str();
    }
    for (int trial = 0; trial < 300; trial++) {
        size_t n = 2 + rng() % 5;
        auto c = random_mixed_circuit(rng, n, rng() % 31);
        ASSERT_EQ(depth(c), longest_chain(c)) << c.str();
    }
}

TEST(circuit, metric_properties) {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 300; trial++) {
        size_t n = 2 + rng() % 8;
        auto a = random_mixed_circuit(rng, n, rng() % 40);
        auto b = random_mixed_circuit(rng, n, rng() % 40);
        EXPECT_LE(depth(a), a.operations().size());
        Circuit ab = a;
        ab.append(b);
        EXPECT_EQ(two_qubit_gate_count(ab), two_qubit_gate_count(a) + two_qubit_gate_count(b));

        // Removing TICK does not change depth.
        Circuit no_tick;
        for (const auto &inst : a.instructions()) {
            if (inst.kind != GateKind::TICK) {
                no_tick.append(inst.kind, inst.targets);
            }
        }
        EXPECT_EQ(depth(a), depth(no_tick));

        auto text = emit_circuit(a);
        auto back = parse_circuit(text);
        EXPECT_EQ(back, a);
        EXPECT_EQ(emit_circuit(back), text);
    }
}

TEST(circuit, layered_view) {
    auto lv = layered_view(parse_circuit("H 0\nCX 0 1"));
    ASSERT_EQ(lv.layers.size(), 2u);
    EXPECT_EQ(lv.ops[lv.layers[0][0]].kind, GateKind::H);
    EXPECT_EQ(lv.ops[lv.layers[1][0]].kind, GateKind::CX);

    auto lv2 = layered_view(parse_circuit("H 0\nH 1\nCX 0 1"));
    ASSERT_EQ(lv2.layers.size(), 2u);
    EXPECT_EQ(lv2.layers[0].size(), 2u);
    EXPECT_EQ(lv2.layers[1].size(), 1u);

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; trial++) {
        size_t n = 2 + rng() % 6;
        auto c = random_mixed_circuit(rng, n, rng() % 40);
        auto lv3 = layered_view(c);
        EXPECT_EQ(lv3.depth(), depth(c));
        // Per-qubit gate order is preserved by reading layers in order.
        std::vector<std::vector<size_t>> by_qubit_prog(n), by_qubit_layer(n);
        for (size_t k = 0; k < lv3.ops.size(); k++) {
            for (uint32_t q : lv3.ops[k].targets()) {
                by_qubit_prog[q].push_back(k);
            }
        }
        for (const auto &layer : lv3.layers) {
            for (size_t k : layer) {
                for (uint32_t q : lv3.ops[k].targets()) {
                    by_qubit_layer[q].push_back(k);
                }
            }
        }
        EXPECT_EQ(by_qubit_prog, by_qubit_layer);
    }
}

TEST(circuit, inverse) {
    auto c = parse_circuit("H 0\nS 0\nCX 0 1\nS_DAG 1");
    EXPECT_EQ(inverse(c).str(), "S 1\nCX 0 1\nS_DAG 0\nH 0\n");
    EXPECT_THROW(inverse(parse_circuit("M 0")), std::invalid_argument);
}
