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

#include <gtest/gtest.h>

#include <random>

#include "dense_oracle.h"
#include "stabench/errors.h"
#include "stabench/tableau.h"

using namespace stabench;
using namespace stabench::testing;

namespace {

CodeInstance code_from(std::vector<std::string> gens, size_t distance = 2) {
    CodeInstance c;
    c.id = "test";
    c.num_qubits = gens[0].size();
    for (const auto &g : gens) {
        c.generators.push_back(PauliString::from_text(g));
    }
    c.num_qubits = c.generators[0].num_qubits();
    c.num_logical = c.num_qubits - c.generators.size();
    c.distance = distance;
    return c;
}

/// Stabilizer group of a random Clifford state restricted to a random subset of rows.
CodeInstance random_code(std::mt19937_64 &rng, size_t n) {
    auto t = simulate(random_unitary_circuit(rng, n, 4 * n), n);
    CodeInstance c;
    c.id = "random";
    c.num_qubits = n;
    size_t k = 1 + rng() % n;
    for (size_t i = 0; i < k; i++) {
        PauliString g = t.stabilizer(i);
        if (rng() & 1) {
            g.set_phase(g.phase() ^ 2);
        }
        c.generators.push_back(g);
    }
    c.num_logical = n - k;
    c.distance = 1;
    return c;
}

}  // namespace

TEST(synth, all_z_needs_nothing) {
    auto c = synthesize_prep(code_from({"ZII", "IZI", "IIZ"}));
    EXPECT_TRUE(c.instructions().empty());
    auto z = synthesize_prep(code_from({"ZZI", "IZZ"}));
    EXPECT_EQ(two_qubit_gate_count(z), 0u);
    EXPECT_TRUE(check_stabilizers(z, code_from({"ZZI", "IZZ"}).generators).valid);
}

TEST(synth, bell_pair_is_minimal) {
    auto code = code_from({"XX", "ZZ"});
    auto c = synthesize_prep(code);
    EXPECT_TRUE(check_stabilizers(c, code.generators).valid);
    EXPECT_EQ(cost(c), (CostTuple{1, 2}));

    // Exhaustive search over circuits with at most two gates.
    std::vector<Instruction> alphabet;
    for (GateKind g : {GateKind::H, GateKind::S, GateKind::S_DAG, GateKind::X, GateKind::Y, GateKind::Z}) {
        alphabet.push_back({g, {0}});
        alphabet.push_back({g, {1}});
    }
    for (GateKind g : {GateKind::CX, GateKind::CZ, GateKind::SWAP}) {
        alphabet.push_back({g, {0, 1}});
        alphabet.push_back({g, {1, 0}});
    }
    std::optional<CostTuple> best;
    auto consider = [&](const Circuit &cand) {
        if (check_stabilizers(cand, code.generators).valid && (!best || cost(cand) < *best)) {
            best = cost(cand);
        }
    };
    consider(Circuit());
    for (const auto &a : alphabet) {
        Circuit one;
        one.reserve_qubits(2);
        one.append(a.kind, a.targets);
        consider(one);
        for (const auto &b : alphabet) {
            Circuit two = one;
            two.append(b.kind, b.targets);
            consider(two);
        }
    }
    ASSERT_TRUE(best.has_value());
    EXPECT_EQ(*best, cost(c));
}

TEST(synth, signs_are_fixed) {
    auto code = code_from({"-XX", "-ZZ"});
    auto c = synthesize_prep(code);
    EXPECT_TRUE(check_stabilizers(c, code.generators).valid);
    auto y = code_from({"-YYI", "ZZI", "-IIZ"});
    EXPECT_TRUE(check_stabilizers(synthesize_prep(y), y.generators).valid);
}

TEST(synth, sign_correction_solves_pattern) {
    auto code = code_from({"XXXX", "ZZZZ", "XZZX"});
    for (int mask = 0; mask < 8; mask++) {
        std::vector<bool> flip{(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0};
        auto p = sign_correction(code.generators, flip);
        for (size_t i = 0; i < 3; i++) {
            EXPECT_EQ(!commutes(p, code.generators[i]), flip[i]);
        }
    }
}

TEST(synth, random_codes_against_dense_oracle) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; trial++) {
        size_t n = 1 + rng() % 6;
        auto code = random_code(rng, n);
        auto c = synthesize_prep(code);
        EXPECT_TRUE(check_stabilizers(c, code.generators).valid);
        StateVector sv(n);
        sv.apply(c);
        for (const auto &g : code.generators) {
            EXPECT_NEAR(std::abs(sv.expectation(g) - cd(1)), 0.0, 1e-9) << g.str() << "\n" << c.str();
        }
    }
}

TEST(synth, whole_suite_is_valid_and_deterministic) {
    auto suite = load_suite(default_manifest());
    for (const auto &code : suite.codes) {
        auto c = synthesize_prep(code);
        ASSERT_TRUE(check_stabilizers(c, code.generators).valid) << code.id;
        for (const auto &op : c.operations()) {
            ASSERT_NE(op.kind, GateKind::M);
            ASSERT_NE(op.kind, GateKind::R);
        }
        // Gate count stays within n * k plus the sign fixes.
        size_t bound = 2 * code.num_qubits * code.generator_count() + code.num_qubits;
        EXPECT_LE(c.operations().size(), bound) << code.id;
        if (code.id.find("__") == std::string::npos) {
            EXPECT_EQ(synthesize_prep(code).str(), c.str());
        }
    }
}

TEST(synth, malformed_codes_are_rejected) {
    EXPECT_THROW(synthesize_prep(code_from({"XX", "ZI"})), MalformedProblem);
    EXPECT_THROW(synthesize_prep(code_from({"ZZ", "ZZ"})), MalformedProblem);
}

TEST(synth, b2_baseline_inflation) {
    auto bell = code_from({"XX", "ZZ"});
    auto base = make_b2_baseline(bell);
    EXPECT_GT(two_qubit_gate_count(base), 1u);
    EXPECT_EQ(two_qubit_gate_count(base), kB2InflationFactor * two_qubit_gate_count(synthesize_prep(bell)));
    EXPECT_TRUE(check_stabilizers(base, bell.generators).valid);
    auto inst = make_instance(bell, Task::B2);
    EXPECT_EQ(inst.inflation_factor, kB2InflationFactor);
    EXPECT_EQ(inst.baseline_cost, cost(base));

    auto zz = code_from({"ZZI", "IZZ"});
    auto zbase = make_b2_baseline(zz);
    EXPECT_EQ(two_qubit_gate_count(zbase), 2u);
    EXPECT_TRUE(check_stabilizers(zbase, zz.generators).valid);
}

TEST(synth, b3_baseline_and_headroom) {
    auto steane = build_base_code(CodeFamily::named, {{"name", "steane"}});
    auto inst = make_instance(steane, Task::B3);
    ASSERT_TRUE(inst.baseline_ft.has_value());
    EXPECT_TRUE(inst.has_headroom);
    EXPECT_LT(inst.baseline_ft->ft_score, 1);
    EXPECT_EQ(inst.baseline_ft->false_flags, 0u);
    EXPECT_EQ(inst.baseline_ft->flagged_dangerous, 0u);
    EXPECT_EQ(inst.baseline_ft->ft_score, 0);
    EXPECT_EQ(inst.baseline_ft->total_locations, 7u * (depth(*inst.baseline) + 1) * 3);

    auto flat = code_from({"ZII", "IXI"}, 3);
    auto none = make_instance(flat, Task::B3);
    EXPECT_FALSE(none.has_headroom);
    EXPECT_EQ(none.baseline_ft->ft_score, 1);
}
