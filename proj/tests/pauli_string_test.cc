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

#include "stabench/pauli_string.h"

#include <gtest/gtest.h>

#include <random>

#include "dense_oracle.h"
#include "stabench/errors.h"

using namespace stabench;
using namespace stabench::testing;

namespace {

PauliString from_index(size_t n, size_t idx, uint8_t phase = 0) {
    PauliString p(n);
    for (size_t q = 0; q < n; q++) {
        p.set_pauli(q, "IXYZ"[(idx >> (2 * q)) & 3]);
    }
    p.set_phase(phase);
    return p;
}

Matrix scaled(const Matrix &m, cd s) {
    Matrix out = m;
    for (auto &v : out.data) {
        v *= s;
    }
    return out;
}

}  // namespace

TEST(pauli_string, parse_dense_and_sparse) {
    auto p = parse_pauli("+XX", 2);
    EXPECT_TRUE(p.x(0) && p.x(1));
    EXPECT_FALSE(p.z(0) || p.z(1));
    EXPECT_EQ(p.phase(), 0);

    auto q = parse_pauli("-Z0*Z1", 2);
    EXPECT_FALSE(q.x(0) || q.x(1));
    EXPECT_TRUE(q.z(0) && q.z(1));
    EXPECT_EQ(q.phase(), 2);

    auto id = parse_pauli("II", 2);
    EXPECT_TRUE(id.is_identity_up_to_phase());
    EXPECT_EQ(id.phase(), 0);

    EXPECT_EQ(parse_pauli("XYZ_", 4).str(), "+XYZ_");
    EXPECT_EQ(parse_pauli("-iY", 1).phase(), 3);
    EXPECT_EQ(parse_pauli("+I", 5), PauliString(5));
    EXPECT_EQ(parse_pauli("  X3 ", 4).str(), "+___X");
}

TEST(pauli_string, parse_errors) {
    try {
        parse_pauli("+XQ", 2);
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.column, 3u);
    }
    EXPECT_THROW(parse_pauli("X5", 3), std::out_of_range);
    EXPECT_THROW(parse_pauli("XX", 3), ParseError);
    EXPECT_THROW(parse_pauli("X0*", 3), ParseError);
    EXPECT_THROW(parse_pauli("X0*Z0", 3), ParseError);
    EXPECT_THROW(parse_pauli("", 3), ParseError);
    EXPECT_THROW(parse_pauli("-", 3), ParseError);
    EXPECT_THROW(parse_pauli("X0Z1", 3), ParseError);
}

TEST(pauli_string, round_trip_is_canonical) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 500; trial++) {
        size_t n = 1 + rng() % 70;
        auto p = random_pauli(rng, n);
        p.set_phase(rng() & 3);
        EXPECT_EQ(parse_pauli(p.str(), n), p);
        EXPECT_EQ(parse_pauli(p.sparse_str(), n), p);
        EXPECT_EQ(parse_pauli(emit_pauli(p), n).str(), p.str());
    }
}

TEST(pauli_string, commutes_examples) {
    EXPECT_TRUE(commutes(parse_pauli("XX", 2), parse_pauli("ZZ", 2)));
    EXPECT_FALSE(commutes(parse_pauli("X", 1), parse_pauli("Z", 1)));
    EXPECT_THROW(commutes(PauliString(2), PauliString(3)), std::invalid_argument);
}

TEST(pauli_string, steane_pair_commutes_by_dense_commutator) {
    auto g1 = parse_pauli("XXXXIII", 7);
    auto g4 = parse_pauli("ZZZZIII", 7);
    auto g5 = parse_pauli("IXXIXXI", 7);
    auto m1 = pauli_matrix(g1), m4 = pauli_matrix(g4), m5 = pauli_matrix(g5);
    EXPECT_TRUE((m1 * m4).approx_equal(m4 * m1));
    EXPECT_TRUE(commutes(g1, g4));
    EXPECT_TRUE((m4 * m5).approx_equal(m5 * m4));
    EXPECT_TRUE(commutes(g4, g5));
}

TEST(pauli_string, multiply_examples) {
    auto xz = multiply(parse_pauli("X", 1), parse_pauli("Z", 1));
    EXPECT_EQ(xz.pauli_at(0), 'Y');
    EXPECT_EQ(xz.phase(), 3);
    auto xx = multiply(parse_pauli("XX", 2), parse_pauli("XX", 2));
    EXPECT_EQ(xx, PauliString(2));
    auto zx = multiply(parse_pauli("ZZ", 2), parse_pauli("XX", 2));
    EXPECT_EQ(zx.pauli_at(0), 'Y');
    EXPECT_EQ(zx.pauli_at(1), 'Y');
    // (iY)(iY) = -YY.
    EXPECT_EQ(zx.phase(), 2);
}

TEST(pauli_string, multiply_matches_dense_exhaustive_two_qubit) {
    size_t checked = 0;
    for (size_t a = 0; a < 16; a++) {
        for (size_t b = 0; b < 16; b++) {
            for (uint8_t pa = 0; pa < 4; pa++) {
                auto pa_s = from_index(2, a, pa);
                auto pb_s = from_index(2, b, (uint8_t)(pa * 3 + 1));
                auto prod = multiply(pa_s, pb_s);
                ASSERT_TRUE(pauli_matrix(prod).approx_equal(pauli_matrix(pa_s) * pauli_matrix(pb_s)))
                    << pa_s << " * " << pb_s << " = " << prod;
                ASSERT_EQ(commutes(pa_s, pb_s), (pauli_matrix(pa_s) * pauli_matrix(pb_s))
                                                    .approx_equal(pauli_matrix(pb_s) * pauli_matrix(pa_s)));
                checked++;
            }
        }
    }
    EXPECT_EQ(checked, 1024u);
}

TEST(pauli_string, multiply_is_associative_across_words) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; trial++) {
        size_t n = 1 + rng() % 150;
        auto a = random_pauli(rng, n), b = random_pauli(rng, n), c = random_pauli(rng, n);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * a, PauliString(n));
        EXPECT_TRUE(commutes(a, a));
        EXPECT_TRUE(commutes(a, PauliString(n)));
        EXPECT_EQ(commutes(a, b), commutes(b, a));
        // ab = +-ba according to commutation.
        auto ab = a * b, ba = b * a;
        EXPECT_EQ(ab.phase() == ba.phase(), commutes(a, b));
    }
}

TEST(pauli_string, weight) {
    EXPECT_EQ(weight(parse_pauli("XX", 2)), 2u);
    EXPECT_EQ(weight(PauliString(4)), 0u);
    std::vector<size_t> support{0, 1};
    EXPECT_EQ(weight(parse_pauli("XXX", 3), support), 2u);
    auto big = PauliString::single(130, 129, 'Y');
    big.set_pauli(3, 'Z');
    EXPECT_EQ(weight(big), 2u);
    EXPECT_EQ(weight_prefix(big, 129), 1u);
    EXPECT_EQ(weight_prefix(big, 130), 2u);
    EXPECT_EQ(weight_prefix(big, 3), 0u);
}

TEST(pauli_string, conjugation_examples) {
    std::vector<uint32_t> cx{0, 1};
    EXPECT_EQ(conjugate_by_gate(parse_pauli("XI", 2), GateKind::CX, cx).str(), "+XX");
    EXPECT_EQ(conjugate_by_gate(parse_pauli("IZ", 2), GateKind::CX, cx).str(), "+ZZ");
    EXPECT_EQ(conjugate_by_gate(parse_pauli("ZI", 2), GateKind::CX, cx).str(), "+Z_");
    std::vector<uint32_t> dup{1, 1};
    EXPECT_THROW(conjugate_by_gate(PauliString(2), GateKind::CX, dup), std::invalid_argument);
    std::vector<uint32_t> one{0};
    EXPECT_THROW(conjugate_by_gate(PauliString(2), GateKind::M, one), std::invalid_argument);
}

TEST(pauli_string, conjugation_matches_dense_exhaustive) {
    const GateKind ones[] = {GateKind::I, GateKind::X, GateKind::Y, GateKind::Z,
                             GateKind::H, GateKind::S, GateKind::S_DAG};
    for (GateKind g : ones) {
        std::vector<uint32_t> t{0};
        Matrix u = gate_matrix(g, t, 1);
        for (size_t idx = 0; idx < 4; idx++) {
            for (uint8_t ph = 0; ph < 4; ph++) {
                auto p = from_index(1, idx, ph);
                auto c = conjugate_by_gate(p, g, t);
                ASSERT_TRUE(pauli_matrix(c).approx_equal(u * pauli_matrix(p) * u.adjoint()))
                    << gate_name(g) << " " << p << " -> " << c;
                ASSERT_EQ(conjugate_by_gate(c, inverse_gate(g), t), p);
            }
        }
    }
    const GateKind twos[] = {GateKind::CX, GateKind::CZ, GateKind::SWAP};
    for (GateKind g : twos) {
        for (auto t : {std::vector<uint32_t>{0, 1}, std::vector<uint32_t>{1, 0}}) {
            Matrix u = gate_matrix(g, t, 2);
            for (size_t idx = 0; idx < 16; idx++) {
                auto p = from_index(2, idx, idx % 4);
                auto c = conjugate_by_gate(p, g, t);
                ASSERT_TRUE(pauli_matrix(c).approx_equal(u * pauli_matrix(p) * u.adjoint()))
                    << gate_name(g) << " " << p << " -> " << c;
                ASSERT_EQ(conjugate_by_gate(c, inverse_gate(g), t), p);
            }
        }
    }
    // Sanity check of the oracle itself: S X S^dag = Y.
    std::vector<uint32_t> t{0};
    Matrix s = gate_matrix(GateKind::S, t, 1);
    EXPECT_TRUE((s * pauli_matrix(parse_pauli("X", 1)) * s.adjoint()).approx_equal(pauli_matrix(parse_pauli("Y", 1))));
    EXPECT_FALSE(scaled(pauli_matrix(parse_pauli("Y", 1)), -1).approx_equal(pauli_matrix(parse_pauli("Y", 1))));
}

TEST(pauli_string, conjugation_preserves_commutation_and_bounds_weight) {
    std::mt19937_64 rng(9);
    const GateKind gates[] = {GateKind::H, GateKind::S, GateKind::S_DAG, GateKind::CX, GateKind::CZ, GateKind::SWAP};
    for (int trial = 0; trial < 2000; trial++) {
        size_t n = 2 + rng() % 100;
        auto a = random_pauli(rng, n), b = random_pauli(rng, n);
        GateKind g = gates[rng() % 6];
        std::vector<uint32_t> t{(uint32_t)(rng() % n)};
        if (gate_arity(g) == 2) {
            uint32_t o = (uint32_t)(rng() % n);
            while (o == t[0]) {
                o = (uint32_t)(rng() % n);
            }
            t.push_back(o);
        }
        auto ca = conjugate_by_gate(a, g, t), cb = conjugate_by_gate(b, g, t);
        ASSERT_EQ(commutes(a, b), commutes(ca, cb));
        ASSERT_LE(weight(ca), weight(a) + t.size());
        ASSERT_EQ(ca * cb, conjugate_by_gate(a * b, g, t));
    }
}

TEST(pauli_string, embedding) {
    auto p = parse_pauli("-XZ", 2);
    EXPECT_EQ(p.extended(4).str(), "-XZ__");
    EXPECT_EQ(p.embedded(5, 2).str(), "-__XZ_");
    EXPECT_THROW(p.embedded(3, 2), std::invalid_argument);
}
