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

#include "stabench/code.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "stabench/gf2.h"

using namespace stabench;

namespace {

CodeInstance named_code(const std::string &name) {
    return build_base_code(CodeFamily::named, {{"name", name}});
}

// Distance by enumerating all 4^n Paulis against the explicitly listed stabilizer group.
size_t full_enumeration_distance(const CodeInstance &c) {
    size_t n = c.num_qubits, k = c.generator_count();
    std::set<std::pair<uint64_t, uint64_t>> group;
    for (uint64_t mask = 0; mask < (uint64_t{1} << k); mask++) {
        PauliString p(n);
        for (size_t i = 0; i < k; i++) {
            if ((mask >> i) & 1) {
                p *= c.generators[i];
            }
        }
        group.insert({p.x_words()[0], p.z_words()[0]});
    }
    size_t best = n + 1;
    for (uint64_t xs = 0; xs < (uint64_t{1} << n); xs++) {
        for (uint64_t zs = 0; zs < (uint64_t{1} << n); zs++) {
            size_t w = (size_t)__builtin_popcountll(xs | zs);
            if (w == 0 || w >= best || group.count({xs, zs})) {
                continue;
            }
            PauliString p(n);
            p.x_words_mut()[0] = xs;
            p.z_words_mut()[0] = zs;
            bool central = true;
            for (const auto &g : c.generators) {
                central &= commutes(p, g);
            }
            if (central) {
                best = w;
            }
        }
    }
    return best;
}

CodeInstance as_non_css(const CodeInstance &c) {
    // Conjugating one qubit by S turns X into Y there, so the fast CSS path is bypassed.
    CodeInstance out = c;
    for (auto &g : out.generators) {
        std::vector<uint32_t> t{0};
        conjugate_in_place(g, GateKind::S, t);
    }
    return out;
}

}  // namespace

TEST(code, named_examples) {
    auto det = named_code("detector4");
    EXPECT_EQ(det.num_qubits, 4u);
    EXPECT_EQ(det.generators[0].str(), "+XXXX");
    EXPECT_EQ(det.generators[1].str(), "+ZZZZ");
    EXPECT_EQ(det.distance, 2u);

    auto steane = named_code("steane");
    EXPECT_EQ(steane.num_qubits, 7u);
    EXPECT_EQ(steane.generator_count(), 6u);
    EXPECT_EQ(steane.num_logical, 1u);
    EXPECT_EQ(steane.distance, 3u);

    auto s3 = build_base_code(CodeFamily::rotated_surface, {{"d", "3"}});
    EXPECT_EQ(s3.num_qubits, 9u);
    EXPECT_EQ(s3.generator_count(), 8u);
    EXPECT_EQ(s3.num_logical, 1u);
    EXPECT_EQ(s3.id, "surface_d3");

    EXPECT_THROW(build_base_code(CodeFamily::rotated_surface, {{"d", "4"}}), std::invalid_argument);
    EXPECT_THROW(build_base_code(CodeFamily::named, {{"name", "nope"}}), std::invalid_argument);
    EXPECT_THROW(build_base_code(CodeFamily::bb, {}), std::invalid_argument);
}

TEST(code, base_code_parameter_table) {
    struct Row {
        const char *id;
        size_t n, k_i, k, d;
    };
    const Row expected[] = {
        {"surface_d3", 9, 8, 1, 3},         {"surface_d5", 25, 24, 1, 5},      {"surface_d7", 49, 48, 1, 7},
        {"color_hex_d3", 7, 6, 1, 3},       {"color_hex_d5", 19, 18, 1, 5},    {"color_hex_d7", 37, 36, 1, 7},
        {"color_sqoct_d3", 7, 6, 1, 3},     {"color_sqoct_d5", 17, 16, 1, 5},  {"color_sqoct_d7", 31, 30, 1, 7},
        {"iceberg_m2", 4, 2, 2, 2},         {"iceberg_m3", 6, 2, 4, 2},        {"iceberg_m4", 8, 2, 6, 2},
        {"hypercube_l1", 6, 2, 4, 2},       {"hypercube_l2", 36, 20, 16, 4},   {"bb_72", 72, 60, 12, 6},
        {"bb_90", 90, 82, 8, 10},           {"perfect5", 5, 4, 1, 3},          {"steane", 7, 6, 1, 3},
        {"hamming15", 15, 8, 7, 3},         {"golay23", 23, 22, 1, 7},         {"shor9", 9, 8, 1, 3},
        {"tetrahedral15", 15, 14, 1, 3},    {"carbon12", 12, 10, 2, 4},        {"detector4", 4, 2, 2, 2},
    };
    auto specs = default_base_codes();
    ASSERT_EQ(specs.size(), 24u);
    size_t total = 0;
    for (size_t i = 0; i < specs.size(); i++) {
        auto c = build_base_code(specs[i]);
        EXPECT_EQ(c.id, expected[i].id);
        EXPECT_EQ(base_code_id(specs[i]), c.id);
        EXPECT_EQ(c.num_qubits, expected[i].n) << c.id;
        EXPECT_EQ(c.generator_count(), expected[i].k_i) << c.id;
        EXPECT_EQ(c.num_logical, expected[i].k) << c.id;
        EXPECT_EQ(c.distance, expected[i].d) << c.id;
        auto report = validate_code(c);
        EXPECT_TRUE(report.ok()) << c.id << ": " << (report.failures.empty() ? "" : report.failures[0]);
        EXPECT_EQ(report.rank, c.generator_count());
        total += c.generator_count();
    }
    EXPECT_EQ(total, 436u);
}

TEST(code, validate_reports_failures) {
    CodeInstance bad;
    bad.num_qubits = 2;
    bad.generators = {parse_pauli("XX", 2), parse_pauli("ZI", 2)};
    bad.num_logical = 0;
    auto r = validate_code(bad);
    EXPECT_FALSE(r.ok());
    EXPECT_FALSE(r.commuting);

    CodeInstance neg;
    neg.num_qubits = 2;
    neg.generators = {parse_pauli("ZZ", 2), parse_pauli("-ZZ", 2)};
    neg.num_logical = 0;
    auto r2 = validate_code(neg);
    EXPECT_FALSE(r2.excludes_minus_identity);
    EXPECT_FALSE(r2.independent);

    CodeInstance dup;
    dup.num_qubits = 2;
    dup.generators = {parse_pauli("ZZ", 2), parse_pauli("ZZ", 2)};
    auto r3 = validate_code(dup);
    EXPECT_TRUE(r3.excludes_minus_identity);
    EXPECT_FALSE(r3.independent);

    CodeInstance imag;
    imag.num_qubits = 1;
    imag.generators = {parse_pauli("iZ", 1)};
    EXPECT_FALSE(validate_code(imag).hermitian);

    CodeInstance wrong_len;
    wrong_len.num_qubits = 3;
    wrong_len.generators = {parse_pauli("ZZ", 2)};
    EXPECT_FALSE(validate_code(wrong_len).ok());
}

TEST(code, brute_force_distance_matches_full_enumeration) {
    for (const char *name : {"detector4", "perfect5", "steane", "shor9"}) {
        auto c = named_code(name);
        size_t oracle = full_enumeration_distance(c);
        EXPECT_EQ(oracle, c.distance) << name;
        EXPECT_EQ(brute_force_distance(c, 9), oracle) << name;
        EXPECT_EQ(brute_force_distance(as_non_css(c), 9), oracle) << name;
    }
    for (const char *m : {"2", "3"}) {
        auto c = build_base_code(CodeFamily::iceberg, {{"m", m}});
        EXPECT_EQ(full_enumeration_distance(c), 2u);
        EXPECT_EQ(brute_force_distance(c, 4), 2u);
    }
    auto sq = build_base_code(CodeFamily::color_sqoct, {{"d", "3"}});
    EXPECT_EQ(full_enumeration_distance(sq), 3u);
}

TEST(code, brute_force_distance_small_suite_members) {
    for (const auto &spec : default_base_codes()) {
        auto c = build_base_code(spec);
        if (c.num_qubits > 16) {
            continue;
        }
        EXPECT_EQ(brute_force_distance(c, c.distance + 1), c.distance) << c.id;
        // The general route agrees with the CSS fast path.
        EXPECT_EQ(brute_force_distance(as_non_css(c), c.distance), c.distance) << c.id;
    }
}

TEST(code, brute_force_distance_larger_codes) {
    for (const char *id : {"surface_d5", "color_hex_d5", "color_hex_d7", "color_sqoct_d5", "color_sqoct_d7",
                           "golay23", "hypercube_l2", "surface_d7"}) {
        const CodeInstance *found = nullptr;
        Suite base = load_suite(SuiteManifest{"1", default_base_codes(), {}, 0});
        found = base.find(id);
        ASSERT_NE(found, nullptr);
        EXPECT_EQ(brute_force_distance(*found, found->distance), found->distance) << id;
    }
}

TEST(code, brute_force_distance_limits) {
    auto steane = named_code("steane");
    EXPECT_FALSE(brute_force_distance(steane, 2).has_value());
    auto bb = build_base_code(CodeFamily::bb, {{"n", "90"}});
    EXPECT_FALSE(brute_force_distance(bb, 10, 1'000'000).has_value());
    EXPECT_EQ(brute_force_distance(bb, 3), std::nullopt);
}

TEST(code, tensor_product) {
    auto det = named_code("detector4");
    auto dd = tensor_product(det, det);
    EXPECT_EQ(dd.num_qubits, 8u);
    EXPECT_EQ(dd.generator_count(), 4u);
    EXPECT_EQ(dd.distance, 2u);
    EXPECT_EQ(dd.id, "detector4__detector4");
    EXPECT_TRUE(validate_code(dd).ok());

    auto ss = tensor_product(named_code("steane"), named_code("shor9"));
    EXPECT_EQ(ss.num_qubits, 16u);
    EXPECT_EQ(ss.generator_count(), 14u);
    EXPECT_EQ(validate_code(ss).rank, 14u);
    EXPECT_EQ(brute_force_distance(ss, 4), 3u);

    CodeInstance empty;
    auto same = tensor_product(named_code("perfect5"), empty);
    EXPECT_EQ(same.id, "perfect5");
    EXPECT_EQ(same.generators, named_code("perfect5").generators);
}

TEST(code, tensor_product_is_symmetric_up_to_relabeling) {
    auto specs = default_base_codes();
    std::vector<CodeInstance> base;
    for (const auto &s : specs) {
        base.push_back(build_base_code(s));
    }
    for (size_t a = 0; a < base.size(); a += 5) {
        for (size_t b = 1; b < base.size(); b += 7) {
            auto ab = tensor_product(base[a], base[b]);
            auto ba = tensor_product(base[b], base[a]);
            EXPECT_EQ(ab.num_qubits, ba.num_qubits);
            EXPECT_EQ(ab.generator_count(), ba.generator_count());
            EXPECT_EQ(ab.distance, ba.distance);
            // Move b's block in ba to the front and compare generator multisets.
            size_t na = base[a].num_qubits, nb = base[b].num_qubits;
            std::multiset<std::string> lhs, rhs;
            for (const auto &g : ab.generators) {
                lhs.insert(g.str());
            }
            for (const auto &g : ba.generators) {
                PauliString moved(na + nb);
                moved.set_phase(g.phase());
                for (size_t q = 0; q < na + nb; q++) {
                    size_t dst = q < nb ? q + na : q - nb;
                    moved.set_pauli(dst, g.pauli_at(q));
                }
                rhs.insert(moved.str());
            }
            EXPECT_EQ(lhs, rhs);
        }
    }
}

TEST(code, default_manifest_and_suite) {
    auto m = default_manifest();
    EXPECT_EQ(m.base_codes.size(), 24u);
    EXPECT_EQ(m.product_pairs.size(), 168u);
    EXPECT_EQ(m.declared_total_generators, 16340u);
    auto suite = load_suite(m, 2);
    ASSERT_EQ(suite.codes.size(), 192u);
    size_t min_k = SIZE_MAX, max_k = 0, min_prod = SIZE_MAX, max_prod = 0;
    for (size_t i = 0; i < suite.codes.size(); i++) {
        size_t k = suite.codes[i].generator_count();
        min_k = std::min(min_k, k);
        max_k = std::max(max_k, k);
        if (i >= 24) {
            min_prod = std::min(min_prod, k);
            max_prod = std::max(max_prod, k);
            EXPECT_EQ(suite.codes[i].family, CodeFamily::tensor_product);
            EXPECT_TRUE(suite.codes[i].parents.has_value());
        }
    }
    EXPECT_GE(min_k, 2u);
    EXPECT_LE(max_k, 194u);
    EXPECT_GE(min_prod, 18u);
    EXPECT_LE(max_prod, 194u);
    EXPECT_NE(suite.total_generators, 16340u);
    EXPECT_EQ(suite.warnings.size(), 1u);
    // Pairing is deterministic.
    EXPECT_EQ(default_manifest().product_pairs, m.product_pairs);
}

TEST(code, manifest_errors) {
    SuiteManifest dup{"1", {{CodeFamily::named, {{"name", "steane"}}}, {CodeFamily::named, {{"name", "steane"}}}},
                      {}, 0};
    EXPECT_THROW(load_suite(dup), std::invalid_argument);
    SuiteManifest unknown{"1", {{CodeFamily::named, {{"name", "steane"}}}}, {{"steane", "golay23"}}, 0};
    EXPECT_THROW(load_suite(unknown), std::invalid_argument);
    SuiteManifest dup_pair{"1",
                           {{CodeFamily::named, {{"name", "steane"}}}, {CodeFamily::named, {{"name", "shor9"}}}},
                           {{"steane", "shor9"}, {"steane", "shor9"}},
                           0};
    EXPECT_THROW(load_suite(dup_pair), std::invalid_argument);
    SuiteManifest base_only{"1", default_base_codes(), {}, 436};
    auto s = load_suite(base_only);
    EXPECT_EQ(s.total_generators, 436u);
    EXPECT_TRUE(s.warnings.empty());
}
