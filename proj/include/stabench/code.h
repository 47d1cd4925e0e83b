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

#ifndef STABENCH_CODE_H
#define STABENCH_CODE_H

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stabench/pauli_string.h"

namespace stabench {

enum class CodeFamily { rotated_surface, color_hex, color_sqoct, iceberg, hypercube, bb, named, tensor_product };

std::string_view family_name(CodeFamily f);
CodeFamily family_from_name(std::string_view name);

/// A stabilizer code given by an independent, commuting set of Hermitian generators.
struct CodeInstance {
    std::string id;
    CodeFamily family = CodeFamily::named;
    std::map<std::string, std::string> params;
    size_t num_qubits = 0;
    std::vector<PauliString> generators;
    size_t num_logical = 0;
    size_t distance = 0;
    std::optional<std::pair<std::string, std::string>> parents;

    size_t generator_count() const {
        return generators.size();
    }
    /// Every generator is X-only or Z-only.
    bool is_css() const;
    /// Every generator is Z-only, so |0...0> already carries all +1 eigenvalues when signs are +.
    bool is_all_z() const;
};

/// (family, params) entry of a manifest.
struct BaseCodeSpec {
    CodeFamily family;
    std::map<std::string, std::string> params;
};

/// Builds one of the base codes:
///   rotated_surface {d: 3|5|7}, color_hex {d: 3|5|7}, color_sqoct {d: 3|5|7},
///   iceberg {m: 2|3|4}, hypercube {l: 1|2}, bb {n: 72|90},
///   named {name: detector4|perfect5|steane|shor9|hamming15|tetrahedral15|golay23|carbon12}.
CodeInstance build_base_code(const BaseCodeSpec &spec);
CodeInstance build_base_code(CodeFamily family, const std::map<std::string, std::string> &params);

/// Direct product on disjoint qubits: a on [0, n_a), b on [n_a, n_a + n_b).
CodeInstance tensor_product(const CodeInstance &a, const CodeInstance &b);

struct ValidationReport {
    bool commuting = true;
    bool hermitian = true;
    bool lengths_consistent = true;
    bool independent = true;
    bool excludes_minus_identity = true;
    bool logical_count_consistent = true;
    size_t rank = 0;
    std::vector<std::string> failures;

    bool ok() const {
        return failures.empty();
    }
};

/// Never throws on bad codes; failures are listed in the report.
ValidationReport validate_code(const CodeInstance &c);

/// Minimum weight of a Pauli commuting with every generator but outside the
/// stabilizer group. Returns nullopt when no such Pauli has weight <= max_weight,
/// or when the enumeration would exceed `budget` candidate supports.
std::optional<size_t> brute_force_distance(const CodeInstance &c, size_t max_weight,
                                           uint64_t budget = 2'000'000'000ull);

struct SuiteManifest {
    std::string version = "1";
    std::vector<BaseCodeSpec> base_codes;
    std::vector<std::pair<std::string, std::string>> product_pairs;
    uint64_t declared_total_generators = 0;
};

struct Suite {
    std::vector<CodeInstance> codes;
    uint64_t total_generators = 0;
    uint64_t declared_total_generators = 0;
    std::vector<std::string> warnings;

    const CodeInstance *find(std::string_view id) const;
};

/// Stable id of a base code, e.g. "surface_d3" or "steane".
std::string base_code_id(const BaseCodeSpec &spec);

/// The 24 base codes in canonical order.
std::vector<BaseCodeSpec> default_base_codes();

/// Pairing rule for the default product set: every unordered pair of distinct
/// base codes with k_a + k_b >= min_sum, sorted by (k_a + k_b descending, base
/// index of a, base index of b), truncated to `count` pairs.
std::vector<std::pair<std::string, std::string>> default_product_pairs(const std::vector<CodeInstance> &base,
                                                                       size_t count = 168, size_t min_sum = 18);

SuiteManifest default_manifest();

/// Builds and validates every code. Throws on unknown pair ids, duplicate ids or invalid codes.
/// A total generator count different from the declared one is only a warning.
Suite load_suite(const SuiteManifest &manifest, unsigned workers = 1);

}  // namespace stabench

#endif
