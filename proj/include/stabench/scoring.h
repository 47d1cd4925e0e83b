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


#ifndef STABENCH_SCORING_H
#define STABENCH_SCORING_H

#include <optional>
#include <string>
#include <vector>

#include "stabench/circuit.h"
#include "stabench/code.h"
#include "stabench/rational.h"
#include "stabench/tableau.h"

namespace stabench {

enum class Task { B1, B2, B3 };

std::string_view task_name(Task t);
Task task_from_name(std::string_view name);

struct Verdict {
    bool success = false;
    Rational quality = 0;
    size_t satisfied_generators = 0;
};

struct InstanceResult {
    std::string code_id;
    Task task = Task::B1;
    bool success = false;
    Rational quality = 0;
    size_t satisfied_generators = 0;
    std::optional<CostTuple> candidate_cost;
    std::optional<Rational> ft;
    size_t attempts_used = 0;

    bool operator==(const InstanceResult &other) const = default;
};

Verdict b1_success(const StabReport &report);

/// Strict lexicographic (g2q, depth) comparison.
bool b2_improvement(const CostTuple &candidate, const CostTuple &baseline);
/// 3/4 of the clamped relative two-qubit reduction plus 1/4 of the depth reduction.
Rational b2_quality(const CostTuple &baseline, const CostTuple &candidate);
Verdict b2_validity_and_quality(const CostTuple &baseline, const CostTuple &candidate, const StabReport &report);

Verdict b3_validity_and_quality(const Rational &base_ft, const Rational &candidate_ft, const StabReport &report);

/// Ordering for best-of-attempts: success first, then quality.
bool better_result(const InstanceResult &a, const InstanceResult &b);

struct CodeScore {
    std::string code_id;
    size_t num_generators = 0;
    bool success = false;
    Rational quality = 0;
    Rational contribution = 0;
};

struct BucketScore {
    size_t lo = 0;
    /// Inclusive; SIZE_MAX for the open-ended last bucket.
    size_t hi = 0;
    size_t num_codes = 0;
    size_t num_success = 0;
    uint64_t k_total = 0;
    uint64_t s_cap = 0;
    Rational s_qual = 0;
};

struct ScoreReport {
    Task task = Task::B1;
    uint64_t s_cap = 0;
    Rational s_qual = 0;
    uint64_t k_max = 0;
    size_t num_codes = 0;
    size_t num_results = 0;
    size_t num_success = 0;
    std::vector<CodeScore> per_code;
    std::vector<BucketScore> buckets;
};

/// Upper bucket edges (inclusive) by generator count.
std::vector<size_t> default_bucket_edges();

/// (code id, generator count) for each scored code.
using CodeWeights = std::vector<std::pair<std::string, size_t>>;

CodeWeights code_weights(const Suite &suite);

/// Scores one task over the given codes. Codes without a result count as failures.
ScoreReport aggregate(const std::vector<InstanceResult> &results, const CodeWeights &codes, Task task,
                      const std::vector<size_t> &bucket_edges = default_bucket_edges());
ScoreReport aggregate(const std::vector<InstanceResult> &results, const Suite &suite, Task task,
                      const std::vector<size_t> &bucket_edges = default_bucket_edges());

/// Plain-text summary with capability, quality and ceiling per bucket.
std::string format_score_table(const ScoreReport &report);

/// Cumulative capability against generator count, one CSV row per code in ascending k.
std::string difficulty_curve_csv(const ScoreReport &report);

}  // namespace stabench

#endif
