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


#include "stabench/scoring.h"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>

namespace stabench {

namespace {

Rational clamped_delta(size_t baseline, size_t candidate) {
    if (baseline == 0) {
        return 0;
    }
    Rational d = Rational((int64_t)baseline - (int64_t)candidate, (int64_t)baseline);
    return std::clamp(d, Rational(0), Rational(1));
}

std::string bucket_label(const BucketScore &b) {
    if (b.hi == SIZE_MAX) {
        return ">" + std::to_string(b.lo - 1);
    }
    return std::to_string(b.lo) + "-" + std::to_string(b.hi);
}

std::string fixed(const Rational &r, int digits) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(digits) << rational_to_double(r);
    return out.str();
}

}  // namespace

std::string_view task_name(Task t) {
    switch (t) {
        case Task::B1:
            return "B1";
        case Task::B2:
            return "B2";
        case Task::B3:
            return "B3";
    }
    return "?";
}

Task task_from_name(std::string_view name) {
    if (name == "B1" || name == "b1") {
        return Task::B1;
    }
    if (name == "B2" || name == "b2") {
        return Task::B2;
    }
    if (name == "B3" || name == "b3") {
        return Task::B3;
    }
    throw std::invalid_argument("unknown task '" + std::string(name) + "'");
}

Verdict b1_success(const StabReport &report) {
    return {report.valid, 1, report.satisfied};
}

bool b2_improvement(const CostTuple &candidate, const CostTuple &baseline) {
    return candidate < baseline;
}

Rational b2_quality(const CostTuple &baseline, const CostTuple &candidate) {
    return Rational(3, 4) * clamped_delta(baseline.g2q, candidate.g2q) +
           Rational(1, 4) * clamped_delta(baseline.depth, candidate.depth);
}

Verdict b2_validity_and_quality(const CostTuple &baseline, const CostTuple &candidate, const StabReport &report) {
    Verdict v;
    v.satisfied_generators = report.satisfied;
    v.success = report.valid && b2_improvement(candidate, baseline);
    v.quality = v.success ? b2_quality(baseline, candidate) : Rational(0);
    return v;
}

Verdict b3_validity_and_quality(const Rational &base_ft, const Rational &candidate_ft, const StabReport &report) {
    Verdict v;
    v.satisfied_generators = report.satisfied;
    v.success = report.valid && candidate_ft > base_ft;
    v.quality = v.success ? candidate_ft : Rational(0);
    return v;
}

bool better_result(const InstanceResult &a, const InstanceResult &b) {
    if (a.success != b.success) {
        return a.success;
    }
    return a.quality > b.quality;
}

std::vector<size_t> default_bucket_edges() {
    return {38, 80, 132};
}

CodeWeights code_weights(const Suite &suite) {
    CodeWeights out;
    for (const auto &c : suite.codes) {
        out.push_back({c.id, c.generator_count()});
    }
    return out;
}

ScoreReport aggregate(const std::vector<InstanceResult> &results, const Suite &suite, Task task,
                      const std::vector<size_t> &bucket_edges) {
    return aggregate(results, code_weights(suite), task, bucket_edges);
}

ScoreReport aggregate(const std::vector<InstanceResult> &results, const CodeWeights &codes, Task task,
                      const std::vector<size_t> &bucket_edges) {
    if (!std::is_sorted(bucket_edges.begin(), bucket_edges.end()) ||
        std::adjacent_find(bucket_edges.begin(), bucket_edges.end()) != bucket_edges.end()) {
        throw std::invalid_argument("bucket edges must be strictly increasing");
    }
    std::map<std::string_view, size_t> known;
    for (const auto &[id, k] : codes) {
        if (!known.emplace(id, k).second) {
            throw std::invalid_argument("code '" + id + "' listed twice");
        }
    }
    std::map<std::string_view, const InstanceResult *> by_code;
    for (const auto &r : results) {
        if (r.task != task) {
            throw std::invalid_argument("result for " + r.code_id + " is task " + std::string(task_name(r.task)) +
                                        ", expected " + std::string(task_name(task)));
        }
        if (!known.count(r.code_id)) {
            throw std::invalid_argument("unknown code id '" + r.code_id + "'");
        }
        if (!by_code.emplace(r.code_id, &r).second) {
            throw std::invalid_argument("more than one result for code '" + r.code_id + "'");
        }
        if (r.quality < 0 || r.quality > 1) {
            throw std::invalid_argument("quality for '" + r.code_id + "' is outside [0, 1]");
        }
    }

    ScoreReport report;
    report.task = task;
    report.num_results = results.size();
    size_t lo = 0;
    for (size_t edge : bucket_edges) {
        report.buckets.push_back({lo, edge});
        lo = edge + 1;
    }
    report.buckets.push_back({lo, SIZE_MAX});

    for (const auto &[id, k] : codes) {
        CodeScore cs;
        cs.code_id = id;
        cs.num_generators = k;
        auto it = by_code.find(id);
        if (it != by_code.end() && it->second->success) {
            cs.success = true;
            cs.quality = it->second->quality;
            cs.contribution = cs.quality * cs.num_generators;
        }
        report.k_max += cs.num_generators;
        report.num_codes++;
        auto &bucket = *std::find_if(report.buckets.begin(), report.buckets.end(),
                                     [&](const BucketScore &b) { return cs.num_generators <= b.hi; });
        bucket.num_codes++;
        bucket.k_total += cs.num_generators;
        if (cs.success) {
            report.num_success++;
            report.s_cap += cs.num_generators;
            report.s_qual += cs.contribution;
            bucket.num_success++;
            bucket.s_cap += cs.num_generators;
            bucket.s_qual += cs.contribution;
        }
        report.per_code.push_back(std::move(cs));
    }
    return report;
}

std::string format_score_table(const ScoreReport &report) {
    std::ostringstream out;
    out << "task " << task_name(report.task) << ": S_cap " << report.s_cap << " / " << report.k_max << ", S_qual "
        << fixed(report.s_qual, 3) << " (" << rational_str(report.s_qual) << "), solved " << report.num_success
        << " / " << report.num_codes << "\n";
    out << std::left << std::setw(12) << "stabilizers" << std::right << std::setw(8) << "codes" << std::setw(8)
        << "solved" << std::setw(10) << "S_cap" << std::setw(12) << "S_qual" << std::setw(10) << "ceiling" << "\n";
    for (const auto &b : report.buckets) {
        if (b.num_codes == 0) {
            continue;
        }
        out << std::left << std::setw(12) << bucket_label(b) << std::right << std::setw(8) << b.num_codes
            << std::setw(8) << b.num_success << std::setw(10) << b.s_cap << std::setw(12) << fixed(b.s_qual, 3)
            << std::setw(10) << b.k_total << "\n";
    }
    return out.str();
}

std::string difficulty_curve_csv(const ScoreReport &report) {
    std::vector<const CodeScore *> order;
    for (const auto &c : report.per_code) {
        order.push_back(&c);
    }
    std::stable_sort(order.begin(), order.end(),
                     [](const CodeScore *a, const CodeScore *b) { return a->num_generators < b->num_generators; });
    std::ostringstream out;
    out << "code_id,stabilizers,success,quality,cumulative_s_cap,cumulative_s_qual,cumulative_ceiling\n";
    uint64_t cap = 0, ceiling = 0;
    Rational qual = 0;
    for (const auto *c : order) {
        ceiling += c->num_generators;
        if (c->success) {
            cap += c->num_generators;
            qual += c->contribution;
        }
        out << c->code_id << "," << c->num_generators << "," << (c->success ? 1 : 0) << "," << fixed(c->quality, 6)
            << "," << cap << "," << fixed(qual, 6) << "," << ceiling << "\n";
    }
    return out.str();
}

}  // namespace stabench
