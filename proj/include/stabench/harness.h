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


#ifndef STABENCH_HARNESS_H
#define STABENCH_HARNESS_H

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stabench/agent.h"
#include "stabench/json_io.h"
#include "stabench/scoring.h"
#include "stabench/synth.h"

namespace stabench {

inline constexpr std::string_view kRunRecordSchema = "stabench-run/1";

class PersistenceError : public std::runtime_error {
   public:
    PersistenceError(const std::string &message, std::string recovery_path)
        : std::runtime_error(message), recovery_path(std::move(recovery_path)) {
    }
    std::string recovery_path;
};

/// One-shot tools. Responses carry "ok"; failures carry an "error" object instead of throwing.
Json tool_check_stabilizers(std::string_view circuit_text, const CodeInstance &code);
Json tool_evaluate_optimization(std::string_view candidate_text, const Circuit &baseline, const CodeInstance &code);
Json tool_check_fault_tolerance(std::string_view candidate_text, const CodeInstance &code, const Rational &baseline_ft,
                                const FTOptions &options = {});

/// Tool access for one instance under an attempt budget.
class OracleSession {
   public:
    OracleSession(const CodeInstance &code, const Instance &instance, size_t attempt_budget,
                  FTOptions ft_options = {});

    /// Evaluates a submission and consumes one attempt; refuses once the budget is spent.
    Json submit(std::string_view circuit_text);

    size_t used() const {
        return used_;
    }
    size_t remaining() const {
        return budget_ - used_;
    }

   private:
    const CodeInstance &code_;
    const Instance &instance_;
    size_t budget_;
    size_t used_ = 0;
    FTOptions ft_options_;
};

/// Task inputs sent to the agent.
Json task_inputs(const CodeInstance &code, const Instance &instance);

struct AttemptRecord {
    size_t index = 0;
    std::string circuit;
    Json response;
    double elapsed_seconds = 0;
};

struct InstanceRecord {
    std::string code_id;
    size_t num_generators = 0;
    /// "success", "give_up", "budget_exhausted", "timeout" or "error".
    std::string ended_by;
    std::string error;
    std::vector<AttemptRecord> attempts;
    InstanceResult result;
    double elapsed_seconds = 0;
};

/// Best-of-attempts result derived only from recorded tool responses.
InstanceResult result_from_attempts(const std::string &code_id, Task task, const std::vector<AttemptRecord> &attempts);

struct HarnessConfig {
    std::string model_label = "unlabeled";
    std::string prompt;
    size_t attempt_budget = 10;
    double timeout_seconds = 900;
    Task task = Task::B1;
    std::string agent = "reference";
    unsigned workers = 1;
    unsigned oracle_workers = 1;
    /// Empty means the built-in default manifest.
    std::string manifest_path;
    /// Restricts the run to these code ids when non-empty.
    std::vector<std::string> only_codes;
    bool base_only = false;
    /// Empty disables persistence.
    std::string output_path;
};

/// Applies STABENCH_SUITE and STABENCH_WORKERS when set.
void apply_environment(HarnessConfig &config);

struct RunRecord {
    std::string schema = std::string(kRunRecordSchema);
    std::string model_label;
    std::string prompt;
    size_t attempt_budget = 0;
    double timeout_seconds = 0;
    Task task = Task::B1;
    std::string agent;
    unsigned workers = 1;
    Json manifest;
    std::string started_at;
    std::string finished_at;
    bool complete = false;
    /// Scored codes with their generator counts.
    std::vector<std::pair<std::string, size_t>> codes;
    /// Codes left out of the task, with the reason.
    std::vector<std::pair<std::string, std::string>> excluded;
    std::vector<InstanceRecord> instances;
    std::optional<ScoreReport> score;
};

Json to_json(const RunRecord &r);
RunRecord run_record_from_json(const Json &j);
RunRecord load_run_record(const std::string &path);

/// Recomputes every result from the attempt history and aggregates over the recorded code set.
ScoreReport score_run(const RunRecord &record, const std::vector<size_t> &bucket_edges = default_bucket_edges());

RunRecord run_benchmark(const HarnessConfig &config, const AgentFactory &agent);
RunRecord run_benchmark(const HarnessConfig &config);

}  // namespace stabench

#endif
