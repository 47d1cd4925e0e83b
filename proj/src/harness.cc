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


#include "stabench/harness.h"

#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <set>
#include <sstream>

#include "stabench/errors.h"
#include "stabench/parallel.h"
#include "stabench/tableau.h"

namespace stabench {

namespace {

using Clock = CancelToken::Clock;

/// Candidates may add helper qubits, but not without bound.
constexpr size_t kMaxExtraQubits = 1024;

Json error_response(std::string_view tool, std::string_view kind, const std::string &message) {
    return {{"tool", tool},
            {"ok", false},
            {"error", {{"kind", kind}, {"message", message}}},
            {"success", false},
            {"quality", "0"}};
}

template <typename Fn>
Json guarded(std::string_view tool, Fn &&fn) {
    try {
        return fn();
    } catch (const ParseError &e) {
        Json r = error_response(tool, "parse_error", e.what());
        r["error"]["line"] = e.line;
        r["error"]["column"] = e.column;
        return r;
    } catch (const StructuralError &e) {
        return error_response(tool, "structural_error", e.what());
    } catch (const NondeterministicMeasurement &e) {
        return error_response(tool, "structural_error", e.what());
    } catch (const InvalidCandidate &e) {
        return error_response(tool, "invalid_candidate", e.what());
    } catch (const MalformedProblem &e) {
        return error_response(tool, "malformed_problem", e.what());
    } catch (const Cancelled &e) {
        return error_response(tool, "timeout", e.what());
    } catch (const std::invalid_argument &e) {
        return error_response(tool, "invalid_circuit", e.what());
    }
}

Circuit parse_candidate(std::string_view text, size_t max_qubits) {
    Circuit c = parse_circuit(text);
    if (c.num_qubits() > max_qubits) {
        throw InvalidCandidate("circuit uses " + std::to_string(c.num_qubits()) + " qubits, limit is " +
                               std::to_string(max_qubits));
    }
    return c;
}

std::string iso_now() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(now.time_since_epoch()).count() % 1000;
    std::tm tm{};
    ::gmtime_r(&t, &tm);
    std::ostringstream out;
    out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%S") << "." << std::setw(3) << std::setfill('0') << ms << "Z";
    return out.str();
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

Json attempt_json(const AttemptRecord &a) {
    return {{"index", a.index}, {"circuit", a.circuit}, {"response", a.response}, {"elapsed_seconds", a.elapsed_seconds}};
}

Json instance_json(const InstanceRecord &r) {
    Json attempts = Json::array();
    for (const auto &a : r.attempts) {
        attempts.push_back(attempt_json(a));
    }
    return {{"code_id", r.code_id},
            {"num_generators", r.num_generators},
            {"ended_by", r.ended_by},
            {"error", r.error},
            {"elapsed_seconds", r.elapsed_seconds},
            {"attempts", attempts},
            {"result", to_json(r.result)}};
}

InstanceRecord instance_from_json(const Json &j) {
    InstanceRecord r;
    r.code_id = j.at("code_id").get<std::string>();
    r.num_generators = j.at("num_generators").get<size_t>();
    r.ended_by = j.value("ended_by", std::string());
    r.error = j.value("error", std::string());
    r.elapsed_seconds = j.value("elapsed_seconds", 0.0);
    for (const auto &a : j.at("attempts")) {
        r.attempts.push_back({a.at("index").get<size_t>(), a.at("circuit").get<std::string>(), a.at("response"),
                              a.value("elapsed_seconds", 0.0)});
    }
    r.result = instance_result_from_json(j.at("result"));
    return r;
}

}  // namespace

Json tool_check_stabilizers(std::string_view circuit_text, const CodeInstance &code) {
    return guarded("check_stabilizers", [&]() -> Json {
        Circuit c = parse_candidate(circuit_text, code.num_qubits + kMaxExtraQubits);
        StabReport r = check_stabilizers(c, code.generators);
        Json out = {{"tool", "check_stabilizers"}, {"ok", true}};
        out.update(to_json(r));
        auto v = b1_success(r);
        out["success"] = v.success;
        out["quality"] = rational_json(v.success ? v.quality : Rational(0));
        return out;
    });
}

Json tool_evaluate_optimization(std::string_view candidate_text, const Circuit &baseline, const CodeInstance &code) {
    return guarded("evaluate_optimization", [&]() -> Json {
        size_t limit = std::max(code.num_qubits, baseline.num_qubits());
        Circuit c = parse_circuit(candidate_text);
        if (c.num_qubits() > limit) {
            throw InvalidCandidate("candidate uses qubit " + std::to_string(c.num_qubits() - 1) +
                                   " outside the baseline's " + std::to_string(limit) + " qubits");
        }
        StabReport r = check_stabilizers(c, code.generators);
        CostTuple base_cost = cost(baseline), cand = cost(c);
        auto v = b2_validity_and_quality(base_cost, cand, r);
        Json out = {{"tool", "evaluate_optimization"}, {"ok", true}};
        out.update(to_json(r));
        out["preserved"] = r.satisfied;
        out["g2q"] = cand.g2q;
        out["depth"] = cand.depth;
        out["improvement"] = b2_improvement(cand, base_cost);
        out["baseline"] = to_json(base_cost);
        out["success"] = v.success;
        out["quality"] = rational_json(v.quality);
        return out;
    });
}

Json tool_check_fault_tolerance(std::string_view candidate_text, const CodeInstance &code, const Rational &baseline_ft,
                                const FTOptions &options) {
    return guarded("check_fault_tolerance", [&]() -> Json {
        Circuit c = parse_candidate(candidate_text, code.num_qubits + kMaxExtraQubits);
        StabReport r = check_stabilizers(c, code.generators);
        Json out = {{"tool", "check_fault_tolerance"}, {"ok", true}};
        out.update(to_json(r));
        out["preserved"] = r.satisfied;
        out["baseline_ft_score"] = rational_json(baseline_ft);
        if (!r.valid) {
            out["ft_score"] = nullptr;
            out["improvement"] = false;
            out["success"] = false;
            out["quality"] = "0";
            return out;
        }
        FTReport ft = ft_score(c, code, options);
        auto v = b3_validity_and_quality(baseline_ft, ft.ft_score, r);
        out["ft_score"] = rational_json(ft.ft_score);
        out["ft_score_float"] = rational_to_double(ft.ft_score);
        out["ft"] = to_json(ft);
        out["g2q"] = two_qubit_gate_count(c);
        out["depth"] = depth(c);
        out["improvement"] = ft.ft_score > baseline_ft;
        out["success"] = v.success;
        out["quality"] = rational_json(v.quality);
        return out;
    });
}

OracleSession::OracleSession(const CodeInstance &code, const Instance &instance, size_t attempt_budget,
                             FTOptions ft_options)
    : code_(code), instance_(instance), budget_(attempt_budget), ft_options_(ft_options) {
    if (attempt_budget == 0) {
        throw std::invalid_argument("attempt budget must be at least 1");
    }
}

Json OracleSession::submit(std::string_view circuit_text) {
    if (remaining() == 0) {
        Json r = error_response("oracle", "budget_exhausted",
                                "all " + std::to_string(budget_) + " attempts have been used");
        r["remaining_attempts"] = 0;
        return r;
    }
    used_++;
    Json r;
    switch (instance_.task) {
        case Task::B1:
            r = tool_check_stabilizers(circuit_text, code_);
            break;
        case Task::B2:
            r = tool_evaluate_optimization(circuit_text, *instance_.baseline, code_);
            break;
        case Task::B3:
            r = tool_check_fault_tolerance(circuit_text, code_, instance_.baseline_ft->ft_score, ft_options_);
            break;
    }
    r["attempt"] = used_;
    r["remaining_attempts"] = remaining();
    return r;
}

Json task_inputs(const CodeInstance &code, const Instance &instance) {
    Json gens = Json::array();
    for (const auto &g : code.generators) {
        gens.push_back(g.str());
    }
    Json in = {{"num_qubits", code.num_qubits}, {"num_generators", code.generator_count()}, {"generators", gens}};
    if (instance.task == Task::B2) {
        in["baseline"] = instance.baseline->str();
        in["baseline_cost"] = to_json(*instance.baseline_cost);
    }
    if (instance.task == Task::B3) {
        in["baseline"] = instance.baseline->str();
        in["distance"] = code.distance;
    }
    return in;
}

InstanceResult result_from_attempts(const std::string &code_id, Task task, const std::vector<AttemptRecord> &attempts) {
    InstanceResult best;
    best.code_id = code_id;
    best.task = task;
    bool have = false;
    for (const auto &a : attempts) {
        const Json &r = a.response;
        if (!r.value("ok", false)) {
            continue;
        }
        InstanceResult cur;
        cur.code_id = code_id;
        cur.task = task;
        cur.success = r.at("success").get<bool>();
        cur.quality = rational_from_json(r.at("quality"));
        cur.satisfied_generators = r.value("satisfied", size_t{0});
        if (r.contains("g2q") && r.contains("depth")) {
            cur.candidate_cost = CostTuple{r.at("g2q").get<size_t>(), r.at("depth").get<size_t>()};
        }
        if (r.contains("ft_score") && !r.at("ft_score").is_null()) {
            cur.ft = rational_from_json(r.at("ft_score"));
        }
        if (!have || better_result(cur, best) ||
            (!cur.success && !best.success && cur.satisfied_generators > best.satisfied_generators)) {
            best = cur;
            have = true;
        }
    }
    best.attempts_used = attempts.size();
    return best;
}

void apply_environment(HarnessConfig &config) {
    if (const char *suite = std::getenv("STABENCH_SUITE"); suite != nullptr && *suite != '\0') {
        config.manifest_path = suite;
    }
    if (const char *workers = std::getenv("STABENCH_WORKERS"); workers != nullptr && *workers != '\0') {
        int w = 0;
        try {
            w = std::stoi(workers);
        } catch (const std::exception &) {
            w = 0;
        }
        if (w <= 0) {
            throw std::invalid_argument("STABENCH_WORKERS must be a positive integer");
        }
        config.workers = (unsigned)w;
    }
}

Json to_json(const RunRecord &r) {
    Json codes = Json::array();
    for (const auto &[id, k] : r.codes) {
        codes.push_back({{"code_id", id}, {"num_generators", k}});
    }
    Json excluded = Json::array();
    for (const auto &[id, reason] : r.excluded) {
        excluded.push_back({{"code_id", id}, {"reason", reason}});
    }
    Json instances = Json::array();
    for (const auto &i : r.instances) {
        instances.push_back(instance_json(i));
    }
    return {{"schema", r.schema},
            {"model_label", r.model_label},
            {"prompt", r.prompt},
            {"attempt_budget", r.attempt_budget},
            {"timeout_seconds", r.timeout_seconds},
            {"task", task_name(r.task)},
            {"agent", r.agent},
            {"workers", r.workers},
            {"manifest", r.manifest},
            {"started_at", r.started_at},
            {"finished_at", r.complete ? Json(r.finished_at) : Json()},
            {"complete", r.complete},
            {"codes", codes},
            {"excluded", excluded},
            {"instances", instances},
            {"score", r.score ? to_json(*r.score) : Json()}};
}

/// The stored score is ignored; it is recomputed from the attempt history.
RunRecord run_record_from_json(const Json &j) {
    if (j.value("schema", std::string()) != kRunRecordSchema) {
        throw std::invalid_argument("run record schema must be " + std::string(kRunRecordSchema));
    }
    RunRecord r;
    r.model_label = j.value("model_label", std::string());
    r.prompt = j.value("prompt", std::string());
    r.attempt_budget = j.at("attempt_budget").get<size_t>();
    r.timeout_seconds = j.at("timeout_seconds").get<double>();
    r.task = task_from_name(j.at("task").get<std::string>());
    r.agent = j.value("agent", std::string());
    r.workers = j.value("workers", 1u);
    r.manifest = j.value("manifest", Json());
    r.started_at = j.value("started_at", std::string());
    if (j.contains("finished_at") && j.at("finished_at").is_string()) {
        r.finished_at = j.at("finished_at").get<std::string>();
    }
    r.complete = j.value("complete", false);
    for (const auto &c : j.at("codes")) {
        r.codes.push_back({c.at("code_id").get<std::string>(), c.at("num_generators").get<size_t>()});
    }
    for (const auto &c : j.value("excluded", Json::array())) {
        r.excluded.push_back({c.at("code_id").get<std::string>(), c.at("reason").get<std::string>()});
    }
    for (const auto &i : j.at("instances")) {
        r.instances.push_back(instance_from_json(i));
    }
    r.score = score_run(r);
    return r;
}

RunRecord load_run_record(const std::string &path) {
    std::string text = read_text_file(path);
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error &e) {
        throw std::invalid_argument("run record " + path + " is not valid JSON: " + e.what());
    }
    return run_record_from_json(j);
}

ScoreReport score_run(const RunRecord &record, const std::vector<size_t> &bucket_edges) {
    std::vector<InstanceResult> results;
    for (const auto &inst : record.instances) {
        if (inst.attempts.size() > record.attempt_budget) {
            throw std::invalid_argument("instance " + inst.code_id + " records more attempts than the budget");
        }
        results.push_back(result_from_attempts(inst.code_id, record.task, inst.attempts));
    }
    return aggregate(results, record.codes, record.task, bucket_edges);
}

namespace {

InstanceRecord run_instance(const HarnessConfig &config, const AgentFactory &factory, const CodeInstance &code,
                            const Instance &instance) {
    InstanceRecord rec;
    rec.code_id = code.id;
    rec.num_generators = code.generator_count();
    auto t0 = Clock::now();
    auto deadline =
        t0 + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(config.timeout_seconds));
    CancelToken token(deadline);
    OracleSession session(code, instance, config.attempt_budget, {config.oracle_workers, &token});
    std::unique_ptr<AgentConnection> conn;
    try {
        conn = factory();
        conn->send({{"type", "task"},
                    {"protocol", kAgentProtocol},
                    {"instance_id", code.id},
                    {"task", task_name(instance.task)},
                    {"inputs", task_inputs(code, instance)},
                    {"remaining_attempts", session.remaining()},
                    {"prompt", config.prompt}});
        while (rec.ended_by.empty()) {
            auto msg = conn->receive(deadline);
            if (!msg) {
                rec.ended_by = "timeout";
                break;
            }
            std::string type = msg->value("type", std::string());
            if (type == "give_up") {
                rec.ended_by = "give_up";
                break;
            }
            if (type != "submit" || !msg->contains("circuit") || !msg->at("circuit").is_string()) {
                throw TransportError("unexpected agent message: " + msg->dump().substr(0, 200));
            }
            if (token.cancelled()) {
                rec.ended_by = "timeout";
                break;
            }
            auto a0 = Clock::now();
            std::string circuit = msg->at("circuit").get<std::string>();
            Json response = session.submit(circuit);
            rec.attempts.push_back({session.used(), circuit, response, seconds_since(a0)});
            if (response.contains("error") && response["error"].value("kind", std::string()) == "timeout") {
                rec.ended_by = "timeout";
                break;
            }
            if (instance.task == Task::B1 && response.value("success", false)) {
                rec.ended_by = "success";
                break;
            }
            if (session.remaining() == 0) {
                rec.ended_by = "budget_exhausted";
                break;
            }
            conn->send({{"type", "feedback"},
                        {"instance_id", code.id},
                        {"attempt", session.used()},
                        {"remaining_attempts", session.remaining()},
                        {"response", response}});
        }
        try {
            conn->send({{"type", "done"}, {"instance_id", code.id}, {"reason", rec.ended_by}});
        } catch (const TransportError &) {
        }
    } catch (const std::exception &e) {
        rec.ended_by = "error";
        rec.error = e.what();
    }
    conn.reset();
    rec.result = result_from_attempts(code.id, instance.task, rec.attempts);
    rec.elapsed_seconds = seconds_since(t0);
    return rec;
}

std::string recovery_path_for(const std::string &output_path) {
    auto dir = std::filesystem::temp_directory_path();
    std::string stem = std::filesystem::path(output_path).filename().string();
    if (stem.empty()) {
        stem = "run";
    }
    return (dir / (stem + ".recovery-" + std::to_string(::getpid()) + ".json")).string();
}

}  // namespace

RunRecord run_benchmark(const HarnessConfig &config, const AgentFactory &agent) {
    if (config.attempt_budget == 0) {
        throw std::invalid_argument("attempt budget must be at least 1");
    }
    if (!(config.timeout_seconds > 0)) {
        throw std::invalid_argument("timeout must be positive");
    }
    SuiteManifest manifest = config.manifest_path.empty() ? default_manifest() : load_manifest_file(config.manifest_path);
    if (config.base_only) {
        manifest.product_pairs.clear();
        manifest.declared_total_generators = 0;
    }
    Suite suite = load_suite(manifest, config.workers);

    std::vector<const CodeInstance *> selected;
    if (config.only_codes.empty()) {
        for (const auto &c : suite.codes) {
            selected.push_back(&c);
        }
    } else {
        for (const auto &id : config.only_codes) {
            const CodeInstance *c = suite.find(id);
            if (c == nullptr) {
                throw std::invalid_argument("unknown code id '" + id + "'");
            }
            selected.push_back(c);
        }
    }

    RunRecord record;
    record.model_label = config.model_label;
    record.prompt = config.prompt;
    record.attempt_budget = config.attempt_budget;
    record.timeout_seconds = config.timeout_seconds;
    record.task = config.task;
    record.agent = config.agent;
    record.workers = config.workers;
    record.manifest = to_json(manifest);
    record.started_at = iso_now();

    std::vector<Instance> prepared(selected.size());
    parallel_for(0, selected.size(), config.workers,
                 [&](size_t i) { prepared[i] = make_instance(*selected[i], config.task); });
    std::vector<size_t> order;
    for (size_t i = 0; i < selected.size(); i++) {
        if (prepared[i].has_headroom) {
            record.codes.push_back({selected[i]->id, selected[i]->generator_count()});
            order.push_back(i);
        } else {
            record.excluded.push_back({selected[i]->id, "no B3 headroom: baseline FT is already 1"});
        }
    }

    std::mutex writer;
    std::vector<std::optional<InstanceRecord>> done(order.size());
    auto persist = [&]() {
        record.instances.clear();
        for (const auto &d : done) {
            if (d) {
                record.instances.push_back(*d);
            }
        }
        record.score = score_run(record);
        if (config.output_path.empty()) {
            return;
        }
        std::string text = to_json(record).dump(1);
        try {
            write_file_atomic(config.output_path, text);
        } catch (const std::exception &e) {
            std::string recovery = recovery_path_for(config.output_path);
            std::ofstream(recovery) << text;
            throw PersistenceError(std::string("cannot persist run record: ") + e.what() +
                                       "; partial record saved to " + recovery,
                                   recovery);
        }
    };

    parallel_for(0, order.size(), config.workers, [&](size_t slot) {
        size_t i = order[slot];
        InstanceRecord rec = run_instance(config, agent, *selected[i], prepared[i]);
        std::lock_guard<std::mutex> lock(writer);
        done[slot] = std::move(rec);
        persist();
    });

    std::lock_guard<std::mutex> lock(writer);
    record.complete = true;
    record.finished_at = iso_now();
    persist();
    return record;
}

RunRecord run_benchmark(const HarnessConfig &config) {
    return run_benchmark(config, make_agent_factory(config.agent));
}

}  // namespace stabench
