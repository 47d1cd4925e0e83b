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


#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <map>
#include <sstream>

#include "stabench/harness.h"
#include "stabench/tableau.h"

using namespace stabench;

namespace {

struct Options {
    bool json = false;
    std::string manifest;
    unsigned workers = 1;

    // suite
    std::string out;

    // instance / oracle
    std::string code_id;
    std::string task = "B1";
    std::string circuit_path;
    std::string baseline_path;
    std::string code_path;
    size_t distance = 0;
    std::string baseline_ft = "0";

    // run
    std::string agent = "reference";
    size_t attempts = 10;
    double timeout = 900;
    std::string label = "unlabeled";
    std::string prompt_file;
    std::vector<std::string> codes;
    bool base_only = false;
    unsigned oracle_workers = 1;

    // score / report
    std::string run_file;
    std::vector<size_t> buckets;

    // agent
    std::string agent_name;
    std::string listen;
    size_t max_connections = 0;
};

SuiteManifest manifest_of(const Options &o) {
    return o.manifest.empty() ? default_manifest() : load_manifest_file(o.manifest);
}

std::vector<size_t> bucket_edges(const Options &o) {
    return o.buckets.empty() ? default_bucket_edges() : o.buckets;
}

void print_json(const Json &j) {
    std::cout << j.dump(2) << "\n";
}

int cmd_suite_build(const Options &o) {
    std::string text = to_json(manifest_of(o)).dump(2) + "\n";
    if (o.out.empty()) {
        std::cout << text;
    } else {
        write_file_atomic(o.out, text);
    }
    return 0;
}

int cmd_suite_validate(const Options &o) {
    Suite suite = load_suite(manifest_of(o), o.workers);
    bool ok = true;
    Json codes = Json::array();
    for (const auto &c : suite.codes) {
        ValidationReport v = validate_code(c);
        ok = ok && v.ok();
        codes.push_back({{"id", c.id}, {"ok", v.ok()}, {"failures", v.failures}});
        if (!o.json) {
            std::cout << (v.ok() ? "ok   " : "FAIL ") << c.id;
            for (const auto &f : v.failures) {
                std::cout << "  " << f;
            }
            std::cout << "\n";
        }
    }
    if (o.json) {
        print_json({{"ok", ok}, {"codes", codes}, {"warnings", suite.warnings}});
    } else {
        std::cout << suite.codes.size() << " codes, " << (ok ? "all valid" : "INVALID CODES PRESENT") << "\n";
        for (const auto &w : suite.warnings) {
            std::cout << "warning: " << w << "\n";
        }
    }
    return ok ? 0 : 1;
}

int cmd_suite_stats(const Options &o) {
    Suite suite = load_suite(manifest_of(o), o.workers);
    struct Range {
        size_t count = 0, lo = SIZE_MAX, hi = 0;
        uint64_t total = 0;
        void add(size_t k) {
            count++;
            lo = std::min(lo, k);
            hi = std::max(hi, k);
            total += k;
        }
        Json json() const {
            return {{"codes", count}, {"min_k", count ? lo : 0}, {"max_k", hi}, {"total_k", total}};
        }
    };
    std::map<std::string, Range> by_family;
    Range base, product, all;
    std::vector<size_t> ks;
    for (const auto &c : suite.codes) {
        size_t k = c.generator_count();
        by_family[std::string(family_name(c.family))].add(k);
        (c.parents ? product : base).add(k);
        all.add(k);
        ks.push_back(k);
    }
    std::sort(ks.begin(), ks.end());
    double median = ks.empty() ? 0
                    : ks.size() % 2 ? double(ks[ks.size() / 2])
                                    : (ks[ks.size() / 2 - 1] + ks[ks.size() / 2]) / 2.0;
    Json families = Json::object();
    for (const auto &[name, r] : by_family) {
        families[name] = r.json();
    }
    Json j = {{"families", families},
              {"base", base.json()},
              {"products", product.json()},
              {"all", all.json()},
              {"median_k", median},
              {"total_generators", suite.total_generators},
              {"declared_total_generators", suite.declared_total_generators},
              {"deviation", int64_t(suite.total_generators) - int64_t(suite.declared_total_generators)}};
    if (o.json) {
        print_json(j);
        return 0;
    }
    auto line = [](const std::string &name, const Range &r) {
        std::cout << name << ": " << r.count << " codes, k " << (r.count ? r.lo : 0) << "-" << r.hi << ", total "
                  << r.total << "\n";
    };
    for (const auto &[name, r] : by_family) {
        line("  " + name, r);
    }
    line("base", base);
    line("products", product);
    line("all", all);
    std::cout << "median k: " << median << "\n";
    std::cout << "total generators K: " << suite.total_generators;
    if (suite.declared_total_generators != 0) {
        std::cout << " (declared " << suite.declared_total_generators << ", deviation "
                  << int64_t(suite.total_generators) - int64_t(suite.declared_total_generators) << ")";
    }
    std::cout << "\n";
    return 0;
}

const CodeInstance &find_code(const Suite &suite, const std::string &id) {
    const CodeInstance *c = suite.find(id);
    if (c == nullptr) {
        throw std::invalid_argument("unknown code id '" + id + "'");
    }
    return *c;
}

int cmd_instance_show(const Options &o) {
    SuiteManifest m = manifest_of(o);
    Suite suite = load_suite(m, o.workers);
    const CodeInstance &code = find_code(suite, o.code_id);
    Task task = task_from_name(o.task);
    Instance inst = make_instance(code, task, {o.workers});
    Json j = {{"code", to_json(code)}, {"instance", to_json(inst)}, {"inputs", task_inputs(code, inst)}};
    if (o.json) {
        print_json(j);
        return 0;
    }
    std::cout << code.id << " [[" << code.num_qubits << "," << code.num_logical << "," << code.distance << "]] k="
              << code.generator_count() << " family=" << family_name(code.family) << "\n";
    for (const auto &g : code.generators) {
        std::cout << "  " << g.str() << "\n";
    }
    std::cout << "task " << task_name(task);
    if (task != Task::B1) {
        std::cout << ", baseline cost (" << inst.baseline_cost->g2q << ", " << inst.baseline_cost->depth
                  << ")";
    }
    if (task == Task::B3) {
        std::cout << ", baseline FT " << rational_str(inst.baseline_ft->ft_score)
                  << (inst.has_headroom ? "" : " (no headroom, excluded)");
    }
    std::cout << "\n";
    if (task != Task::B1) {
        std::cout << emit_circuit(*inst.baseline);
    }
    return 0;
}

void print_tool_response(const Options &o, const Json &r) {
    if (o.json) {
        print_json(r);
        return;
    }
    if (!r.value("ok", false)) {
        const Json &e = r.at("error");
        std::cout << e.value("kind", std::string("error")) << ": " << e.value("message", std::string()) << "\n";
        return;
    }
    std::cout << "generators satisfied: " << r.at("satisfied") << "/" << r.at("total") << "\n";
    if (r.contains("preserved")) {
        std::cout << "preserved: " << r.at("preserved") << "\n";
    }
    if (r.contains("g2q")) {
        std::cout << "cost: g2q=" << r.at("g2q") << " depth=" << r.at("depth") << "\n";
    }
    if (r.contains("ft_score_float") && !r.at("ft_score_float").is_null()) {
        std::cout << "ft score: " << r.at("ft_score").get<std::string>() << " (" << r.at("ft_score_float")
                  << "), baseline " << r.at("baseline_ft_score").get<std::string>() << "\n";
    }
    if (r.contains("improvement")) {
        std::cout << "improvement: " << r.at("improvement") << "\n";
    }
    std::cout << "success: " << r.at("success") << ", quality " << r.at("quality").get<std::string>() << "\n";
}

CodeInstance oracle_code(const Options &o) {
    return load_code_file(o.code_path, o.distance);
}

int tool_exit(const Json &r) {
    return r.value("ok", false) ? 0 : 2;
}

int cmd_oracle_check(const Options &o) {
    Json r = tool_check_stabilizers(read_text_file(o.circuit_path), oracle_code(o));
    print_tool_response(o, r);
    return tool_exit(r);
}

int cmd_oracle_optimize(const Options &o) {
    Circuit baseline = parse_circuit(read_text_file(o.baseline_path));
    Json r = tool_evaluate_optimization(read_text_file(o.circuit_path), baseline, oracle_code(o));
    print_tool_response(o, r);
    return tool_exit(r);
}

int cmd_oracle_ft(const Options &o) {
    CodeInstance code = oracle_code(o);
    Json r = tool_check_fault_tolerance(read_text_file(o.circuit_path), code, parse_rational(o.baseline_ft),
                                        {o.workers});
    print_tool_response(o, r);
    return tool_exit(r);
}

int cmd_run(const Options &o) {
    HarnessConfig config;
    config.model_label = o.label;
    if (!o.prompt_file.empty()) {
        config.prompt = read_text_file(o.prompt_file);
    }
    config.attempt_budget = o.attempts;
    config.timeout_seconds = o.timeout;
    config.task = task_from_name(o.task);
    config.agent = o.agent;
    config.workers = o.workers;
    config.oracle_workers = o.oracle_workers;
    config.manifest_path = o.manifest;
    config.only_codes = o.codes;
    config.base_only = o.base_only;
    config.output_path = o.out;
    apply_environment(config);
    RunRecord record = run_benchmark(config);
    ScoreReport score = score_run(record, bucket_edges(o));
    if (o.json) {
        print_json(to_json(score));
    } else {
        std::cout << format_score_table(score);
        for (const auto &[id, reason] : record.excluded) {
            std::cout << "excluded " << id << ": " << reason << "\n";
        }
    }
    return 0;
}

int cmd_score(const Options &o) {
    RunRecord record = load_run_record(o.run_file);
    ScoreReport score = score_run(record, bucket_edges(o));
    if (o.json) {
        print_json(to_json(score));
    } else {
        std::cout << "model " << record.model_label << ", agent " << record.agent << ", A=" << record.attempt_budget
                  << ", timeout " << record.timeout_seconds << "s" << (record.complete ? "" : " (incomplete run)")
                  << "\n";
        std::cout << format_score_table(score);
    }
    return 0;
}

int cmd_report(const Options &o) {
    RunRecord record = load_run_record(o.run_file);
    ScoreReport score = score_run(record, bucket_edges(o));
    if (!o.buckets.empty()) {
        std::cout << "bucket_lo,bucket_hi,codes,successes,k_total,s_cap,s_qual\n";
        for (const auto &b : score.buckets) {
            std::cout << b.lo << "," << (b.hi == SIZE_MAX ? std::string("inf") : std::to_string(b.hi)) << ","
                      << b.num_codes << "," << b.num_success << "," << b.k_total << "," << b.s_cap << ","
                      << rational_to_double(b.s_qual) << "\n";
        }
    } else {
        std::cout << difficulty_curve_csv(score);
    }
    return 0;
}

int cmd_agent(const Options &o) {
    std::string name = o.agent_name;
    make_builtin_agent(name);
    if (o.listen.empty()) {
        auto logic = make_builtin_agent(name);
        serve_agent_stream(*logic, std::cin, std::cout);
        return 0;
    }
    std::string host = "127.0.0.1";
    std::string port_text = o.listen;
    if (auto colon = o.listen.rfind(':'); colon != std::string::npos) {
        host = o.listen.substr(0, colon);
        port_text = o.listen.substr(colon + 1);
    }
    uint16_t port = static_cast<uint16_t>(std::stoul(port_text));
    serve_agent_tcp(
        host, port, [name] { return make_builtin_agent(name); }, o.max_connections,
        [](uint16_t bound) { std::cerr << "listening on port " << bound << std::endl; });
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    Options o;
    int (*action)(const Options &) = nullptr;
    CLI::App app{"stabench: stabilizer state preparation benchmark"};
    app.require_subcommand(1);
    app.add_flag("--json", o.json, "Machine-readable output");
    app.add_option("--manifest", o.manifest, "Suite manifest (default: built-in)");
    app.add_option("--workers", o.workers, "Worker threads")->check(CLI::Range(1u, 1024u));

    auto bind = [&](CLI::App *cmd, int (*fn)(const Options &)) { cmd->callback([&action, fn] { action = fn; }); };

    auto *suite = app.add_subcommand("suite", "Build, validate or describe the code suite");
    suite->require_subcommand(1);
    auto *build = suite->add_subcommand("build", "Write the manifest");
    build->add_option("--out", o.out, "Output file (default: stdout)");
    bind(build, cmd_suite_build);
    bind(suite->add_subcommand("validate", "Validate every code"), cmd_suite_validate);
    bind(suite->add_subcommand("stats", "Per-family and total generator counts"), cmd_suite_stats);

    auto *instance = app.add_subcommand("instance", "Inspect task instances");
    instance->require_subcommand(1);
    auto *show = instance->add_subcommand("show", "Show one code and its task inputs");
    show->add_option("code_id", o.code_id)->required();
    show->add_option("--task", o.task)->check(CLI::IsMember({"B1", "B2", "B3"}));
    bind(show, cmd_instance_show);

    auto *oracle = app.add_subcommand("oracle", "Evaluate a circuit against a code");
    oracle->require_subcommand(1);
    auto *check = oracle->add_subcommand("check-stabilizers", "Check generator satisfaction");
    check->add_option("circuit", o.circuit_path)->required()->check(CLI::ExistingFile);
    check->add_option("code", o.code_path)->required()->check(CLI::ExistingFile);
    bind(check, cmd_oracle_check);
    auto *ft = oracle->add_subcommand("ft", "Fault-tolerance score of a flagged circuit");
    ft->add_option("circuit", o.circuit_path)->required()->check(CLI::ExistingFile);
    ft->add_option("code", o.code_path)->required()->check(CLI::ExistingFile);
    ft->add_option("--distance", o.distance, "Override the code distance");
    ft->add_option("--baseline-ft", o.baseline_ft, "Baseline score to compare against");
    bind(ft, cmd_oracle_ft);
    auto *opt = oracle->add_subcommand("optimize", "Compare a candidate against a baseline circuit");
    opt->add_option("candidate", o.circuit_path)->required()->check(CLI::ExistingFile);
    opt->add_option("baseline", o.baseline_path)->required()->check(CLI::ExistingFile);
    opt->add_option("code", o.code_path)->required()->check(CLI::ExistingFile);
    bind(opt, cmd_oracle_optimize);

    auto *run = app.add_subcommand("run", "Run an agent over the suite");
    run->add_option("--task", o.task)->check(CLI::IsMember({"B1", "B2", "B3"}));
    run->add_option("--agent", o.agent, "reference, null, exec:CMD or tcp:HOST:PORT");
    run->add_option("--attempts", o.attempts)->check(CLI::Range(size_t(1), size_t(1000000)));
    run->add_option("--timeout", o.timeout, "Seconds per instance")->check(CLI::PositiveNumber);
    run->add_option("--oracle-workers", o.oracle_workers)->check(CLI::Range(1u, 1024u));
    run->add_option("--out", o.out, "Run record path");
    run->add_option("--label", o.label, "Model label");
    run->add_option("--prompt-file", o.prompt_file)->check(CLI::ExistingFile);
    run->add_option("--codes", o.codes, "Restrict to these code ids")->delimiter(',');
    run->add_flag("--base-only", o.base_only, "Skip tensor-product codes");
    run->add_option("--buckets", o.buckets)->delimiter(',');
    bind(run, cmd_run);

    auto *score = app.add_subcommand("score", "Recompute scores from a run record");
    score->add_option("--run-file", o.run_file)->required()->check(CLI::ExistingFile);
    score->add_option("--buckets", o.buckets)->delimiter(',');
    bind(score, cmd_score);

    auto *report = app.add_subcommand("report", "Difficulty curve or bucket table as CSV");
    report->add_option("--run-file", o.run_file)->required()->check(CLI::ExistingFile);
    report->add_option("--buckets", o.buckets, "Bucket edges; emits the bucket table")->delimiter(',');
    bind(report, cmd_report);

    auto *agent = app.add_subcommand("agent", "Serve a built-in agent on stdio or TCP");
    agent->add_option("name", o.agent_name)->required()->check(CLI::IsMember({"reference", "null"}));
    agent->add_option("--listen", o.listen, "[HOST:]PORT");
    agent->add_option("--max-connections", o.max_connections, "Stop after this many dialogues (0: never)");
    bind(agent, cmd_agent);

    CLI11_PARSE(app, argc, argv);
    try {
        return action(o);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
