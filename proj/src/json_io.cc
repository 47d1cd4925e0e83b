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


#include "stabench/json_io.h"

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "stabench/gf2.h"

namespace stabench {

Json rational_json(const Rational &r) {
    return rational_str(r);
}

Rational rational_from_json(const Json &j) {
    if (j.is_number_integer()) {
        return Rational(j.get<int64_t>());
    }
    return parse_rational(j.get<std::string>());
}

Json to_json(const CostTuple &c) {
    return {{"g2q", c.g2q}, {"depth", c.depth}};
}

CostTuple cost_from_json(const Json &j) {
    return {j.at("g2q").get<size_t>(), j.at("depth").get<size_t>()};
}

Json to_json(const StabReport &r) {
    Json statuses = Json::array();
    for (auto s : r.statuses) {
        statuses.push_back(generator_status_name(s));
    }
    return {{"per_generator", statuses}, {"satisfied", r.satisfied}, {"total", r.statuses.size()},
            {"valid", r.valid}};
}

Json to_json(const FTReport &r) {
    return {{"num_qubits", r.num_qubits},
            {"num_data_qubits", r.num_data_qubits},
            {"threshold", r.threshold},
            {"total_locations", r.total_locations},
            {"dangerous_count", r.dangerous_count},
            {"flagged_dangerous", r.flagged_dangerous},
            {"false_flags", r.false_flags},
            {"ft_score", rational_json(r.ft_score)},
            {"ft_score_float", rational_to_double(r.ft_score)},
            {"max_unflagged_weight", r.max_unflagged_weight},
            {"fault_free_accepted", r.fault_free_accepted},
            {"is_fault_tolerant", r.is_fault_tolerant}};
}

Json to_json(const CodeInstance &c) {
    Json gens = Json::array();
    for (const auto &g : c.generators) {
        gens.push_back(g.str());
    }
    Json out = {{"id", c.id},
                {"family", family_name(c.family)},
                {"params", c.params},
                {"num_qubits", c.num_qubits},
                {"num_logical", c.num_logical},
                {"distance", c.distance},
                {"num_generators", c.generator_count()},
                {"generators", gens}};
    if (c.parents) {
        out["parents"] = {c.parents->first, c.parents->second};
    }
    return out;
}

CodeInstance code_from_json(const Json &j) {
    CodeInstance c;
    c.id = j.value("id", std::string("custom"));
    c.family = family_from_name(j.value("family", std::string("named")));
    if (j.contains("params")) {
        c.params = j.at("params").get<std::map<std::string, std::string>>();
    }
    const auto &gens = j.at("generators");
    if (!gens.is_array() || gens.empty()) {
        throw std::invalid_argument("code needs a non-empty generator list");
    }
    size_t n = j.value("num_qubits", size_t{0});
    for (const auto &g : gens) {
        auto text = g.get<std::string>();
        c.generators.push_back(n == 0 ? PauliString::from_text(text) : PauliString::from_text(text, n));
    }
    if (n == 0) {
        for (const auto &g : c.generators) {
            n = std::max(n, g.num_qubits());
        }
        for (auto &g : c.generators) {
            g = g.extended(n);
        }
    }
    c.num_qubits = n;
    c.num_logical = j.contains("num_logical") ? j.at("num_logical").get<size_t>()
                                              : n - symplectic_rank(c.generators);
    c.distance = j.value("distance", size_t{0});
    if (j.contains("parents")) {
        c.parents = {j.at("parents")[0].get<std::string>(), j.at("parents")[1].get<std::string>()};
    }
    return c;
}

Json to_json(const SuiteManifest &m) {
    Json base = Json::array();
    for (const auto &b : m.base_codes) {
        base.push_back({{"family", family_name(b.family)}, {"params", b.params}});
    }
    Json pairs = Json::array();
    for (const auto &[a, b] : m.product_pairs) {
        pairs.push_back({a, b});
    }
    return {{"schema", "stabench-manifest/1"},
            {"version", m.version},
            {"declared_total_generators", m.declared_total_generators},
            {"base_codes", base},
            {"product_pairs", pairs}};
}

SuiteManifest manifest_from_json(const Json &j) {
    if (j.value("schema", std::string()) != "stabench-manifest/1") {
        throw std::invalid_argument("manifest schema must be stabench-manifest/1");
    }
    SuiteManifest m;
    m.version = j.value("version", std::string("1"));
    m.declared_total_generators = j.value("declared_total_generators", uint64_t{0});
    for (const auto &b : j.at("base_codes")) {
        m.base_codes.push_back(
            {family_from_name(b.at("family").get<std::string>()),
             b.value("params", std::map<std::string, std::string>{})});
    }
    for (const auto &p : j.at("product_pairs")) {
        m.product_pairs.push_back({p.at(0).get<std::string>(), p.at(1).get<std::string>()});
    }
    return m;
}

Json to_json(const InstanceResult &r) {
    Json out = {{"code_id", r.code_id},
                {"task", task_name(r.task)},
                {"success", r.success},
                {"quality", rational_json(r.quality)},
                {"satisfied_generators", r.satisfied_generators},
                {"attempts_used", r.attempts_used}};
    out["candidate_cost"] = r.candidate_cost ? to_json(*r.candidate_cost) : Json();
    out["ft"] = r.ft ? rational_json(*r.ft) : Json();
    return out;
}

InstanceResult instance_result_from_json(const Json &j) {
    InstanceResult r;
    r.code_id = j.at("code_id").get<std::string>();
    r.task = task_from_name(j.at("task").get<std::string>());
    r.success = j.at("success").get<bool>();
    r.quality = rational_from_json(j.at("quality"));
    r.satisfied_generators = j.value("satisfied_generators", size_t{0});
    r.attempts_used = j.value("attempts_used", size_t{0});
    if (j.contains("candidate_cost") && !j.at("candidate_cost").is_null()) {
        r.candidate_cost = cost_from_json(j.at("candidate_cost"));
    }
    if (j.contains("ft") && !j.at("ft").is_null()) {
        r.ft = rational_from_json(j.at("ft"));
    }
    return r;
}

Json to_json(const ScoreReport &r) {
    Json per_code = Json::array();
    for (const auto &c : r.per_code) {
        per_code.push_back({{"code_id", c.code_id},
                            {"num_generators", c.num_generators},
                            {"success", c.success},
                            {"quality", rational_json(c.quality)},
                            {"contribution", rational_json(c.contribution)}});
    }
    Json buckets = Json::array();
    for (const auto &b : r.buckets) {
        buckets.push_back({{"lo", b.lo},
                           {"hi", b.hi == SIZE_MAX ? Json() : Json(b.hi)},
                           {"num_codes", b.num_codes},
                           {"num_success", b.num_success},
                           {"k_total", b.k_total},
                           {"s_cap", b.s_cap},
                           {"s_qual", rational_json(b.s_qual)}});
    }
    return {{"task", task_name(r.task)},
            {"s_cap", r.s_cap},
            {"s_qual", rational_json(r.s_qual)},
            {"s_qual_float", rational_to_double(r.s_qual)},
            {"k_max", r.k_max},
            {"num_codes", r.num_codes},
            {"num_results", r.num_results},
            {"num_success", r.num_success},
            {"per_code", per_code},
            {"buckets", buckets}};
}

Json to_json(const Instance &inst) {
    Json out = {{"code_id", inst.code_id},
                {"task", task_name(inst.task)},
                {"inflation_factor", inst.inflation_factor},
                {"has_headroom", inst.has_headroom}};
    out["baseline"] = inst.baseline ? Json(inst.baseline->str()) : Json();
    out["baseline_cost"] = inst.baseline_cost ? to_json(*inst.baseline_cost) : Json();
    out["baseline_ft"] = inst.baseline_ft ? to_json(*inst.baseline_ft) : Json();
    return out;
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

SuiteManifest load_manifest_file(const std::string &path) {
    return manifest_from_json(Json::parse(read_text_file(path)));
}

CodeInstance load_code_file(const std::string &path, size_t distance_override) {
    std::string text = read_text_file(path);
    size_t first = text.find_first_not_of(" \t\r\n");
    CodeInstance c;
    if (first != std::string::npos && text[first] == '{') {
        c = code_from_json(Json::parse(text));
    } else {
        Json gens = Json::array();
        std::istringstream lines(text);
        std::string line;
        while (std::getline(lines, line)) {
            line = line.substr(0, line.find('#'));
            size_t a = line.find_first_not_of(" \t\r");
            if (a == std::string::npos) {
                continue;
            }
            size_t b = line.find_last_not_of(" \t\r");
            gens.push_back(line.substr(a, b - a + 1));
        }
        c = code_from_json({{"id", std::filesystem::path(path).stem().string()}, {"generators", gens}});
    }
    if (distance_override != 0) {
        c.distance = distance_override;
    }
    return c;
}

void write_file_atomic(const std::string &path, const std::string &contents) {
    std::string tmp = path + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot write " + tmp);
        }
        out << contents;
        out.flush();
        if (!out) {
            std::remove(tmp.c_str());
            throw std::runtime_error("short write to " + tmp);
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::remove(tmp.c_str());
        throw std::runtime_error("cannot rename " + tmp + " to " + path + ": " + ec.message());
    }
}

}  // namespace stabench
