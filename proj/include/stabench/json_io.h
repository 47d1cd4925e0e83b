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


#ifndef STABENCH_JSON_IO_H
#define STABENCH_JSON_IO_H

#include <json.hpp>
#include <string>

#include "stabench/code.h"
#include "stabench/fault.h"
#include "stabench/scoring.h"
#include "stabench/synth.h"
#include "stabench/tableau.h"

namespace stabench {

using Json = nlohmann::json;

Json rational_json(const Rational &r);
Rational rational_from_json(const Json &j);

Json to_json(const CostTuple &c);
CostTuple cost_from_json(const Json &j);

Json to_json(const StabReport &r);
Json to_json(const FTReport &r);
Json to_json(const CodeInstance &c);
/// Accepts the to_json form, or {"generators": [...], "distance": d} with the rest inferred.
CodeInstance code_from_json(const Json &j);

Json to_json(const SuiteManifest &m);
SuiteManifest manifest_from_json(const Json &j);

Json to_json(const InstanceResult &r);
InstanceResult instance_result_from_json(const Json &j);

Json to_json(const ScoreReport &r);

Json to_json(const Instance &inst);

/// Reads a manifest from a JSON file.
SuiteManifest load_manifest_file(const std::string &path);
/// Reads a code from JSON, or from plain text with one generator per line.
CodeInstance load_code_file(const std::string &path, size_t distance_override = 0);
std::string read_text_file(const std::string &path);
/// Writes via a temporary file and rename.
void write_file_atomic(const std::string &path, const std::string &contents);

}  // namespace stabench

#endif
