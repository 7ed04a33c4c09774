/*
 * Copyright 2026 The deephole Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "deephole/codes.hpp"

namespace deephole::cli {

using Json = nlohmann::ordered_json;

/// Bad flags or parameters; maps to exit code 1.
class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

enum class OutputFormat { json, csv };

struct ExperimentConfig {
    std::string command;
    std::optional<std::uint64_t> q;
    std::optional<std::uint32_t> p;
    std::optional<unsigned> m;
    std::optional<unsigned> k;
    std::string code = "prs";          ///< prs or rs, for covering-radius
    std::optional<unsigned> degree;    ///< 2 or 3, for family
    std::optional<std::vector<Elem>> set;
    std::optional<unsigned> r;
    OutputFormat format = OutputFormat::json;
    std::string out;                   ///< empty: stdout
    unsigned threads = 1;
    bool unsafe_bounds = false;
    std::uint64_t max_q = 13;          ///< size guard on q
    std::uint64_t max_codewords = 10'000'000;
};

/// The commands `run` accepts, in help order.
const std::vector<std::string>& command_names();

/// Reads DEEPHOLE_MAX_Q when set; throws UsageError on a malformed value.
std::optional<std::uint64_t> max_q_from_env();

struct Report {
    Json body;
    /// True when every theorem-level check in the report held.
    bool ok = true;
    const std::string& kind() const { return body.at("command").get_ref<const std::string&>(); }
};

/// Validates the config and every size bound, then runs the experiment.
/// Throws UsageError before any enumeration when the config is rejected.
Report run(const ExperimentConfig& config);

std::string to_json_text(const Report& report);

/// CSV projection: the "rows" table when present, else one row of scalar results.
std::string to_csv(const Report& report);

Report report_from_json(const Json& body);

struct DiffEntry {
    std::string path;  ///< JSON pointer
    Json left;
    Json right;
};

/// Field-by-field differences; empty exactly when the reports are equal.
/// Throws std::invalid_argument when the report kinds differ.
std::vector<DiffEntry> report_diff(const Report& a, const Report& b);

}  // namespace deephole::cli
