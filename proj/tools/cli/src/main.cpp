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

// deephole: command-line harness over the deep-hole experiments.
// Exit codes: 0 success, 1 usage error, 2 a checked theorem failed.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "deephole_cli/experiment.hpp"

namespace {

using deephole::cli::ExperimentConfig;

std::vector<deephole::Elem> parse_set(const std::string& text) {
    std::vector<deephole::Elem> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw deephole::cli::UsageError("--set entry is not an integer: " + item);
        out.push_back(static_cast<deephole::Elem>(v));
    }
    if (out.empty()) throw deephole::cli::UsageError("--set is empty");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Deep holes of Reed-Solomon codes: covering radii, families and counts"};
    app.require_subcommand(1);

    ExperimentConfig cfg;
    std::uint64_t q = 0;
    std::uint32_t p = 0;
    unsigned m = 0, k = 0, degree = 0, r = 0;
    std::string set_text, format = "json";

    for (const auto& name : deephole::cli::command_names()) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--q", q, "field order (prime power)");
        sub->add_option("--p", p, "characteristic, with --m");
        sub->add_option("--m", m, "extension degree, with --p");
        sub->add_option("--k", k, "code dimension");
        sub->add_option("--code", cfg.code, "prs or rs")->check(CLI::IsMember({"prs", "rs"}));
        sub->add_option("--degree", degree, "family degree, 2 or 3")->check(CLI::IsMember({2u, 3u}));
        sub->add_option("--set", set_text, "comma-separated element reprs");
        sub->add_option("--r", r, "zero-sum-free order");
        sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", cfg.out, "output file (default stdout)");
        sub->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
        sub->add_flag("--unsafe-bounds", cfg.unsafe_bounds, "lift the size guards");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    std::string text;
    bool ok = true;
    try {
        cfg.command = app.get_subcommands().front()->get_name();
        const CLI::App* sub = app.get_subcommands().front();
        if (sub->count("--q")) cfg.q = q;
        if (sub->count("--p")) cfg.p = p;
        if (sub->count("--m")) cfg.m = m;
        if (sub->count("--k")) cfg.k = k;
        if (sub->count("--degree")) cfg.degree = degree;
        if (sub->count("--r")) cfg.r = r;
        if (sub->count("--set")) cfg.set = parse_set(set_text);
        cfg.format = format == "csv" ? deephole::cli::OutputFormat::csv : deephole::cli::OutputFormat::json;
        if (auto env = deephole::cli::max_q_from_env()) cfg.max_q = *env;

        const auto report = deephole::cli::run(cfg);
        ok = report.ok;
        text = cfg.format == deephole::cli::OutputFormat::csv ? deephole::cli::to_csv(report)
                                                               : deephole::cli::to_json_text(report);
    } catch (const deephole::HypothesisFailure& e) {
        std::cerr << "theorem check failed: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    if (cfg.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream os(cfg.out, std::ios::binary);
        if (!os || !(os << text)) {
            std::cerr << "error: cannot write " << cfg.out << "\n";
            return 1;
        }
    }
    if (!ok) std::cerr << "theorem check failed: see status in the report\n";
    return ok ? 0 : 2;
}
