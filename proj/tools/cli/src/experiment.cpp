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

#include "deephole_cli/experiment.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "deephole/classify.hpp"
#include "deephole/families.hpp"
#include "deephole/numbertheory.hpp"

namespace deephole::cli {

namespace {

constexpr const char* kElementOrder = "nonzero reprs ascending, then 0";

std::uint64_t ipow(std::uint64_t base, unsigned e) {
    std::uint64_t v = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (v > std::numeric_limits<std::uint64_t>::max() / base) throw UsageError("field order overflows");
        v *= base;
    }
    return v;
}

const Field& resolve_field(const ExperimentConfig& c) {
    std::uint64_t q = 0;
    if (c.p || c.m) {
        if (!c.p || !c.m) throw UsageError("--p and --m must be given together");
        if (!is_prime(*c.p)) throw UsageError("--p must be prime, got " + std::to_string(*c.p));
        if (*c.m == 0) throw UsageError("--m must be positive");
        q = ipow(*c.p, *c.m);
        if (c.q && *c.q != q) throw UsageError("--q disagrees with --p^--m");
    } else if (c.q) {
        q = *c.q;
        if (prime_power(q).first == 0) throw UsageError("--q must be a prime power, got " + std::to_string(q));
    } else {
        throw UsageError("field required: give --q or --p and --m");
    }
    if (!c.unsafe_bounds && q > c.max_q) {
        throw UsageError("q = " + std::to_string(q) + " exceeds the size guard " + std::to_string(c.max_q) +
                         " (raise DEEPHOLE_MAX_Q or pass --unsafe-bounds)");
    }
    try {
        return make_field_of_order(q);
    } catch (const BoundExceeded& e) {
        throw UsageError(e.what());
    }
}

SearchLimits limits_for(const ExperimentConfig& c) {
    SearchLimits l;
    l.threads = std::max(1u, c.threads);
    l.max_codewords = c.max_codewords;
    if (c.unsafe_bounds) {
        l.max_codewords = std::numeric_limits<std::uint64_t>::max();
        l.max_syndromes = std::uint64_t{1} << 32;
        l.max_span_redundancy = 64;
    }
    return l;
}

unsigned require_k(const ExperimentConfig& c) {
    if (!c.k) throw UsageError(c.command + " requires --k");
    return *c.k;
}

// Rejects a syndrome space that the coset-weight table could not hold, before building it.
void require_syndrome_space(const Field& f, std::size_t redundancy, const SearchLimits& l) {
    try {
        checked_power(f.order(), redundancy, l.max_syndromes, "syndrome space");
    } catch (const BoundExceeded& e) {
        throw UsageError(std::string(e.what()) + " (pass --unsafe-bounds to override)");
    }
}

Code projective_code(const Field& f, unsigned k) {
    if (k == 0 || k > f.order()) throw UsageError("--k must satisfy 1 <= k <= q for a PRS code");
    return Code::projective(f, k);
}

Json field_json(const Field& f) {
    const auto mod = f.modulus();
    return Json{{"q", f.order()},
                {"p", f.characteristic()},
                {"m", f.degree()},
                {"modulus", std::vector<Elem>(mod.begin(), mod.end())},
                {"element_order", kElementOrder}};
}

Json config_json(const ExperimentConfig& c, const Field& f) {
    Json j{{"command", c.command}, {"q", f.order()}};
    if (c.k) j["k"] = *c.k;
    if (c.command == "covering-radius") j["code"] = c.code;
    if (c.degree) j["degree"] = *c.degree;
    if (c.set) j["set"] = *c.set;
    if (c.r) j["r"] = *c.r;
    j["unsafe_bounds"] = c.unsafe_bounds;
    return j;
}

template <class Map>
Json histogram_json(const Map& m) {
    Json j = Json::object();
    for (const auto& [key, value] : m) j[std::to_string(key)] = value;
    return j;
}

struct Outcome {
    Json result;
    bool ok = true;
};

Outcome covering_radius_cmd(const ExperimentConfig& c, const Field& f, const SearchLimits& l) {
    const unsigned k = require_k(c);
    std::optional<Code> code;
    if (c.code == "prs") {
        code = projective_code(f, k);
    } else if (c.code == "rs") {
        if (k == 0 || k >= f.order()) throw UsageError("--k must satisfy 1 <= k < q for an RS code");
        code = Code::reed_solomon(f, k);
    } else {
        throw UsageError("--code must be prs or rs");
    }
    require_syndrome_space(f, code->redundancy(), l);
    const CosetWeightTable table(*code, l);
    Outcome out;
    out.result = Json{{"code", code->describe()},
                      {"n", code->length()},
                      {"k", k},
                      {"rho", table.covering_radius()},
                      {"q_minus_k", f.order() - k},
                      {"weight_histogram", table.histogram()}};
    if (c.code == "rs") {
        out.result["expected_rho"] = f.order() - k;
        out.ok = table.covering_radius() == f.order() - k;
    }
    return out;
}

Outcome enum_deep_cosets_cmd(const ExperimentConfig& c, const Field& f, const SearchLimits& l) {
    const unsigned k = require_k(c);
    const Code code = projective_code(f, k);
    if (code.redundancy() != 3 && code.redundancy() != 4) throw UsageError("enum-deep-cosets needs k = q-2 or k = q-3");
    require_syndrome_space(f, code.redundancy(), l);
    const std::uint64_t total = count_deep_cosets(code, l);
    const std::uint64_t formula = deep_coset_formula(f.order(), k);
    Outcome out;
    out.result = Json{{"total", total}, {"formula", formula}, {"match", total == formula}};
    out.ok = total == formula;
    return out;
}

Outcome family_cmd(const ExperimentConfig& c, const Field& f, const SearchLimits& l) {
    if (!c.degree || (*c.degree != 2 && *c.degree != 3)) throw UsageError("family requires --degree 2 or 3");
    const unsigned degree = *c.degree;
    const unsigned k = c.k ? *c.k : (degree == 2 ? f.order() - 2 : f.order() - 3);
    if (degree == 3 && k + 3 != f.order()) throw UsageError("the cubic family needs k = q-3");
    if (k == 0 || k >= f.order() || !prs_construction_range(f.order(), k)) {
        throw UsageError("k = " + std::to_string(k) + " outside the construction range for q = " +
                         std::to_string(f.order()));
    }
    const Code code = Code::projective(f, k);
    require_syndrome_space(f, code.redundancy(), l);
    const CosetWeightTable table(code, l);
    const auto degk = degree_k_family(table);
    std::set<SyndromeKey> quad_union;
    Json rows = Json::array();
    if (degree == 2) {
        for (const auto& p : monic_irreducibles(f, 2)) {
            const auto fam = quadratic_family(table, p);
            quad_union.insert(fam.cosets.begin(), fam.cosets.end());
            rows.push_back(Json{{"p", p.to_string()}, {"cosets", fam.cosets.size()}, {"distance", fam.distance}});
        }
    } else {
        for (const auto& p : monic_irreducibles(f, 2)) {
            const auto fam = quadratic_family(table, p);
            quad_union.insert(fam.cosets.begin(), fam.cosets.end());
        }
        std::set<SyndromeKey> cubic_union;
        for (const auto& p : monic_irreducibles(f, 3)) {
            const auto fam = cubic_family(table, p);
            std::uint64_t fresh = 0;
            for (SyndromeKey key : fam.cosets) fresh += degk.cosets.count(key) == 0 && quad_union.count(key) == 0;
            cubic_union.insert(fam.cosets.begin(), fam.cosets.end());
            rows.push_back(Json{{"p", p.to_string()},
                                {"cosets", fam.cosets.size()},
                                {"distance", fam.distance},
                                {"outside_degree_k_and_quadratic", fresh}});
        }
        Outcome out;
        const bool quad_in = std::includes(cubic_union.begin(), cubic_union.end(), quad_union.begin(), quad_union.end());
        const bool degk_in =
            std::includes(cubic_union.begin(), cubic_union.end(), degk.cosets.begin(), degk.cosets.end());
        out.result = Json{{"k", k},
                          {"rows", rows},
                          {"expected_per_family", (f.order() - 1) * (f.order() * f.order() + f.order() + 2) / 2},
                          {"union", cubic_union.size()},
                          {"degree_k_cosets", degk.cosets.size()},
                          {"quadratic_union", quad_union.size()},
                          {"quadratic_union_contained", quad_in},
                          {"degree_k_contained", degk_in}};
        out.ok = quad_in && degk_in;
        return out;
    }
    Outcome out;
    out.result = Json{{"k", k},
                      {"rows", rows},
                      {"expected_per_family", f.order() * f.order() - 1},
                      {"union", quad_union.size()},
                      {"degree_k_cosets", degk.cosets.size()}};
    return out;
}

Outcome completeness_cmd(const Field& f, const SearchLimits& l) {
    const auto r = completeness_check(f, l);
    Outcome out;
    out.result = Json{{"union_size", r.union_size}, {"total", r.total}, {"quadratics", r.quadratics}, {"complete", r.complete}};
    out.ok = r.complete;
    return out;
}

Outcome hypergraph_cmd(const Field& f, const SearchLimits& l) {
    const auto h = build_hypergraph(f, l);
    const auto st = hypergraph_stats(h);
    const std::uint64_t q = f.order();
    const bool edges_ok = st.edge_count == (q * q - q) / 2;
    Outcome out;
    out.result = Json{{"vertices", st.vertex_count},
                      {"edges", st.edge_count},
                      {"degree_sum", st.degree_sum},
                      {"degree_histogram", histogram_json(st.degree_histogram)},
                      {"edge_size_histogram", histogram_json(st.edge_size_histogram)},
                      {"intersection_histogram", histogram_json(st.intersection_histogram)},
                      {"vertex_count_q2", st.vertex_count_q2},
                      {"edge_count_ok", edges_ok},
                      {"unit_intersections", st.unit_intersections},
                      {"two_degrees", st.two_degrees},
                      {"balanced_edges", st.balanced_edges}};
    out.ok = st.vertex_count_q2 && edges_ok && st.unit_intersections && st.two_degrees && st.balanced_edges;
    return out;
}

Outcome cubic_coverage_cmd(const Field& f, const SearchLimits& l) {
    require_syndrome_space(f, 4, l);
    const auto r = cubic_coverage_experiment(f, l);
    Outcome out;
    out.result = Json{{"covered", r.covered},
                      {"total", r.total},
                      {"fraction", r.fraction()},
                      {"cubics", r.cubics},
                      {"family_sizes", histogram_json(r.family_sizes)}};
    return out;
}

std::vector<Elem> evaluation_set(const ExperimentConfig& c, const Field& f) {
    if (!c.set) {
        const auto e = f.elements();
        return {e.begin(), e.end()};
    }
    for (Elem x : *c.set) {
        if (!f.contains(x)) throw UsageError("--set entry " + std::to_string(x) + " is not an element of GF(" + f.name() + ")");
    }
    if (std::set<Elem>(c.set->begin(), c.set->end()).size() != c.set->size()) {
        throw UsageError("--set entries must be distinct");
    }
    if (c.set->size() > kMaxSubsetSumSet) throw UsageError("--set is larger than " + std::to_string(kMaxSubsetSumSet));
    return *c.set;
}

Outcome ssp_cmd(const ExperimentConfig& c, const Field& f) {
    const unsigned k = require_k(c);
    const auto d = evaluation_set(c, f);
    Json rows = Json::array();
    bool all_positive = true;
    for (Elem g : f.elements()) {
        const std::uint64_t n = subset_sum_count(f, d, k, g);
        all_positive = all_positive && n > 0;
        rows.push_back(Json{{"g", g}, {"count", n}});
    }
    const std::uint64_t q = f.order();
    const bool whole = d.size() == q;
    const bool in_range = whole && (q % 2 == 1 ? (k >= 1 && k + 1 <= q) : (k >= 3 && k + 3 <= q));
    Outcome out;
    out.result = Json{{"k", k}, {"set_size", d.size()}, {"rows", rows}, {"all_positive", all_positive},
                      {"positivity_expected", in_range}};
    out.ok = !in_range || all_positive;
    return out;
}

Outcome n3_cmd(const Field& f) {
    Json rows = Json::array();
    bool all_match = true;
    std::uint64_t zero_classes = 0;
    for (const auto& qp : monic_irreducibles(f, 2)) {
        for (const auto& row : n3_sweep(qp)) {
            all_match = all_match && row.bruteforce == row.formula;
            zero_classes += row.bruteforce == 0;
            rows.push_back(Json{{"q", f.order()},
                                {"qx", qp.to_string()},
                                {"alpha", row.alpha.to_string()},
                                {"n3_bruteforce", row.bruteforce},
                                {"n3_formula", row.formula},
                                {"r3", row.r3}});
        }
    }
    Outcome out;
    out.result = Json{{"rows", rows}, {"all_match", all_match}, {"zero_classes", zero_classes}};
    out.ok = all_match;
    return out;
}

// First r-subset (by index) summing to zero.
std::optional<std::vector<Elem>> zero_sum_witness(const Field& f, const std::vector<Elem>& d, unsigned r) {
    std::vector<std::size_t> idx(r);
    for (unsigned i = 0; i < r; ++i) idx[i] = i;
    while (true) {
        Elem s = 0;
        for (std::size_t i : idx) s = f.add(s, d[i]);
        if (s == 0) {
            std::vector<Elem> w;
            for (std::size_t i : idx) w.push_back(d[i]);
            return w;
        }
        int i = static_cast<int>(r) - 1;
        while (i >= 0 && idx[i] == d.size() - r + i) --i;
        if (i < 0) return std::nullopt;
        ++idx[i];
        for (unsigned j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

Outcome zero_sum_free_cmd(const ExperimentConfig& c, const Field& f, const SearchLimits& l) {
    if (!c.r || *c.r < 2) throw UsageError("zero-sum-free requires --r >= 2");
    const unsigned r = *c.r;
    std::vector<Elem> d;
    std::string source = "--set";
    if (c.set) {
        d = evaluation_set(c, f);
    } else {
        if (f.degree() != 1) throw UsageError("the default set {0, ..., floor(p/r)+r-1} needs a prime field; pass --set");
        source = "default {0, ..., floor(p/r)+r-1}";
        const Elem top = f.order() / r + r - 1;
        if (top >= f.order()) throw UsageError("default set does not fit in GF(" + f.name() + ")");
        for (Elem x = 0; x <= top; ++x) d.push_back(x);
    }
    if (d.size() < r) throw UsageError("--set needs at least r elements");
    Outcome out;
    out.result = Json{{"set", d}, {"set_source", source}, {"r", r}};
    const auto witness = zero_sum_witness(f, d, r);
    out.result["zero_sum_free"] = !witness.has_value();
    out.result["witness"] = witness ? Json(*witness) : Json(nullptr);
    if (witness || d.size() < r + 2) {
        out.result["family"] = nullptr;
        return out;
    }
    const unsigned k = static_cast<unsigned>(d.size() - r - 1);
    require_syndrome_space(f, d.size() - k, l);
    const Code code = Code::affine(f, d, k);
    const CosetWeightTable table(code, l);
    const auto fam = zero_sum_free_family(table, r);
    const Elem total = static_cast<Elem>(fam.params.at("sum_D").front());
    std::vector<Elem> coeffs(k + 2, 0);
    coeffs[k + 1] = 1;
    coeffs[k] = f.neg(total);
    const Polynomial gen(f, coeffs);
    const unsigned dist = table.distance(code.evaluate(gen));
    out.result["family"] = Json{{"k", k},
                                {"generator", gen.to_string()},
                                {"distance", dist},
                                {"n_minus_k", d.size() - k},
                                {"cosets", fam.cosets.size()},
                                {"sum_D", total},
                                {"inverse_monomial_deltas_checked", fam.params.at("inverse_monomial_deltas_checked").front()}};
    out.ok = dist == d.size() - k;
    return out;
}

void flatten_diff(const Json& a, const Json& b, const std::string& path, std::vector<DiffEntry>& out) {
    if (a.is_object() && b.is_object()) {
        for (const auto& [key, value] : a.items()) {
            const std::string sub = path + "/" + key;
            if (b.contains(key)) {
                flatten_diff(value, b.at(key), sub, out);
            } else {
                out.push_back({sub, value, nullptr});
            }
        }
        for (const auto& [key, value] : b.items()) {
            if (!a.contains(key)) out.push_back({path + "/" + key, nullptr, value});
        }
        return;
    }
    if (a.is_array() && b.is_array()) {
        const std::size_t n = std::max(a.size(), b.size());
        for (std::size_t i = 0; i < n; ++i) {
            const std::string sub = path + "/" + std::to_string(i);
            if (i >= a.size()) {
                out.push_back({sub, nullptr, b[i]});
            } else if (i >= b.size()) {
                out.push_back({sub, a[i], nullptr});
            } else {
                flatten_diff(a[i], b[i], sub, out);
            }
        }
        return;
    }
    if (a != b) out.push_back({path, a, b});
}

std::string csv_cell(const Json& v) {
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"\n") != std::string::npos) {
        std::string quoted = "\"";
        for (char ch : s) {
            if (ch == '"') quoted += '"';
            quoted += ch;
        }
        return quoted + "\"";
    }
    return s;
}

}  // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = {"covering-radius", "enum-deep-cosets", "family",
                                                   "completeness",    "hypergraph",       "cubic-coverage",
                                                   "ssp",             "n3",               "zero-sum-free"};
    return names;
}

std::optional<std::uint64_t> max_q_from_env() {
    const char* raw = std::getenv("DEEPHOLE_MAX_Q");
    if (raw == nullptr || *raw == '\0') return std::nullopt;
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
        v = std::stoull(raw, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || raw[used] != '\0') throw UsageError(std::string("DEEPHOLE_MAX_Q is not an integer: ") + raw);
    return v;
}

Report run(const ExperimentConfig& config) {
    const auto& names = command_names();
    if (std::find(names.begin(), names.end(), config.command) == names.end()) {
        throw UsageError("unknown command: " + config.command);
    }
    const Field& f = resolve_field(config);
    const SearchLimits l = limits_for(config);
    Outcome o;
    const std::string& cmd = config.command;
    if (cmd == "covering-radius") {
        o = covering_radius_cmd(config, f, l);
    } else if (cmd == "enum-deep-cosets") {
        o = enum_deep_cosets_cmd(config, f, l);
    } else if (cmd == "family") {
        o = family_cmd(config, f, l);
    } else if (cmd == "completeness") {
        o = completeness_cmd(f, l);
    } else if (cmd == "hypergraph") {
        o = hypergraph_cmd(f, l);
    } else if (cmd == "cubic-coverage") {
        o = cubic_coverage_cmd(f, l);
    } else if (cmd == "ssp") {
        o = ssp_cmd(config, f);
    } else if (cmd == "n3") {
        o = n3_cmd(f);
    } else {
        o = zero_sum_free_cmd(config, f, l);
    }
    Report rep;
    rep.ok = o.ok;
    rep.body = Json{{"command", cmd},
                    {"config", config_json(config, f)},
                    {"field", field_json(f)},
                    {"result", std::move(o.result)},
                    {"status", o.ok ? "ok" : "mismatch"}};
    return rep;
}

std::string to_json_text(const Report& report) { return report.body.dump(2) + "\n"; }

std::string to_csv(const Report& report) {
    const Json& result = report.body.at("result");
    std::ostringstream os;
    auto emit = [&os](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
        os << "\n";
    };
    if (result.contains("rows") && result.at("rows").is_array()) {
        const Json& rows = result.at("rows");
        if (rows.empty()) return "";
        std::vector<std::string> header;
        for (const auto& [key, value] : rows.front().items()) header.push_back(key);
        emit(header);
        for (const auto& row : rows) {
            std::vector<std::string> cells;
            for (const auto& key : header) cells.push_back(row.contains(key) ? csv_cell(row.at(key)) : "");
            emit(cells);
        }
        return os.str();
    }
    std::vector<std::string> header, cells;
    for (const auto& [key, value] : result.items()) {
        if (value.is_structured()) continue;
        header.push_back(key);
        cells.push_back(csv_cell(value));
    }
    emit(header);
    emit(cells);
    return os.str();
}

Report report_from_json(const Json& body) {
    if (!body.is_object() || !body.contains("command") || !body.at("command").is_string()) {
        throw std::invalid_argument("report JSON lacks a command field");
    }
    Report r;
    r.body = body;
    r.ok = body.value("status", std::string("ok")) == "ok";
    return r;
}

std::vector<DiffEntry> report_diff(const Report& a, const Report& b) {
    if (a.kind() != b.kind()) throw std::invalid_argument("cannot diff " + a.kind() + " against " + b.kind());
    std::vector<DiffEntry> out;
    flatten_diff(a.body, b.body, "", out);
    return out;
}

}  // namespace deephole::cli
