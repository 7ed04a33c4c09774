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

#include "deephole/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace deephole {

namespace {

void require_odd(const Field& field) {
    if (field.order() % 2 == 0) throw std::invalid_argument("construction needs odd q, got " + field.name());
}

}  // namespace

std::vector<std::vector<Elem>> nrc_points(const Field& field, std::size_t redundancy) {
    std::vector<std::vector<Elem>> pts;
    for (Elem x : field.elements()) {
        std::vector<Elem> v(redundancy);
        Elem power = 1;
        for (auto& c : v) {
            c = power;
            power = field.mul(power, x);
        }
        pts.push_back(std::move(v));
    }
    std::vector<Elem> inf(redundancy, 0);
    inf.back() = 1;
    pts.push_back(std::move(inf));
    return pts;
}

std::vector<SyndromeKey> deep_syndromes(const CosetWeightTable& table) {
    const Code& code = table.code();
    if (code.kind() != CodeKind::projective) throw std::invalid_argument("deep_syndromes expects a PRS code");
    const std::size_t r = code.redundancy();
    if (r != 3 && r != 4) throw std::invalid_argument("deep_syndromes supports redundancy 3 or 4, got " + std::to_string(r));
    require_expected_radius(table);

    const Field& f = code.field();
    const auto pts = nrc_points(f, r);
    std::vector<bool> spanned(table.syndrome_count(), false);
    Syndrome s;
    s.coords.assign(r, 0);
    if (r == 3) {
        for (const auto& pt : pts) {
            for (Elem c : f.elements()) {
                for (std::size_t i = 0; i < r; ++i) s.coords[i] = f.mul(c, pt[i]);
                spanned[syndrome_key(f, s)] = true;
            }
        }
    } else {
        for (std::size_t a = 0; a < pts.size(); ++a) {
            for (std::size_t b = a + 1; b < pts.size(); ++b) {
                for (Elem c1 : f.elements()) {
                    for (Elem c2 : f.elements()) {
                        for (std::size_t i = 0; i < r; ++i) {
                            s.coords[i] = f.add(f.mul(c1, pts[a][i]), f.mul(c2, pts[b][i]));
                        }
                        spanned[syndrome_key(f, s)] = true;
                    }
                }
            }
        }
    }
    std::vector<SyndromeKey> out;
    for (SyndromeKey key = 0; key < spanned.size(); ++key) {
        if (!spanned[key]) out.push_back(key);
    }
    return out;
}

std::vector<SyndromeKey> deep_syndromes(const Code& code, const SearchLimits& limits) {
    return deep_syndromes(CosetWeightTable(code, limits));
}

std::uint64_t count_deep_cosets(const Code& code, const SearchLimits& limits) {
    return deep_syndromes(code, limits).size();
}

std::uint64_t deep_coset_formula(std::uint64_t q, unsigned k) {
    if (k == 0 || k > q) throw std::invalid_argument("k out of range");
    const std::uint64_t r = q + 1 - k;
    if (r == 3) return q * q * q - q * q;
    if (r == 4) {
        const std::uint64_t spanned = (q + 1) * q / 2 * (q - 1) * (q - 1) + (q + 1) * (q - 1) + 1;
        return q * q * q * q - spanned;
    }
    throw std::invalid_argument("closed formula known only for redundancy 3 or 4");
}

Hypergraph build_hypergraph(const Field& field, const SearchLimits& limits) {
    require_odd(field);
    if (field.order() < 5) throw std::invalid_argument("hypergraph needs q >= 5");
    const Code code = Code::projective(field, field.order() - 2);
    const CosetWeightTable table(code, limits);
    Hypergraph h;
    h.field = &field;
    std::vector<std::set<SyndromeKey>> edge_keys;
    std::set<SyndromeKey> all;
    for (const auto& p : monic_irreducibles(field, 2)) {
        auto keys = projective_keys(field, code.redundancy(), quadratic_family(table, p).cosets);
        all.insert(keys.begin(), keys.end());
        h.edge_polynomials.push_back(p);
        edge_keys.push_back(std::move(keys));
    }
    h.vertices.assign(all.begin(), all.end());
    for (const auto& keys : edge_keys) {
        std::vector<std::size_t> edge;
        for (SyndromeKey k : keys) {
            edge.push_back(static_cast<std::size_t>(std::lower_bound(h.vertices.begin(), h.vertices.end(), k) -
                                                    h.vertices.begin()));
        }
        h.edges.push_back(std::move(edge));
    }
    return h;
}

HypergraphStats hypergraph_stats(const Hypergraph& h) {
    HypergraphStats st;
    st.vertex_count = h.vertices.size();
    st.edge_count = h.edges.size();
    std::vector<std::size_t> degree(st.vertex_count, 0);
    for (const auto& e : h.edges) {
        ++st.edge_size_histogram[e.size()];
        for (std::size_t v : e) ++degree[v];
    }
    for (std::size_t d : degree) {
        ++st.degree_histogram[d];
        st.degree_sum += d;
    }
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
        for (std::size_t j = i + 1; j < h.edges.size(); ++j) {
            std::vector<std::size_t> common;
            std::set_intersection(h.edges[i].begin(), h.edges[i].end(), h.edges[j].begin(), h.edges[j].end(),
                                  std::back_inserter(common));
            ++st.intersection_histogram[common.size()];
        }
    }
    if (h.field == nullptr) return st;
    const std::size_t q = h.field->order();
    const std::size_t lo = (q - 1) / 2, hi = (q + 1) / 2;
    st.two_degrees = std::all_of(degree.begin(), degree.end(), [&](std::size_t d) { return d == lo || d == hi; });
    st.balanced_edges = true;
    for (const auto& e : h.edges) {
        std::size_t nlo = 0, nhi = 0;
        for (std::size_t v : e) {
            if (degree[v] == lo) ++nlo;
            if (degree[v] == hi) ++nhi;
        }
        st.edge_splits.emplace_back(nlo, nhi);
        if (nlo != hi || nhi != hi) st.balanced_edges = false;
    }
    st.unit_intersections = st.intersection_histogram.size() == 1 && st.intersection_histogram.count(1) == 1;
    if (h.edges.size() < 2) st.unit_intersections = true;
    st.vertex_count_q2 = st.vertex_count == q * q;
    return st;
}

CompletenessResult completeness_check(const Field& field, const SearchLimits& limits) {
    require_odd(field);
    if (field.order() < 5) throw std::invalid_argument("completeness check needs q >= 5");
    const Code code = Code::projective(field, field.order() - 2);
    const CosetWeightTable table(code, limits);
    const auto deep = deep_syndromes(table);
    std::set<SyndromeKey> all;
    CompletenessResult res;
    for (const auto& p : monic_irreducibles(field, 2)) {
        const auto fam = quadratic_family(table, p);
        all.insert(fam.cosets.begin(), fam.cosets.end());
        ++res.quadratics;
    }
    res.union_size = all.size();
    res.total = deep.size();
    res.complete = std::equal(all.begin(), all.end(), deep.begin(), deep.end());
    return res;
}

CoverageResult cubic_coverage_experiment(const Field& field, const SearchLimits& limits) {
    if (field.order() < 5) throw std::invalid_argument("cubic coverage needs q >= 5");
    const Code code = Code::projective(field, field.order() - 3);
    const CosetWeightTable table(code, limits);
    const auto deep = deep_syndromes(table);
    std::set<SyndromeKey> covered;
    CoverageResult res;
    for (const auto& p : monic_irreducibles(field, 3)) {
        const auto fam = cubic_family(table, p, false);
        covered.insert(fam.cosets.begin(), fam.cosets.end());
        ++res.family_sizes[fam.cosets.size()];
        ++res.cubics;
    }
    std::uint64_t inside = 0;
    for (SyndromeKey k : covered) {
        if (std::binary_search(deep.begin(), deep.end(), k)) ++inside;
    }
    if (inside != covered.size()) throw std::logic_error("cubic family produced a coset outside the deep set");
    res.covered = covered.size();
    res.total = deep.size();
    return res;
}

}  // namespace deephole
