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
#include <map>
#include <vector>

#include "deephole/codes.hpp"
#include "deephole/families.hpp"

namespace deephole {

/// The q+1 points (1, x, ..., x^{r-1}), x in canonical order, then (0, ..., 0, 1).
std::vector<std::vector<Elem>> nrc_points(const Field& field, std::size_t redundancy);

/// Syndromes of PRS(q+1, k), r = q+1-k in {3, 4}, outside the span of every
/// (r-2)-subset of the normal rational curve, ascending by key. The covering
/// radius q-k is verified first.
std::vector<SyndromeKey> deep_syndromes(const Code& code, const SearchLimits& limits = {});
std::vector<SyndromeKey> deep_syndromes(const CosetWeightTable& table);

std::uint64_t count_deep_cosets(const Code& code, const SearchLimits& limits = {});

/// q^3 - q^2 for r = 3 and q^4 - (C(q+1,2)(q-1)^2 + (q+1)(q-1) + 1) for r = 4.
std::uint64_t deep_coset_formula(std::uint64_t q, unsigned k);

/// Vertices are projective syndrome keys of quadratic-family words for
/// PRS(q+1, q-2); one edge per monic irreducible quadratic.
struct Hypergraph {
    const Field* field = nullptr;
    std::vector<SyndromeKey> vertices;
    std::vector<Polynomial> edge_polynomials;
    std::vector<std::vector<std::size_t>> edges;  ///< sorted vertex indices
};

Hypergraph build_hypergraph(const Field& field, const SearchLimits& limits = {});

struct HypergraphStats {
    std::size_t vertex_count = 0;
    std::size_t edge_count = 0;
    std::uint64_t degree_sum = 0;
    std::map<std::size_t, std::size_t> degree_histogram;
    std::map<std::size_t, std::size_t> edge_size_histogram;
    std::map<std::size_t, std::size_t> intersection_histogram;  ///< over unordered edge pairs
    /// Per edge: vertices of degree (q-1)/2 and of degree (q+1)/2.
    std::vector<std::pair<std::size_t, std::size_t>> edge_splits;
    bool two_degrees = false;        ///< every degree in {(q-1)/2, (q+1)/2}
    bool balanced_edges = false;     ///< every edge split (q+1)/2 : (q+1)/2
    bool unit_intersections = false; ///< every pair of edges meets in one vertex
    bool vertex_count_q2 = false;    ///< |V| = q^2
};

HypergraphStats hypergraph_stats(const Hypergraph& h);

struct CompletenessResult {
    std::uint64_t union_size = 0;
    std::uint64_t total = 0;
    std::size_t quadratics = 0;
    bool complete = false;  ///< union of DH(p) equals the deep syndrome set
};

/// Union of DH(p) over all monic irreducible quadratics versus deep_syndromes(q, q-2). Odd q only.
CompletenessResult completeness_check(const Field& field, const SearchLimits& limits = {});

struct CoverageResult {
    std::uint64_t covered = 0;
    std::uint64_t total = 0;
    std::size_t cubics = 0;
    /// cosets per cubic -> number of cubics with that many
    std::map<std::uint64_t, std::size_t> family_sizes;
    double fraction() const noexcept { return total ? static_cast<double>(covered) / static_cast<double>(total) : 0.0; }
};

/// Union of the cubic families over all monic irreducible cubics versus deep_syndromes(q, q-3).
CoverageResult cubic_coverage_experiment(const Field& field, const SearchLimits& limits = {});

}  // namespace deephole
