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
#include <set>
#include <string>
#include <vector>

#include "deephole/codes.hpp"
#include "deephole/polynomial.hpp"

namespace deephole {

enum class FamilyTag { degree_k, inverse_monomial, zero_sum_free, quadratic, cubic };

std::string to_string(FamilyTag tag);

/// One generator of a family: the word numerator/denominator on the evaluation
/// points (denominator 1 for polynomial families), plus the final coordinate.
struct FamilyMember {
    Polynomial numerator;
    Elem last = 0;
    Word word;
    SyndromeKey key = 0;
};

/**
 * A set of deep-hole cosets produced by one construction.
 *
 * `cosets` holds raw syndrome keys and is the canonical content; `members`
 * keeps one generator per coset in generation order for reports. Every member
 * has been checked to lie at distance `distance`, the covering radius.
 */
struct DeepHoleFamily {
    FamilyTag tag = FamilyTag::degree_k;
    std::map<std::string, std::vector<std::int64_t>> params;
    std::set<SyndromeKey> cosets;
    std::vector<FamilyMember> members;
    unsigned distance = 0;
};

/// True when k lies in the range where the PRS constructions apply:
/// 2 <= k <= q-2 for odd q, 3 <= k <= q-3 for even q.
bool prs_construction_range(std::uint32_t q, unsigned k) noexcept;

/// Throws HypothesisFailure unless the table's covering radius is q-k (PRS) or n-k (affine).
void require_expected_radius(const CosetWeightTable& table);

/// PRS: cosets of (u_f, v) with deg f = k, q(q-1) of them. Affine: u_f with deg f = k, q-1 cosets.
DeepHoleFamily degree_k_family(const CosetWeightTable& table);
DeepHoleFamily degree_k_family(const Code& code, const SearchLimits& limits = {});

/// Words a/(x - delta) on D, a != 0, for an affine code with delta outside D.
DeepHoleFamily inverse_monomial_family(const CosetWeightTable& table, Elem delta);
DeepHoleFamily inverse_monomial_family(const Code& code, Elem delta, const SearchLimits& limits = {});

/**
 * Multiples of x^{k+1} - (sum D) x^k on D for D r-zero-sum-free and k = |D|-r-1.
 * Also checks that no constructed coset is a degree-k or inverse-monomial coset.
 */
DeepHoleFamily zero_sum_free_family(const CosetWeightTable& table, unsigned r);
DeepHoleFamily zero_sum_free_family(const Field& field, const std::vector<Elem>& set, unsigned r,
                                    const SearchLimits& limits = {});

/// DH(p): the q^2 - 1 words (a + bx)/p(x) with final coordinate 0.
DeepHoleFamily quadratic_family(const CosetWeightTable& table, const Polynomial& p);
DeepHoleFamily quadratic_family(const Code& code, const Polynomial& p, const SearchLimits& limits = {});

/// Deep cosets among (a + bx + cx^2)/p(x), (a,b,c) != 0, for k = q-3, kept by exact distance.
/// With check_count, a coset count other than (q-1)(q^2+q+2)/2 raises HypothesisFailure.
DeepHoleFamily cubic_family(const CosetWeightTable& table, const Polynomial& p, bool check_count = true);
DeepHoleFamily cubic_family(const Code& code, const Polynomial& p, const SearchLimits& limits = {});

/// Degree-k cosets of PRS(q+1, q-3) that also lie in the cubic family of p = x^3 + alpha x^2 + ...,
/// next to the cosets of (u_{e x^k - e alpha x^{k-1}}, 0), e != 0, which are predicted to be all of them.
struct CubicDegreeKOverlap {
    std::set<SyndromeKey> overlap;
    std::set<SyndromeKey> predicted;
};
CubicDegreeKOverlap cubic_degree_k_overlap(const CosetWeightTable& table, const Polynomial& p);

/// Numerator a + bx + cx^2 packed as a + b q + c q^2.
std::uint64_t pack_numerator(const Polynomial& n);

/// Numerators whose cubic word is not deep, counted independently of distances:
/// the residues d * prod_{s in S}(x - s) mod p with |S| in {q-2, q-1}, d != 0.
std::set<std::uint64_t> cubic_nondeep_numerators_by_splitting(const Polynomial& p);

bool is_deep_hole(const CosetWeightTable& table, const Word& w);
bool is_deep_hole(const Code& code, const Word& w, const SearchLimits& limits = {});

/// Equal syndromes; throws std::invalid_argument on a length mismatch.
bool same_coset(const Code& code, const Word& w1, const Word& w2);
/// Equal syndromes up to a nonzero scalar.
bool same_projective_coset(const Code& code, const Word& w1, const Word& w2);

/**
 * DH(p1) and DH(p2) share exactly the cosets of (a1 + b1 x)/p1 with
 * a1 + b1 x = a (x^q - x) / p2 mod p1, a in GF(q)*. Returns those raw keys
 * after checking them against the brute-force intersection of both families.
 * Requires odd q and k = q-2.
 */
std::set<SyndromeKey> dh_intersection(const CosetWeightTable& table, const Polynomial& p1, const Polynomial& p2);

/// Raw keys -> normalized projective keys.
std::set<SyndromeKey> projective_keys(const Field& field, std::size_t redundancy, const std::set<SyndromeKey>& raw);

}  // namespace deephole
