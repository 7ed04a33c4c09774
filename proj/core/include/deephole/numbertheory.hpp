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
#include <span>
#include <vector>

#include "deephole/field.hpp"
#include "deephole/polynomial.hpp"

namespace deephole {

/// Largest |D| accepted by the subset-sum routines.
inline constexpr std::size_t kMaxSubsetSumSet = 64;

/// N(k, g, D): number of k-subsets of D summing to g, by dynamic programming
/// over (chosen count, partial sum). D must have distinct elements.
std::uint64_t subset_sum_count(const Field& field, std::span<const Elem> set, unsigned k, Elem g);

/// True when no r-subset of D sums to zero. Requires 2 <= r <= |D|.
bool is_zero_sum_free(const Field& field, std::span<const Elem> set, unsigned r);

/// N(k+1, a, D) > 0, i.e. x^{k+1} - a x^k does not give a deep hole of RS(D, k).
bool degree_k1_nondeephole(const Field& field, std::span<const Elem> set, unsigned k, Elem a);

/**
 * GF(q)[x]/(q(x)) realized inside GF(q^2).
 *
 * The base field embeds through a root of its own modulus in GF(q^2), and x
 * maps to the smallest root of q(x) there, so a + bx maps to a + b theta.
 */
class QuadraticExtension {
   public:
    /// qpoly must be a monic irreducible quadratic over `base`.
    explicit QuadraticExtension(const Polynomial& qpoly);

    const Field& base() const noexcept { return *base_; }
    const Field& extension() const noexcept { return *ext_; }
    const Polynomial& modulus() const noexcept { return qpoly_; }
    Elem embed(Elem a) const noexcept { return embedding_[a]; }
    Elem theta() const noexcept { return theta_; }
    /// Image of the residue class of r (reduced mod q(x) first).
    Elem image(const Polynomial& r) const;

   private:
    const Field* base_;
    const Field* ext_;
    Polynomial qpoly_;
    std::vector<Elem> embedding_;
    Elem theta_ = 0;
};

/// Number of pairs (p, l), p monic irreducible cubic, l in GF(q)*, with p = l alpha mod q(x).
std::uint64_t n3_bruteforce(const Polynomial& qpoly, const Polynomial& alpha);
/// Same count against a precomputed list of monic irreducible cubics.
std::uint64_t n3_bruteforce(const Polynomial& qpoly, const Polynomial& alpha, std::span<const Polynomial> cubics);

/// chi_3(alpha) = 1, for a cubic character trivial on GF(q)* (needs q = 2 mod 3).
/// `generator` defaults to the extension's primitive element.
bool chi3_trivial(const QuadraticExtension& ext, const Polynomial& alpha, Elem generator = 0);

/// 0 when q != 2 mod 3; otherwise 2 if chi_3(alpha) = 1, else -1.
int r3(const QuadraticExtension& ext, const Polynomial& alpha);

/// (q(q-1) - r3(alpha)) / 3.
std::uint64_t n3_formula(const QuadraticExtension& ext, const Polynomial& alpha);
std::uint64_t n3_formula(const Polynomial& qpoly, const Polynomial& alpha);

struct N3Row {
    Polynomial alpha;
    std::uint64_t bruteforce = 0;
    std::uint64_t formula = 0;
    int r3 = 0;
};

/// Both counts for every nonzero class alpha = a + bx, in ascending a + b q order.
std::vector<N3Row> n3_sweep(const Polynomial& qpoly);

}  // namespace deephole
