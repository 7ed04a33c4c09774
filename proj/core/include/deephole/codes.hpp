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

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "deephole/field.hpp"
#include "deephole/linalg.hpp"
#include "deephole/polynomial.hpp"

namespace deephole {

/// Size guards applied before any enumeration starts.
struct SearchLimits {
    std::uint64_t max_codewords = 10'000'000;  ///< q^k for codeword enumeration
    std::uint64_t max_syndromes = 10'000'000;  ///< q^(n-k) for syndrome-space enumeration
    unsigned max_span_redundancy = 6;          ///< n-k for the column-subset distance
    unsigned threads = 1;
};

/// Raised when a theorem's hypothesis or conclusion fails on a computed instance.
class HypothesisFailure : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct Word {
    std::vector<Elem> entries;

    std::size_t size() const noexcept { return entries.size(); }
    Elem operator[](std::size_t i) const noexcept { return entries[i]; }
    auto operator<=>(const Word&) const = default;
};

struct Syndrome {
    std::vector<Elem> coords;

    bool is_zero() const noexcept;
    auto operator<=>(const Syndrome&) const = default;
};

/// Syndrome packed as a little-endian base-q integer; dense index into syndrome space.
using SyndromeKey = std::uint64_t;

SyndromeKey syndrome_key(const Field& field, const Syndrome& s);
Syndrome syndrome_from_key(const Field& field, SyndromeKey key, std::size_t length);

/// Zero, or s scaled so that its first nonzero coordinate is 1.
Syndrome normalize_projective(const Field& field, const Syndrome& s);

/// Raw syndrome identifies the coset; the projective form identifies the coset up to scaling.
struct CosetId {
    Syndrome raw;
    Syndrome projective;
    SyndromeKey raw_key = 0;
    SyndromeKey projective_key = 0;
};

enum class CodeKind { affine, projective };

/**
 * Affine generalized RS code RS_v(D, k) or projective RS code PRS(q+1, k).
 *
 * Projective codes evaluate at GF(q) in canonical order (zero last) followed by
 * the coefficient c_{k-1}(f). Generator and parity-check matrices are computed
 * once at construction; the projective H has rows 1, x, ..., x^{q-k} with last
 * column (0,...,0,1), and the affine H is the dual GRS matrix with column
 * multipliers 1 / (v_j prod_{l != j} (x_j - x_l)).
 */
class Code {
   public:
    static Code affine(const Field& field, std::vector<Elem> points, unsigned k, std::vector<Elem> scale = {});
    /// RS(q, k): D = GF(q) in canonical order.
    static Code reed_solomon(const Field& field, unsigned k);
    static Code projective(const Field& field, unsigned k);

    CodeKind kind() const noexcept { return kind_; }
    const Field& field() const noexcept { return *field_; }
    std::size_t length() const noexcept { return n_; }
    unsigned dimension() const noexcept { return k_; }
    std::size_t redundancy() const noexcept { return n_ - k_; }
    /// Evaluation points (length q for projective codes).
    std::span<const Elem> points() const noexcept { return points_; }
    std::span<const Elem> scale() const noexcept { return scale_; }
    std::string describe() const;

    const Matrix& generator_matrix() const noexcept { return generator_; }
    const Matrix& parity_check_matrix() const noexcept { return parity_; }

    /// Codeword of f, deg f <= k-1.
    Word encode(const Polynomial& f) const;
    /// Evaluations of f of any degree; for projective codes `last` fills the final coordinate.
    Word evaluate(const Polynomial& f, Elem last = 0) const;
    /// Pointwise r(alpha_i) with the final coordinate `last`; projective codes only.
    Word word_from_rational(const RationalFunction& r, Elem last = 0) const;

    Syndrome syndrome(const Word& w) const;
    CosetId coset_id(const Word& w) const;
    bool contains(const Word& w) const { return syndrome(w).is_zero(); }

    Word add(const Word& a, const Word& b) const;
    Word scale_word(const Word& w, Elem c) const;

   private:
    Code(const Field& field, CodeKind kind, std::vector<Elem> points, unsigned k, std::vector<Elem> scale);
    void check_word(const Word& w) const;

    const Field* field_;
    CodeKind kind_;
    std::vector<Elem> points_;
    std::vector<Elem> scale_;
    std::size_t n_;
    unsigned k_;
    Matrix generator_;
    Matrix parity_;
};

enum class DistanceMethod { exhaustive, syndrome_span };

/// Exact d(w, C). exhaustive needs q^k <= max_codewords; syndrome_span needs
/// n-k <= max_span_redundancy.
unsigned error_distance(const Code& code, const Word& w, DistanceMethod method, const SearchLimits& limits = {});

/// Exhaustive distances for many words in one pass over the codewords.
std::vector<unsigned> error_distances_exhaustive(const Code& code, std::span<const Word> words,
                                                 const SearchLimits& limits = {});

/// Smallest m such that s lies in the span of m columns of H (the coset-leader weight).
unsigned syndrome_span_weight(const Code& code, const Syndrome& s, const SearchLimits& limits = {});

/**
 * Coset-leader weight of every syndrome, by breadth-first search from zero
 * adding one nonzero multiple of one parity-check column per step.
 * Requires q^(n-k) <= max_syndromes.
 */
class CosetWeightTable {
   public:
    explicit CosetWeightTable(const Code& code, const SearchLimits& limits = {});

    const Code& code() const noexcept { return code_; }
    unsigned weight(SyndromeKey key) const { return weights_.at(key); }
    unsigned weight(const Syndrome& s) const;
    /// Exact error distance of w.
    unsigned distance(const Word& w) const;
    unsigned covering_radius() const noexcept { return radius_; }
    std::uint64_t syndrome_count() const noexcept { return weights_.size(); }
    /// histogram()[w] = number of syndromes of coset-leader weight w.
    const std::vector<std::uint64_t>& histogram() const noexcept { return histogram_; }
    std::span<const std::uint8_t> weights() const noexcept { return weights_; }

   private:
    Code code_;
    std::vector<std::uint8_t> weights_;
    std::vector<std::uint64_t> histogram_;
    unsigned radius_ = 0;
};

/// max_u d(u, C), via the coset-weight table.
unsigned covering_radius(const Code& code, const SearchLimits& limits = {});

/// Exact minimum distance: codeword enumeration when q^k <= max_codewords,
/// otherwise the smallest linearly dependent set of columns of H.
unsigned minimum_distance(const Code& code, const SearchLimits& limits = {});

/// q^e, or BoundExceeded when it passes `bound`.
std::uint64_t checked_power(std::uint64_t q, std::uint64_t e, std::uint64_t bound, const std::string& what);

}  // namespace deephole
