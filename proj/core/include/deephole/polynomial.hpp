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
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "deephole/field.hpp"

namespace deephole {

/**
 * Univariate polynomial over a Field.
 *
 * Coefficients are stored low degree first with no trailing zeros; the zero
 * polynomial has no coefficients and degree kZeroDegree. Values are immutable
 * in spirit: every operation returns a new polynomial.
 *
 * Ordering (operator<=>) compares degree first, then coefficients from the
 * highest degree down, i.e. the polynomials of one degree are ordered like
 * base-q integers whose digits are the coefficients with the constant term
 * least significant.
 */
class Polynomial {
   public:
    static constexpr int kZeroDegree = std::numeric_limits<int>::min();

    explicit Polynomial(const Field& field) : field_(&field) {}
    Polynomial(const Field& field, std::vector<Elem> coeffs);

    static Polynomial constant(const Field& field, Elem c);
    static Polynomial monomial(const Field& field, Elem c, unsigned degree);
    static Polynomial x(const Field& field) { return monomial(field, 1, 1); }
    /// x^q - x over GF(q).
    static Polynomial field_vanishing(const Field& field);

    const Field& field() const noexcept { return *field_; }
    int degree() const noexcept { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }
    std::span<const Elem> coeffs() const noexcept { return coeffs_; }
    /// Coefficient of x^i (zero past the degree).
    Elem coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
    Elem leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }

    /// Horner evaluation.
    Elem eval(Elem x) const noexcept;
    FieldElement operator()(const FieldElement& x) const;

    Polynomial monic() const;
    Polynomial scaled(Elem c) const;

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator-() const;

    bool operator==(const Polynomial& rhs) const noexcept {
        return field_ == rhs.field_ && coeffs_ == rhs.coeffs_;
    }
    std::strong_ordering operator<=>(const Polynomial& rhs) const noexcept;

    std::string to_string() const;

   private:
    void check_same(const Polynomial& rhs) const;
    void normalize() noexcept;

    const Field* field_;
    std::vector<Elem> coeffs_;
};

/// Quotient and remainder with a = quotient*b + remainder, deg remainder < deg b.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial operator%(const Polynomial& a, const Polynomial& b);

/// Monic gcd by Euclid; throws when both arguments are zero.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Inverse of a modulo mod; throws std::domain_error when gcd(a, mod) != 1.
Polynomial mod_inverse(const Polynomial& a, const Polynomial& mod);

/// base^e mod `mod`.
Polynomial powmod(const Polynomial& base, std::uint64_t e, const Polynomial& mod);

/// Irreducibility of a monic polynomial of degree >= 1. Degrees up to 3 use the
/// root test; higher degrees use gcd(x^{q^i} - x, f) = 1 for i <= deg/2.
bool is_irreducible(const Polynomial& f);

/// Discriminant test for monic quadratics over odd q: irreducible iff b^2 - 4c is a non-square.
bool quadratic_irreducible_by_discriminant(const Polynomial& f);

/// All monic irreducibles of the given degree, in ascending Polynomial order.
std::vector<Polynomial> monic_irreducibles(const Field& field, unsigned degree);

/// Number of monic irreducibles of degree d over GF(q) from the necklace formula.
std::uint64_t necklace_count(std::uint64_t q, unsigned d);

/// Exact root set by scanning the field, in canonical element order.
std::vector<Elem> distinct_roots_in_field(const Polynomial& f);

/// True when f has deg f distinct roots in the field.
bool splits_distinct_linear(const Polynomial& f);

/// Unique polynomial of degree < points.size() through all points.
Polynomial interpolate(const Field& field, std::span<const std::pair<Elem, Elem>> points);

/// num/den evaluated pointwise.
struct RationalFunction {
    Polynomial num;
    Polynomial den;

    RationalFunction(Polynomial numerator, Polynomial denominator);

    const Field& field() const noexcept { return num.field(); }
    /// Throws std::domain_error when den(x) = 0.
    Elem eval(Elem x) const;
    /// True when den has no root in the field, so eval is defined everywhere.
    bool defined_everywhere() const;
};

}  // namespace deephole
