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
#include <stdexcept>
#include <string>
#include <vector>

namespace deephole {

/// Element of GF(p^m) encoded as its coefficient vector over GF(p), read as a
/// little-endian base-p integer. 0 and 1 encode the field's zero and one.
using Elem = std::uint32_t;

/// Raised when a requested enumeration or field size exceeds a configured bound.
class BoundExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class FieldElement;

/**
 * Finite field GF(p^m) with dense log/antilog tables.
 *
 * Fields are interned by make_field(): one instance per (p, m) lives for the
 * whole program, so `const Field*` identity doubles as field equality. The
 * modulus is the smallest monic irreducible of degree m when its low
 * coefficients are read as a base-p integer (constant term least significant).
 * All tables are built in the constructor and never mutated afterwards.
 */
class Field {
   public:
    static constexpr std::uint64_t kDefaultMaxOrder = std::uint64_t{1} << 20;

    Field(std::uint32_t p, unsigned m);
    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

    std::uint32_t characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return m_; }
    std::uint32_t order() const noexcept { return q_; }

    /// Modulus coefficients, low degree first, including the leading 1.
    /// Empty for prime fields.
    std::span<const Elem> modulus() const noexcept { return modulus_; }

    /// "p^m", e.g. "3^2"; just "p" for prime fields.
    std::string name() const;

    Elem add(Elem a, Elem b) const noexcept {
        if (m_ == 1) {
            const std::uint32_t s = a + b;
            return s >= p_ ? s - p_ : s;
        }
        if (p_ == 2) return a ^ b;
        if (!add_table_.empty()) return add_table_[std::size_t{a} * q_ + b];
        return add_digits(a, b);
    }
    Elem neg(Elem a) const noexcept { return neg_[a]; }
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg_[b]); }
    Elem mul(Elem a, Elem b) const noexcept {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    /// Multiplicative inverse; a must be nonzero.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const;
    /// a^n by square-and-multiply with 0^0 = 1.
    Elem pow(Elem a, std::uint64_t n) const noexcept;

    bool is_square(Elem a) const noexcept;

    /// Canonical order: nonzero reprs ascending, zero last.
    std::span<const Elem> elements() const noexcept { return elements_; }

    /// Smallest-repr generator of the multiplicative group.
    Elem primitive() const noexcept { return exp_[1]; }
    /// Log to base primitive(); a must be nonzero.
    std::uint32_t log(Elem a) const;
    Elem exp(std::uint64_t e) const noexcept { return exp_[e % (q_ - 1)]; }

    bool contains(Elem a) const noexcept { return a < q_; }

    FieldElement element(Elem repr) const;
    FieldElement zero() const;
    FieldElement one() const;

   private:
    Elem add_digits(Elem a, Elem b) const noexcept;

    std::uint32_t p_;
    unsigned m_;
    std::uint32_t q_;
    std::vector<Elem> modulus_;
    std::vector<std::uint32_t> log_;
    std::vector<Elem> exp_;  // length 2(q-1) so mul needs no reduction
    std::vector<Elem> neg_;
    std::vector<Elem> add_table_;  // q*q, only for small non-prime, odd-characteristic fields
    std::vector<Elem> elements_;
};

/// Interned GF(p^m). Throws std::invalid_argument for non-prime p or m = 0,
/// BoundExceeded when p^m > max_order.
const Field& make_field(std::uint32_t p, unsigned m, std::uint64_t max_order = Field::kDefaultMaxOrder);

/// Interned GF(q) for a prime power q.
const Field& make_field_of_order(std::uint64_t q, std::uint64_t max_order = Field::kDefaultMaxOrder);

bool is_prime(std::uint64_t n) noexcept;

/// Returns (p, m) with q = p^m, or (0, 0) if q is not a prime power.
std::pair<std::uint32_t, unsigned> prime_power(std::uint64_t q) noexcept;

/// A field element bound to its field; arithmetic checks that operands share a field.
class FieldElement {
   public:
    FieldElement(const Field& field, Elem repr);

    const Field& field() const noexcept { return *field_; }
    Elem repr() const noexcept { return repr_; }
    bool is_zero() const noexcept { return repr_ == 0; }

    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement operator/(const FieldElement& rhs) const;
    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(std::uint64_t n) const;

    bool operator==(const FieldElement& rhs) const noexcept {
        return field_ == rhs.field_ && repr_ == rhs.repr_;
    }

   private:
    void check_same(const FieldElement& rhs) const;

    const Field* field_;
    Elem repr_;
};

enum class ArithOp { add, sub, mul, div };

FieldElement arith(const FieldElement& a, const FieldElement& b, ArithOp op);

bool is_square(const FieldElement& a);

std::vector<FieldElement> elements(const Field& field);

/// Exponent e in [0, q-1) with g^e = a. Throws std::domain_error for a = 0 and
/// std::invalid_argument when g does not generate the multiplicative group.
std::uint64_t discrete_log(const FieldElement& a, const FieldElement& g);

}  // namespace deephole
