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

#include "deephole/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace deephole {

Polynomial::Polynomial(const Field& field, std::vector<Elem> coeffs) : field_(&field), coeffs_(std::move(coeffs)) {
    for (Elem c : coeffs_) {
        if (!field.contains(c)) throw std::out_of_range("coefficient outside GF(" + field.name() + ")");
    }
    normalize();
}

void Polynomial::normalize() noexcept {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void Polynomial::check_same(const Polynomial& rhs) const {
    if (field_ != rhs.field_) throw std::invalid_argument("polynomials over different fields");
}

Polynomial Polynomial::constant(const Field& field, Elem c) { return Polynomial(field, {c}); }

Polynomial Polynomial::monomial(const Field& field, Elem c, unsigned degree) {
    std::vector<Elem> v(degree + 1, 0);
    v[degree] = c;
    return Polynomial(field, std::move(v));
}

Polynomial Polynomial::field_vanishing(const Field& field) {
    std::vector<Elem> v(field.order() + 1, 0);
    v[field.order()] = 1;
    v[1] = field.neg(1);
    return Polynomial(field, std::move(v));
}

Elem Polynomial::eval(Elem x) const noexcept {
    Elem acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, x), coeffs_[i]);
    return acc;
}

FieldElement Polynomial::operator()(const FieldElement& x) const {
    if (&x.field() != field_) throw std::invalid_argument("evaluation point from a different field");
    return FieldElement(*field_, eval(x.repr()));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(field_->inv(leading()));
}

Polynomial Polynomial::scaled(Elem c) const {
    std::vector<Elem> v(coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_->mul(coeffs_[i], c);
    return Polynomial(*field_, std::move(v));
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    check_same(rhs);
    std::vector<Elem> v(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_->add(coeff(i), rhs.coeff(i));
    return Polynomial(*field_, std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    check_same(rhs);
    std::vector<Elem> v(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_->sub(coeff(i), rhs.coeff(i));
    return Polynomial(*field_, std::move(v));
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    check_same(rhs);
    if (is_zero() || rhs.is_zero()) return Polynomial(*field_);
    std::vector<Elem> v(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            v[i + j] = field_->add(v[i + j], field_->mul(coeffs_[i], rhs.coeffs_[j]));
        }
    }
    return Polynomial(*field_, std::move(v));
}

Polynomial Polynomial::operator-() const { return scaled(field_->neg(1)); }

std::strong_ordering Polynomial::operator<=>(const Polynomial& rhs) const noexcept {
    if (auto c = degree() <=> rhs.degree(); c != 0) return c;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (auto c = coeffs_[i] <=> rhs.coeffs_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (coeffs_[i] != 1 || i == 0) os << coeffs_[i];
        if (i >= 1) os << (coeffs_[i] != 1 ? "*x" : "x");
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (&a.field() != &b.field()) throw std::invalid_argument("polynomials over different fields");
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const Field& f = a.field();
    if (a.degree() < b.degree()) return {Polynomial(f), a};

    std::vector<Elem> rem(a.coeffs().begin(), a.coeffs().end());
    const auto bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    const Elem lead_inv = f.inv(bc.back());
    std::vector<Elem> quot(rem.size() - db, 0);
    for (std::size_t i = rem.size(); i-- > db;) {
        const Elem c = f.mul(rem[i], lead_inv);
        if (c == 0) continue;
        const std::size_t shift = i - db;
        quot[shift] = c;
        for (std::size_t j = 0; j <= db; ++j) rem[shift + j] = f.sub(rem[shift + j], f.mul(c, bc[j]));
    }
    rem.resize(db);
    return {Polynomial(f, std::move(quot)), Polynomial(f, std::move(rem))};
}

Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Polynomial mod_inverse(const Polynomial& a, const Polynomial& mod) {
    if (mod.degree() < 1) throw std::invalid_argument("modulus must have degree >= 1");
    const Field& f = a.field();
    // Extended Euclid tracking only the coefficient of a.
    Polynomial r0 = mod, r1 = a % mod;
    Polynomial s0(f), s1 = Polynomial::constant(f, 1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        Polynomial s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.degree() != 0) throw std::domain_error("polynomial is not invertible modulo " + mod.to_string());
    return s0.scaled(f.inv(r0.leading())) % mod;
}

Polynomial powmod(const Polynomial& base, std::uint64_t e, const Polynomial& mod) {
    const Field& f = base.field();
    Polynomial acc = Polynomial::constant(f, 1) % mod;
    Polynomial b = base % mod;
    while (e) {
        if (e & 1) acc = (acc * b) % mod;
        b = (b * b) % mod;
        e >>= 1;
    }
    return acc;
}

bool is_irreducible(const Polynomial& f) {
    if (f.degree() < 1) throw std::invalid_argument("irreducibility of a constant polynomial");
    if (!f.is_monic()) throw std::invalid_argument("irreducibility test expects a monic polynomial");
    const int d = f.degree();
    if (d == 1) return true;
    if (d <= 3) return distinct_roots_in_field(f).empty();
    const Field& field = f.field();
    const Polynomial x = Polynomial::x(field);
    Polynomial h = x % f;
    for (int i = 1; i <= d / 2; ++i) {
        h = powmod(h, field.order(), f);
        const Polynomial diff = h - x;
        if (diff.is_zero() || gcd(diff, f).degree() != 0) return false;
    }
    return true;
}

bool quadratic_irreducible_by_discriminant(const Polynomial& f) {
    const Field& field = f.field();
    if (f.degree() != 2 || !f.is_monic()) throw std::invalid_argument("expected a monic quadratic");
    if (field.characteristic() == 2) throw std::invalid_argument("discriminant test needs odd characteristic");
    const Elem b = f.coeff(1), c = f.coeff(0);
    const Elem four = field.add(field.add(1, 1), field.add(1, 1));
    const Elem disc = field.sub(field.mul(b, b), field.mul(four, c));
    return !field.is_square(disc);
}

std::vector<Polynomial> monic_irreducibles(const Field& field, unsigned degree) {
    if (degree == 0) throw std::invalid_argument("degree must be at least 1");
    std::uint64_t count = 1;
    for (unsigned i = 0; i < degree; ++i) count *= field.order();
    std::vector<Polynomial> out;
    std::vector<Elem> coeffs(degree + 1, 0);
    coeffs[degree] = 1;
    for (std::uint64_t low = 0; low < count; ++low) {
        std::uint64_t v = low;
        for (unsigned i = 0; i < degree; ++i) {
            coeffs[i] = static_cast<Elem>(v % field.order());
            v /= field.order();
        }
        if (degree > 1 && coeffs[0] == 0) continue;
        Polynomial cand(field, coeffs);
        if (is_irreducible(cand)) out.push_back(std::move(cand));
    }
    return out;
}

std::uint64_t necklace_count(std::uint64_t q, unsigned d) {
    auto mobius = [](unsigned n) {
        int mu = 1;
        for (unsigned p = 2; p * p <= n; ++p) {
            if (n % p == 0) {
                n /= p;
                if (n % p == 0) return 0;
                mu = -mu;
            }
        }
        if (n > 1) mu = -mu;
        return mu;
    };
    std::int64_t total = 0;
    for (unsigned e = 1; e <= d; ++e) {
        if (d % e) continue;
        std::int64_t pw = 1;
        for (unsigned i = 0; i < d / e; ++i) pw *= static_cast<std::int64_t>(q);
        total += mobius(e) * pw;
    }
    return static_cast<std::uint64_t>(total / d);
}

std::vector<Elem> distinct_roots_in_field(const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("root set of the zero polynomial");
    std::vector<Elem> roots;
    for (Elem x : f.field().elements()) {
        if (f.eval(x) == 0) roots.push_back(x);
    }
    return roots;
}

bool splits_distinct_linear(const Polynomial& f) {
    return static_cast<int>(distinct_roots_in_field(f).size()) == f.degree();
}

Polynomial interpolate(const Field& field, std::span<const std::pair<Elem, Elem>> points) {
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (points[i].first == points[j].first) throw std::invalid_argument("duplicate interpolation node");
        }
    }
    Polynomial result(field);
    for (std::size_t i = 0; i < points.size(); ++i) {
        Polynomial basis = Polynomial::constant(field, 1);
        Elem denom = 1;
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            basis = basis * Polynomial(field, {field.neg(points[j].first), 1});
            denom = field.mul(denom, field.sub(points[i].first, points[j].first));
        }
        result = result + basis.scaled(field.div(points[i].second, denom));
    }
    return result;
}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num(std::move(numerator)), den(std::move(denominator)) {
    if (&num.field() != &den.field()) throw std::invalid_argument("rational function over mixed fields");
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (!den.is_monic()) {
        const Elem s = den.field().inv(den.leading());
        num = num.scaled(s);
        den = den.scaled(s);
    }
}

Elem RationalFunction::eval(Elem x) const {
    const Elem d = den.eval(x);
    if (d == 0) throw std::domain_error("denominator vanishes at " + std::to_string(x));
    return field().div(num.eval(x), d);
}

bool RationalFunction::defined_everywhere() const { return distinct_roots_in_field(den).empty(); }

}  // namespace deephole
