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

#include "deephole/field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace deephole {

namespace {

// Dense polynomials over Z/p used only while bootstrapping GF(p^m): finding the
// modulus and multiplying coefficient vectors before the log tables exist.
using PrimePoly = std::vector<std::uint64_t>;

void trim(PrimePoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

PrimePoly poly_mod(PrimePoly a, const PrimePoly& m, std::uint64_t p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint64_t lead_inv = [&] {
        std::uint64_t r = 1, b = m.back() % p, e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    }();
    while (a.size() > dm) {
        const std::uint64_t c = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) {
            a[shift + i] = (a[shift + i] + p - c * m[i] % p) % p;
        }
        trim(a);
    }
    return a;
}

PrimePoly poly_mulmod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& m, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PrimePoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return poly_mod(std::move(r), m, p);
}

PrimePoly poly_gcd(PrimePoly a, PrimePoly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        a = poly_mod(std::move(a), b, p);
        std::swap(a, b);
    }
    return a;
}

// Ben-Or: f of degree m is irreducible iff gcd(x^{p^i} - x, f) = 1 for i <= m/2.
bool prime_poly_irreducible(const PrimePoly& f, std::uint64_t p) {
    const std::size_t m = f.size() - 1;
    PrimePoly xp = poly_mod(PrimePoly{0, 1}, f, p);
    for (std::size_t i = 1; i <= m / 2; ++i) {
        // xp <- xp^p mod f
        PrimePoly base = xp, acc{1};
        for (std::uint64_t e = p; e; e >>= 1) {
            if (e & 1) acc = poly_mulmod(acc, base, f, p);
            base = poly_mulmod(base, base, f, p);
        }
        xp = acc;
        PrimePoly diff = xp;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        trim(diff);
        if (diff.empty()) return false;
        if (poly_gcd(diff, f, p).size() != 1) return false;
    }
    return true;
}

std::vector<std::uint64_t> digits(std::uint64_t v, std::uint64_t p, unsigned m) {
    std::vector<std::uint64_t> d(m, 0);
    for (unsigned i = 0; i < m; ++i) {
        d[i] = v % p;
        v /= p;
    }
    return d;
}

std::uint64_t from_digits(const PrimePoly& d, std::uint64_t p) {
    std::uint64_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
    return v;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::pair<std::uint32_t, unsigned> prime_power(std::uint64_t q) noexcept {
    if (q < 2) return {0, 0};
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return {static_cast<std::uint32_t>(q), 1};
    unsigned m = 0;
    while (q % p == 0) {
        q /= p;
        ++m;
    }
    if (q != 1) return {0, 0};
    return {static_cast<std::uint32_t>(p), m};
}

Field::Field(std::uint32_t p, unsigned m) : p_(p), m_(m), q_(1) {
    for (unsigned i = 0; i < m; ++i) q_ *= p;

    const std::uint64_t P = p;
    PrimePoly mod;
    if (m > 1) {
        for (std::uint64_t low = 0; low < q_; ++low) {
            PrimePoly cand = digits(low, P, m);
            cand.push_back(1);
            if (cand[0] == 0) continue;  // divisible by x
            if (prime_poly_irreducible(cand, P)) {
                mod = std::move(cand);
                break;
            }
        }
        modulus_.assign(mod.begin(), mod.end());
    }

    auto slow_mul = [&](std::uint64_t a, std::uint64_t b) -> Elem {
        if (m == 1) return static_cast<Elem>(a * b % P);
        PrimePoly r = poly_mulmod(digits(a, P, m), digits(b, P, m), mod, P);
        return static_cast<Elem>(from_digits(r, P));
    };

    // Smallest generator of the multiplicative group.
    const std::uint64_t group = q_ - 1;
    const auto factors = prime_factors(group);
    Elem gen = 1;
    if (group > 1) {
        for (Elem g = 2; g < q_; ++g) {
            bool ok = true;
            for (std::uint64_t f : factors) {
                std::uint64_t e = group / f;
                Elem acc = 1, base = g;
                while (e) {
                    if (e & 1) acc = slow_mul(acc, base);
                    base = slow_mul(base, base);
                    e >>= 1;
                }
                if (acc == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                gen = g;
                break;
            }
        }
    }

    log_.assign(q_, 0);
    exp_.assign(2 * group, 0);
    Elem cur = 1;
    for (std::uint64_t e = 0; e < group; ++e) {
        exp_[e] = cur;
        exp_[e + group] = cur;
        log_[cur] = static_cast<std::uint32_t>(e);
        cur = slow_mul(cur, gen);
    }

    neg_.assign(q_, 0);
    for (Elem a = 0; a < q_; ++a) {
        auto d = digits(a, P, m);
        for (auto& x : d) x = (P - x) % P;
        neg_[a] = static_cast<Elem>(from_digits(d, P));
    }

    if (m > 1 && p != 2 && q_ <= 1024) {
        add_table_.assign(std::size_t{q_} * q_, 0);
        for (Elem a = 0; a < q_; ++a) {
            for (Elem b = 0; b < q_; ++b) add_table_[std::size_t{a} * q_ + b] = add_digits(a, b);
        }
    }

    elements_.reserve(q_);
    for (Elem a = 1; a < q_; ++a) elements_.push_back(a);
    elements_.push_back(0);
}

Elem Field::add_digits(Elem a, Elem b) const noexcept {
    Elem r = 0, scale = 1;
    while (a || b) {
        Elem d = a % p_ + b % p_;
        if (d >= p_) d -= p_;
        r += d * scale;
        scale *= p_;
        a /= p_;
        b /= p_;
    }
    return r;
}

std::string Field::name() const {
    return m_ == 1 ? std::to_string(p_) : std::to_string(p_) + "^" + std::to_string(m_);
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw std::domain_error("division by zero in GF(" + name() + ")");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem Field::pow(Elem a, std::uint64_t n) const noexcept {
    Elem acc = 1;
    while (n) {
        if (n & 1) acc = mul(acc, a);
        a = mul(a, a);
        n >>= 1;
    }
    return acc;
}

bool Field::is_square(Elem a) const noexcept {
    if (p_ == 2 || a == 0) return true;
    return log_[a] % 2 == 0;
}

std::uint32_t Field::log(Elem a) const {
    if (a == 0) throw std::domain_error("logarithm of zero");
    return log_[a];
}

FieldElement Field::element(Elem repr) const { return FieldElement(*this, repr); }
FieldElement Field::zero() const { return FieldElement(*this, 0); }
FieldElement Field::one() const { return FieldElement(*this, 1); }

const Field& make_field(std::uint32_t p, unsigned m, std::uint64_t max_order) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    if (m == 0) throw std::invalid_argument("extension degree must be at least 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < m; ++i) {
        q *= p;
        if (q > max_order) {
            throw BoundExceeded("GF(" + std::to_string(p) + "^" + std::to_string(m) + ") exceeds the field size bound " +
                                std::to_string(max_order));
        }
    }

    static std::mutex mutex;
    static std::map<std::pair<std::uint32_t, unsigned>, std::unique_ptr<Field>> registry;
    std::lock_guard lock(mutex);
    auto& slot = registry[{p, m}];
    if (!slot) slot = std::make_unique<Field>(p, m);
    return *slot;
}

const Field& make_field_of_order(std::uint64_t q, std::uint64_t max_order) {
    auto [p, m] = prime_power(q);
    if (p == 0) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    return make_field(p, m, max_order);
}

FieldElement::FieldElement(const Field& field, Elem repr) : field_(&field), repr_(repr) {
    if (repr >= field.order()) {
        throw std::out_of_range("repr " + std::to_string(repr) + " outside GF(" + field.name() + ")");
    }
}

void FieldElement::check_same(const FieldElement& rhs) const {
    if (field_ != rhs.field_) {
        throw std::invalid_argument("operands belong to different fields: GF(" + field_->name() + ") and GF(" +
                                    rhs.field_->name() + ")");
    }
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    check_same(rhs);
    return {*field_, field_->add(repr_, rhs.repr_)};
}
FieldElement FieldElement::operator-(const FieldElement& rhs) const {
    check_same(rhs);
    return {*field_, field_->sub(repr_, rhs.repr_)};
}
FieldElement FieldElement::operator*(const FieldElement& rhs) const {
    check_same(rhs);
    return {*field_, field_->mul(repr_, rhs.repr_)};
}
FieldElement FieldElement::operator/(const FieldElement& rhs) const {
    check_same(rhs);
    return {*field_, field_->div(repr_, rhs.repr_)};
}
FieldElement FieldElement::operator-() const { return {*field_, field_->neg(repr_)}; }
FieldElement FieldElement::inverse() const { return {*field_, field_->inv(repr_)}; }
FieldElement FieldElement::pow(std::uint64_t n) const { return {*field_, field_->pow(repr_, n)}; }

FieldElement arith(const FieldElement& a, const FieldElement& b, ArithOp op) {
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        case ArithOp::mul: return a * b;
        case ArithOp::div: return a / b;
    }
    throw std::invalid_argument("unknown arithmetic operation");
}

bool is_square(const FieldElement& a) { return a.field().is_square(a.repr()); }

std::vector<FieldElement> elements(const Field& field) {
    std::vector<FieldElement> out;
    out.reserve(field.order());
    for (Elem e : field.elements()) out.emplace_back(field, e);
    return out;
}

std::uint64_t discrete_log(const FieldElement& a, const FieldElement& g) {
    if (&a.field() != &g.field()) throw std::invalid_argument("discrete_log operands belong to different fields");
    if (a.is_zero()) throw std::domain_error("discrete log of zero");
    const Field& f = a.field();
    const std::uint64_t n = f.order() - 1;
    if (g.is_zero() || std::gcd<std::uint64_t, std::uint64_t>(f.log(g.repr()), n) != 1) {
        throw std::invalid_argument("element " + std::to_string(g.repr()) + " does not generate GF(" + f.name() + ")*");
    }
    // Scan powers of g.
    Elem cur = 1;
    for (std::uint64_t e = 0; e < n; ++e) {
        if (cur == a.repr()) return e;
        cur = f.mul(cur, g.repr());
    }
    throw std::logic_error("discrete_log: generator scan exhausted");
}

}  // namespace deephole
