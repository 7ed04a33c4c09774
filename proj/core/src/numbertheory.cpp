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

#include "deephole/numbertheory.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace deephole {

namespace {

void check_set(const Field& field, std::span<const Elem> set) {
    if (set.size() > kMaxSubsetSumSet) {
        throw BoundExceeded("subset-sum set of size " + std::to_string(set.size()) + " exceeds bound " +
                            std::to_string(kMaxSubsetSumSet));
    }
    std::set<Elem> seen;
    for (Elem e : set) {
        if (!field.contains(e)) throw std::out_of_range("set element outside GF(" + field.name() + ")");
        if (!seen.insert(e).second) throw std::invalid_argument("set elements must be distinct");
    }
}

}  // namespace

std::uint64_t subset_sum_count(const Field& field, std::span<const Elem> set, unsigned k, Elem g) {
    check_set(field, set);
    if (!field.contains(g)) throw std::out_of_range("target outside GF(" + field.name() + ")");
    if (k > set.size()) return 0;
    const std::size_t q = field.order();
    // dp[c * q + s] = number of c-subsets of the elements seen so far with sum s.
    std::vector<std::uint64_t> dp((k + 1) * q, 0);
    dp[0] = 1;
    std::size_t seen = 0;
    for (Elem d : set) {
        ++seen;
        for (std::size_t c = std::min<std::size_t>(k, seen); c >= 1; --c) {
            const std::uint64_t* from = &dp[(c - 1) * q];
            std::uint64_t* to = &dp[c * q];
            for (std::size_t s = 0; s < q; ++s) {
                if (from[s]) to[field.add(static_cast<Elem>(s), d)] += from[s];
            }
        }
    }
    return dp[k * q + g];
}

bool is_zero_sum_free(const Field& field, std::span<const Elem> set, unsigned r) {
    if (r < 2) throw std::invalid_argument("zero-sum-free order r must be at least 2");
    if (r > set.size()) {
        throw std::invalid_argument("r = " + std::to_string(r) + " exceeds |D| = " + std::to_string(set.size()));
    }
    return subset_sum_count(field, set, r, 0) == 0;
}

bool degree_k1_nondeephole(const Field& field, std::span<const Elem> set, unsigned k, Elem a) {
    if (k + 1 > set.size()) throw std::invalid_argument("degree_k1_nondeephole needs k + 1 <= |D|");
    return subset_sum_count(field, set, k + 1, a) > 0;
}

QuadraticExtension::QuadraticExtension(const Polynomial& qpoly)
    : base_(&qpoly.field()), ext_(nullptr), qpoly_(qpoly) {
    if (qpoly.degree() != 2 || !qpoly.is_monic()) throw std::invalid_argument("q(x) must be a monic quadratic");
    if (!is_irreducible(qpoly)) throw std::invalid_argument("q(x) = " + qpoly.to_string() + " is reducible");
    const Field& f = *base_;
    ext_ = &make_field(f.characteristic(), 2 * f.degree(), std::uint64_t{f.order()} * f.order());
    const Field& e = *ext_;

    auto eval_in_ext = [&e](std::span<const Elem> coeffs, Elem x) {
        Elem acc = 0;
        for (std::size_t i = coeffs.size(); i-- > 0;) acc = e.add(e.mul(acc, x), coeffs[i]);
        return acc;
    };

    // Prime-field elements share their representation in every extension.
    Elem beta = 0;
    if (f.degree() > 1) {
        const auto mod = f.modulus();
        bool found = false;
        for (Elem x = 0; x < e.order() && !found; ++x) {
            if (eval_in_ext(mod, x) == 0) {
                beta = x;
                found = true;
            }
        }
        if (!found) throw std::logic_error("base modulus has no root in the quadratic extension");
    }
    embedding_.resize(f.order());
    for (Elem a = 0; a < f.order(); ++a) {
        if (f.degree() == 1) {
            embedding_[a] = a;
            continue;
        }
        Elem acc = 0, power = 1, rest = a;
        for (unsigned i = 0; i < f.degree(); ++i) {
            acc = e.add(acc, e.mul(rest % f.characteristic(), power));
            rest /= f.characteristic();
            power = e.mul(power, beta);
        }
        embedding_[a] = acc;
    }

    std::vector<Elem> lifted;
    for (Elem c : qpoly.coeffs()) lifted.push_back(embedding_[c]);
    bool found = false;
    for (Elem x = 0; x < e.order() && !found; ++x) {
        if (eval_in_ext(lifted, x) == 0) {
            theta_ = x;
            found = true;
        }
    }
    if (!found) throw std::logic_error("q(x) has no root in the quadratic extension");
}

Elem QuadraticExtension::image(const Polynomial& r) const {
    if (&r.field() != base_) throw std::invalid_argument("residue over a different field");
    const Polynomial red = r % qpoly_;
    return ext_->add(embedding_[red.coeff(0)], ext_->mul(embedding_[red.coeff(1)], theta_));
}

std::uint64_t n3_bruteforce(const Polynomial& qpoly, const Polynomial& alpha, std::span<const Polynomial> cubics) {
    const Polynomial a = alpha % qpoly;
    if (a.is_zero()) throw std::domain_error("alpha is zero modulo q(x)");
    std::uint64_t count = 0;
    for (const auto& p : cubics) {
        const Polynomial r = p % qpoly;
        if (r.degree() != a.degree()) continue;
        const Elem l = qpoly.field().div(r.leading(), a.leading());
        if (a.scaled(l) == r) ++count;
    }
    return count;
}

std::uint64_t n3_bruteforce(const Polynomial& qpoly, const Polynomial& alpha) {
    const auto cubics = monic_irreducibles(qpoly.field(), 3);
    return n3_bruteforce(qpoly, alpha, cubics);
}

bool chi3_trivial(const QuadraticExtension& ext, const Polynomial& alpha, Elem generator) {
    const std::uint32_t q = ext.base().order();
    if (q % 3 != 2) throw std::domain_error("no cubic character trivial on GF(q)* unless q = 2 mod 3");
    const Elem v = ext.image(alpha);
    if (v == 0) throw std::domain_error("alpha is zero modulo q(x)");
    const Field& e = ext.extension();
    std::uint64_t dlog = 0;
    if (generator == 0 || generator == e.primitive()) {
        dlog = e.log(v);
    } else {
        dlog = discrete_log(FieldElement(e, v), FieldElement(e, generator));
    }
    return dlog % 3 == 0;
}

int r3(const QuadraticExtension& ext, const Polynomial& alpha) {
    if (ext.base().order() % 3 != 2) {
        if ((alpha % ext.modulus()).is_zero()) throw std::domain_error("alpha is zero modulo q(x)");
        return 0;
    }
    return chi3_trivial(ext, alpha) ? 2 : -1;
}

std::uint64_t n3_formula(const QuadraticExtension& ext, const Polynomial& alpha) {
    const std::int64_t q = ext.base().order();
    const std::int64_t num = q * (q - 1) - r3(ext, alpha);
    if (num % 3 != 0) throw std::logic_error("q(q-1) - r3 is not divisible by 3");
    return static_cast<std::uint64_t>(num / 3);
}

std::uint64_t n3_formula(const Polynomial& qpoly, const Polynomial& alpha) {
    return n3_formula(QuadraticExtension(qpoly), alpha);
}

std::vector<N3Row> n3_sweep(const Polynomial& qpoly) {
    const Field& f = qpoly.field();
    const QuadraticExtension ext(qpoly);
    const auto cubics = monic_irreducibles(f, 3);
    std::vector<N3Row> rows;
    const std::uint64_t q = f.order();
    for (std::uint64_t packed = 1; packed < q * q; ++packed) {
        Polynomial alpha(f, {static_cast<Elem>(packed % q), static_cast<Elem>(packed / q)});
        N3Row row{alpha, n3_bruteforce(qpoly, alpha, cubics), 0, r3(ext, alpha)};
        row.formula = n3_formula(ext, alpha);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace deephole
