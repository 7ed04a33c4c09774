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

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace deephole;

namespace {

const Field& gf5() { return make_field(5, 1); }

Polynomial P(const Field& f, std::vector<Elem> c) { return Polynomial(f, std::move(c)); }

Polynomial random_poly(const Field& f, int max_degree, std::mt19937_64& rng) {
    std::uniform_int_distribution<Elem> dist(0, f.order() - 1);
    std::vector<Elem> c(static_cast<std::size_t>(max_degree) + 1);
    for (auto& x : c) x = dist(rng);
    return Polynomial(f, c);
}

// Irreducible iff no factorization into two monic factors of positive degree.
std::set<Polynomial> reducible_by_products(const Field& f, unsigned degree) {
    std::vector<std::vector<Polynomial>> monics(degree);
    for (unsigned d = 1; d < degree; ++d) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= f.order();
        for (std::uint64_t low = 0; low < count; ++low) {
            std::vector<Elem> c(d + 1);
            std::uint64_t rest = low;
            for (unsigned i = 0; i < d; ++i) {
                c[i] = static_cast<Elem>(rest % f.order());
                rest /= f.order();
            }
            c[d] = 1;
            monics[d].emplace_back(f, c);
        }
    }
    std::set<Polynomial> out;
    for (unsigned d = 1; d < degree; ++d) {
        for (const auto& a : monics[d]) {
            for (const auto& b : monics[degree - d]) out.insert(a * b);
        }
    }
    return out;
}

}  // namespace

TEST(PolynomialTest, DegreeAndNormalization) {
    EXPECT_EQ(P(gf5(), {1, 2, 0, 0}).degree(), 1);
    EXPECT_TRUE(P(gf5(), {0, 0}).is_zero());
    EXPECT_EQ(Polynomial(gf5()).degree(), Polynomial::kZeroDegree);
    EXPECT_EQ(Polynomial::constant(gf5(), 0).degree(), Polynomial::kZeroDegree);
    EXPECT_EQ(Polynomial::monomial(gf5(), 3, 4).leading(), 3u);
    EXPECT_THROW(P(gf5(), {5}), std::out_of_range);
}

TEST(PolynomialTest, EvalExamples) {
    EXPECT_EQ(P(gf5(), {2, 0, 1}).eval(1), 3u);
    EXPECT_EQ(Polynomial(gf5()).eval(3), 0u);
    EXPECT_EQ(Polynomial::monomial(gf5(), 1, 3).eval(4), 4u);
    EXPECT_EQ(P(gf5(), {2, 0, 1})(gf5().element(1)).repr(), 3u);
}

TEST(PolynomialTest, DivmodExamples) {
    auto [q1, r1] = divmod(P(gf5(), {4, 0, 1}), P(gf5(), {4, 1}));
    EXPECT_EQ(q1, P(gf5(), {1, 1}));
    EXPECT_TRUE(r1.is_zero());
    auto [q2, r2] = divmod(Polynomial::monomial(gf5(), 1, 3), P(gf5(), {2, 0, 1}));
    EXPECT_EQ(q2, Polynomial::x(gf5()));
    EXPECT_EQ(r2, P(gf5(), {0, 3}));
    auto [q3, r3] = divmod(P(gf5(), {1, 2}), P(gf5(), {2, 0, 1}));
    EXPECT_TRUE(q3.is_zero());
    EXPECT_EQ(r3, P(gf5(), {1, 2}));
    EXPECT_THROW(divmod(P(gf5(), {1}), Polynomial(gf5())), std::domain_error);
}

TEST(PolynomialTest, DivmodPropertyRandom) {
    std::mt19937_64 rng(7);
    for (std::uint32_t q : {5u, 8u, 9u}) {
        const Field& f = make_field_of_order(q);
        for (int i = 0; i < 300; ++i) {
            const auto a = random_poly(f, 7, rng);
            auto b = random_poly(f, 4, rng);
            if (b.is_zero()) continue;
            auto [quo, rem] = divmod(a, b);
            EXPECT_EQ(quo * b + rem, a);
            EXPECT_LT(rem.degree(), b.degree());
        }
    }
}

TEST(PolynomialTest, GcdExamples) {
    const auto x5mx = Polynomial::field_vanishing(gf5());
    EXPECT_EQ(gcd(P(gf5(), {2, 0, 1}), x5mx), Polynomial::constant(gf5(), 1));
    EXPECT_EQ(gcd(P(gf5(), {4, 0, 1}), P(gf5(), {4, 1})), P(gf5(), {4, 1}));
    EXPECT_EQ(gcd(P(gf5(), {1, 2}), Polynomial(gf5())), P(gf5(), {3, 1}));
    EXPECT_THROW(gcd(Polynomial(gf5()), Polynomial(gf5())), std::invalid_argument);
}

TEST(PolynomialTest, GcdDividesBoth) {
    std::mt19937_64 rng(11);
    const Field& f = make_field(7, 1);
    for (int i = 0; i < 200; ++i) {
        const auto c = random_poly(f, 2, rng);
        const auto a = random_poly(f, 3, rng) * c;
        const auto b = random_poly(f, 3, rng) * c;
        if (a.is_zero() && b.is_zero()) continue;
        const auto g = gcd(a, b);
        EXPECT_TRUE(g.is_monic());
        EXPECT_TRUE((a % g).is_zero());
        EXPECT_TRUE((b % g).is_zero());
        if (!c.is_zero()) EXPECT_TRUE((g % c.monic()).is_zero());
    }
}

TEST(PolynomialTest, ModInverseExamples) {
    const auto p = P(gf5(), {2, 0, 1});
    EXPECT_EQ(mod_inverse(Polynomial::x(gf5()), p), P(gf5(), {0, 2}));
    EXPECT_EQ(mod_inverse(Polynomial::constant(gf5(), 1), p), Polynomial::constant(gf5(), 1));
    for (Elem c = 1; c < 5; ++c) {
        EXPECT_EQ(mod_inverse(Polynomial::constant(gf5(), c), p), Polynomial::constant(gf5(), gf5().pow(c, 3)));
    }
    EXPECT_THROW(mod_inverse(P(gf5(), {4, 1}), P(gf5(), {4, 0, 1})), std::domain_error);
}

TEST(PolynomialTest, ModInverseRoundTrip) {
    const Field& f = make_field(3, 2);
    for (const auto& m : monic_irreducibles(f, 2)) {
        for (Elem a = 0; a < 9; ++a) {
            for (Elem b = 0; b < 9; ++b) {
                if (a == 0 && b == 0) continue;
                const auto r = P(f, {a, b});
                EXPECT_EQ((r * mod_inverse(r, m)) % m, Polynomial::constant(f, 1));
            }
        }
    }
}

TEST(PolynomialTest, PowmodMatchesRepeatedMultiplication) {
    const Field& f = make_field(7, 1);
    const auto m = P(f, {3, 1, 0, 1});
    const auto base = P(f, {1, 2, 5});
    Polynomial acc = Polynomial::constant(f, 1);
    for (std::uint64_t e = 0; e < 30; ++e) {
        EXPECT_EQ(powmod(base, e, m), acc % m);
        acc = (acc * base) % m;
    }
}

TEST(PolynomialTest, IrreducibleExamples) {
    EXPECT_TRUE(is_irreducible(P(gf5(), {2, 0, 1})));
    EXPECT_FALSE(is_irreducible(P(gf5(), {4, 0, 1})));
    const Field& f2 = make_field(2, 1);
    EXPECT_TRUE(is_irreducible(P(f2, {1, 1, 0, 1})));
    EXPECT_THROW(is_irreducible(Polynomial::constant(gf5(), 1)), std::invalid_argument);
    EXPECT_THROW(is_irreducible(P(gf5(), {1, 2})), std::invalid_argument);
}

TEST(PolynomialTest, MonicIrreduciblesExamples) {
    EXPECT_EQ(monic_irreducibles(gf5(), 2).size(), 10u);
    EXPECT_EQ(monic_irreducibles(gf5(), 3).size(), 40u);
    const Field& f2 = make_field(2, 1);
    EXPECT_EQ(monic_irreducibles(f2, 3), (std::vector<Polynomial>{P(f2, {1, 1, 0, 1}), P(f2, {1, 0, 1, 1})}));
    EXPECT_THROW(monic_irreducibles(gf5(), 0), std::invalid_argument);
}

TEST(PolynomialTest, IrreduciblesMatchProductSieve) {
    for (auto [q, d] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 4}, {3, 4}, {4, 2}, {4, 3}, {5, 3}, {9, 2}}) {
        const Field& f = make_field_of_order(q);
        const auto reducible = reducible_by_products(f, d);
        const auto irr = monic_irreducibles(f, d);
        std::uint64_t total = 1;
        for (unsigned i = 0; i < d; ++i) total *= q;
        EXPECT_EQ(irr.size() + reducible.size(), total) << q << " " << d;
        for (const auto& p : irr) EXPECT_EQ(reducible.count(p), 0u);
        EXPECT_EQ(irr.size(), necklace_count(q, d));
        EXPECT_TRUE(std::is_sorted(irr.begin(), irr.end()));
    }
}

TEST(PolynomialTest, NecklaceCount) {
    EXPECT_EQ(necklace_count(5, 2), 10u);
    EXPECT_EQ(necklace_count(5, 3), 40u);
    EXPECT_EQ(necklace_count(2, 4), 3u);
    EXPECT_EQ(necklace_count(3, 6), 116u);
}

TEST(PolynomialTest, DiscriminantAgreesForOddQ) {
    for (std::uint32_t q : {3u, 5u, 7u, 9u, 11u, 25u}) {
        const Field& f = make_field_of_order(q);
        for (Elem b = 0; b < q; ++b) {
            for (Elem c = 0; c < q; ++c) {
                const auto p = P(f, {c, b, 1});
                EXPECT_EQ(quadratic_irreducible_by_discriminant(p), is_irreducible(p));
            }
        }
    }
    EXPECT_THROW(quadratic_irreducible_by_discriminant(P(make_field(2, 2), {1, 1, 1})), std::invalid_argument);
}

TEST(PolynomialTest, RootExamples) {
    const auto roots = distinct_roots_in_field(Polynomial::field_vanishing(gf5()));
    EXPECT_EQ(roots, (std::vector<Elem>{1, 2, 3, 4, 0}));
    EXPECT_TRUE(distinct_roots_in_field(P(gf5(), {2, 0, 1})).empty());
    const auto f = P(gf5(), {4, 1}) * P(gf5(), {4, 1}) * P(gf5(), {3, 1});
    EXPECT_EQ(distinct_roots_in_field(f), (std::vector<Elem>{1, 2}));
    EXPECT_FALSE(splits_distinct_linear(f));
    EXPECT_TRUE(splits_distinct_linear(P(gf5(), {4, 0, 1})));
    EXPECT_THROW(distinct_roots_in_field(Polynomial(gf5())), std::invalid_argument);
}

TEST(PolynomialTest, InterpolateExamples) {
    const std::vector<std::pair<Elem, Elem>> sq = {{1, 1}, {2, 4}, {3, 4}, {4, 1}, {0, 0}};
    EXPECT_EQ(interpolate(gf5(), sq), Polynomial::monomial(gf5(), 1, 2));
    const std::vector<std::pair<Elem, Elem>> one = {{3, 2}};
    EXPECT_EQ(interpolate(gf5(), one), Polynomial::constant(gf5(), 2));
    std::vector<std::pair<Elem, Elem>> cube;
    for (Elem x : gf5().elements()) cube.emplace_back(x, gf5().pow(x, 3));
    EXPECT_EQ(interpolate(gf5(), cube), Polynomial::monomial(gf5(), 1, 3));
    const std::vector<std::pair<Elem, Elem>> dup = {{1, 1}, {1, 2}};
    EXPECT_THROW(interpolate(gf5(), dup), std::invalid_argument);
}

TEST(PolynomialTest, InterpolateRoundTripRandom) {
    std::mt19937_64 rng(3);
    const Field& f = make_field(2, 3);
    for (int i = 0; i < 100; ++i) {
        const auto g = random_poly(f, 5, rng);
        std::vector<std::pair<Elem, Elem>> pts;
        for (Elem x = 0; x < 6; ++x) pts.emplace_back(x, g.eval(x));
        EXPECT_EQ(interpolate(f, pts), g);
    }
}

TEST(PolynomialTest, RationalFunction) {
    const RationalFunction r(Polynomial::constant(gf5(), 1), P(gf5(), {2, 0, 1}));
    EXPECT_TRUE(r.defined_everywhere());
    std::vector<Elem> vals;
    for (Elem x : gf5().elements()) vals.push_back(r.eval(x));
    EXPECT_EQ(vals, (std::vector<Elem>{2, 1, 1, 2, 3}));
    const RationalFunction s(Polynomial::constant(gf5(), 1), P(gf5(), {4, 1}));
    EXPECT_FALSE(s.defined_everywhere());
    EXPECT_THROW(s.eval(1), std::domain_error);
    EXPECT_THROW(RationalFunction(Polynomial::constant(gf5(), 1), Polynomial(gf5())), std::domain_error);
}

TEST(PolynomialTest, RingAxiomsRandom) {
    std::mt19937_64 rng(5);
    const Field& f = make_field(3, 2);
    for (int i = 0; i < 200; ++i) {
        const auto a = random_poly(f, 4, rng), b = random_poly(f, 3, rng), c = random_poly(f, 2, rng);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a - a, Polynomial(f));
        EXPECT_EQ(a + (-a), Polynomial(f));
        for (Elem x = 0; x < 9; ++x) EXPECT_EQ((a * b).eval(x), f.mul(a.eval(x), b.eval(x)));
    }
}

TEST(PolynomialTest, MixedFieldsRejected) {
    EXPECT_THROW(Polynomial::x(gf5()) + Polynomial::x(make_field(7, 1)), std::invalid_argument);
}
