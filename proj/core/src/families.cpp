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

#include "deephole/families.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "deephole/numbertheory.hpp"

namespace deephole {

namespace {

std::vector<std::int64_t> as_params(std::span<const Elem> v) { return {v.begin(), v.end()}; }

unsigned expected_radius(const Code& code) {
    if (code.kind() == CodeKind::projective) return code.field().order() - code.dimension();
    return static_cast<unsigned>(code.length() - code.dimension());
}

void require_same_field(const Code& code, const Polynomial& p) {
    if (&p.field() != &code.field()) throw std::invalid_argument("polynomial over a different field than the code");
}

void require_irreducible(const Polynomial& p, int degree) {
    if (p.degree() != degree || !p.is_monic()) {
        throw std::invalid_argument("expected a monic polynomial of degree " + std::to_string(degree) + ", got " +
                                    p.to_string());
    }
    if (!is_irreducible(p)) throw std::invalid_argument(p.to_string() + " is reducible");
}

// Adds a member, verifying its distance; duplicates of an existing coset are dropped.
void add_member(DeepHoleFamily& family, const CosetWeightTable& table, FamilyMember m) {
    const Code& code = table.code();
    m.key = syndrome_key(code.field(), code.syndrome(m.word));
    const unsigned d = table.weight(m.key);
    if (d != family.distance) {
        throw HypothesisFailure(to_string(family.tag) + " word " + m.numerator.to_string() + " lies at distance " +
                                std::to_string(d) + ", expected " + std::to_string(family.distance));
    }
    if (family.cosets.insert(m.key).second) family.members.push_back(std::move(m));
}

DeepHoleFamily start_family(FamilyTag tag, const CosetWeightTable& table) {
    require_expected_radius(table);
    DeepHoleFamily family;
    family.tag = tag;
    family.distance = table.covering_radius();
    const Code& code = table.code();
    family.params["q"] = {code.field().order()};
    family.params["n"] = {static_cast<std::int64_t>(code.length())};
    family.params["k"] = {code.dimension()};
    return family;
}

Word rational_word(const Code& code, const Polynomial& num, const Polynomial& den) {
    return code.word_from_rational(RationalFunction(num, den), 0);
}

void require_prs_range(const Code& code) {
    if (code.kind() != CodeKind::projective) throw std::invalid_argument("construction expects a projective code");
    if (!prs_construction_range(code.field().order(), code.dimension())) {
        throw std::invalid_argument("k = " + std::to_string(code.dimension()) + " outside the construction range for q = " +
                                    std::to_string(code.field().order()));
    }
}

}  // namespace

std::string to_string(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::degree_k:
            return "degree_k";
        case FamilyTag::inverse_monomial:
            return "inverse_monomial";
        case FamilyTag::zero_sum_free:
            return "zero_sum_free";
        case FamilyTag::quadratic:
            return "quadratic";
        case FamilyTag::cubic:
            return "cubic";
    }
    return "unknown";
}

bool prs_construction_range(std::uint32_t q, unsigned k) noexcept {
    if (q % 2 == 1) return k >= 2 && k + 2 <= q;
    return k >= 3 && k + 3 <= q;
}

void require_expected_radius(const CosetWeightTable& table) {
    const unsigned expected = expected_radius(table.code());
    if (table.covering_radius() != expected) {
        throw HypothesisFailure("covering radius of " + table.code().describe() + " is " +
                                std::to_string(table.covering_radius()) + ", expected " + std::to_string(expected));
    }
}

DeepHoleFamily degree_k_family(const CosetWeightTable& table) {
    const Code& code = table.code();
    const Field& f = code.field();
    const unsigned k = code.dimension();
    if (code.kind() == CodeKind::projective) require_prs_range(code);
    DeepHoleFamily family = start_family(FamilyTag::degree_k, table);
    for (Elem a : f.elements()) {
        if (a == 0) continue;
        const Polynomial fx = Polynomial::monomial(f, a, k);
        if (code.kind() == CodeKind::projective) {
            for (Elem v : f.elements()) add_member(family, table, {fx, v, code.evaluate(fx, v), 0});
        } else {
            add_member(family, table, {fx, 0, code.evaluate(fx), 0});
        }
    }
    const std::uint64_t q = f.order();
    const std::uint64_t expected = code.kind() == CodeKind::projective ? q * (q - 1) : q - 1;
    if (family.cosets.size() != expected) {
        throw HypothesisFailure("degree-k family has " + std::to_string(family.cosets.size()) + " cosets, expected " +
                                std::to_string(expected));
    }
    return family;
}

DeepHoleFamily degree_k_family(const Code& code, const SearchLimits& limits) {
    return degree_k_family(CosetWeightTable(code, limits));
}

DeepHoleFamily inverse_monomial_family(const CosetWeightTable& table, Elem delta) {
    const Code& code = table.code();
    const Field& f = code.field();
    if (code.kind() != CodeKind::affine) throw std::invalid_argument("inverse-monomial family needs an affine code");
    if (!f.contains(delta)) throw std::out_of_range("delta outside the field");
    const auto pts = code.points();
    if (std::find(pts.begin(), pts.end(), delta) != pts.end()) {
        throw std::invalid_argument("delta = " + std::to_string(delta) + " lies in the evaluation set");
    }
    DeepHoleFamily family = start_family(FamilyTag::inverse_monomial, table);
    family.params["delta"] = {delta};
    family.params["D"] = as_params(pts);
    // (x - delta)^{q-2} agrees with 1/(x - delta) on D.
    const Polynomial shifted(f, {f.neg(delta), 1});
    Polynomial power = Polynomial::constant(f, 1);
    for (std::uint32_t i = 0; i + 2 < f.order(); ++i) power = power * shifted;
    for (Elem a : f.elements()) {
        if (a == 0) continue;
        const Polynomial fx = power.scaled(a);
        add_member(family, table, {Polynomial::constant(f, a), 0, code.evaluate(fx), 0});
    }
    return family;
}

DeepHoleFamily inverse_monomial_family(const Code& code, Elem delta, const SearchLimits& limits) {
    return inverse_monomial_family(CosetWeightTable(code, limits), delta);
}

DeepHoleFamily zero_sum_free_family(const CosetWeightTable& table, unsigned r) {
    const Code& code = table.code();
    const Field& f = code.field();
    if (code.kind() != CodeKind::affine) throw std::invalid_argument("zero-sum-free family needs an affine code");
    const auto pts = code.points();
    if (!is_zero_sum_free(f, pts, r)) {
        throw std::invalid_argument("evaluation set is not " + std::to_string(r) + "-zero-sum-free");
    }
    const unsigned k = code.dimension();
    if (k + r + 1 != pts.size()) {
        throw std::invalid_argument("zero-sum-free family needs k = |D| - r - 1");
    }
    DeepHoleFamily family = start_family(FamilyTag::zero_sum_free, table);
    family.params["D"] = as_params(pts);
    family.params["r"] = {r};
    const Elem total = std::accumulate(pts.begin(), pts.end(), Elem{0}, [&f](Elem a, Elem b) { return f.add(a, b); });
    family.params["sum_D"] = {total};
    std::vector<Elem> coeffs(k + 2, 0);
    coeffs[k + 1] = 1;
    coeffs[k] = f.neg(total);
    const Polynomial base(f, coeffs);
    for (Elem a : f.elements()) {
        if (a == 0) continue;
        const Polynomial fx = base.scaled(a);
        add_member(family, table, {fx, 0, code.evaluate(fx), 0});
    }

    auto disjoint = [&family](const DeepHoleFamily& other) {
        return std::none_of(other.cosets.begin(), other.cosets.end(),
                            [&family](SyndromeKey key) { return family.cosets.count(key) != 0; });
    };
    if (!disjoint(degree_k_family(table))) {
        throw HypothesisFailure("zero-sum-free coset coincides with a degree-k coset");
    }
    std::int64_t checked = 0;
    for (Elem delta : f.elements()) {
        if (std::find(pts.begin(), pts.end(), delta) != pts.end()) continue;
        if (!disjoint(inverse_monomial_family(table, delta))) {
            throw HypothesisFailure("zero-sum-free coset coincides with an inverse-monomial coset");
        }
        ++checked;
    }
    family.params["inverse_monomial_deltas_checked"] = {checked};
    return family;
}

DeepHoleFamily zero_sum_free_family(const Field& field, const std::vector<Elem>& set, unsigned r,
                                    const SearchLimits& limits) {
    if (set.size() < r + 2) throw std::invalid_argument("zero-sum-free family needs |D| >= r + 2 so that k >= 1");
    if (!is_zero_sum_free(field, set, r)) {
        throw std::invalid_argument("evaluation set is not " + std::to_string(r) + "-zero-sum-free");
    }
    const Code code = Code::affine(field, set, static_cast<unsigned>(set.size() - r - 1));
    return zero_sum_free_family(CosetWeightTable(code, limits), r);
}

DeepHoleFamily quadratic_family(const CosetWeightTable& table, const Polynomial& p) {
    const Code& code = table.code();
    require_same_field(code, p);
    require_irreducible(p, 2);
    require_prs_range(code);
    const Field& f = code.field();
    DeepHoleFamily family = start_family(FamilyTag::quadratic, table);
    family.params["p"] = as_params(p.coeffs());
    for (Elem b : f.elements()) {
        for (Elem a : f.elements()) {
            if (a == 0 && b == 0) continue;
            const Polynomial num(f, {a, b});
            add_member(family, table, {num, 0, rational_word(code, num, p), 0});
        }
    }
    const std::uint64_t q = f.order();
    if (family.cosets.size() != q * q - 1) {
        throw HypothesisFailure("DH(p) has " + std::to_string(family.cosets.size()) + " cosets, expected q^2 - 1");
    }
    return family;
}

DeepHoleFamily quadratic_family(const Code& code, const Polynomial& p, const SearchLimits& limits) {
    return quadratic_family(CosetWeightTable(code, limits), p);
}

DeepHoleFamily cubic_family(const CosetWeightTable& table, const Polynomial& p, bool check_count) {
    const Code& code = table.code();
    require_same_field(code, p);
    const Field& f = code.field();
    if (code.kind() != CodeKind::projective || code.dimension() + 3 != f.order()) {
        throw std::invalid_argument("cubic family needs PRS(q+1, q-3)");
    }
    require_irreducible(p, 3);
    require_expected_radius(table);
    DeepHoleFamily family = start_family(FamilyTag::cubic, table);
    family.params["p"] = as_params(p.coeffs());
    std::int64_t nondeep = 0;
    for (Elem c : f.elements()) {
        for (Elem b : f.elements()) {
            for (Elem a : f.elements()) {
                if (a == 0 && b == 0 && c == 0) continue;
                const Polynomial num(f, {a, b, c});
                Word w = rational_word(code, num, p);
                const SyndromeKey key = syndrome_key(f, code.syndrome(w));
                if (table.weight(key) != family.distance) {
                    ++nondeep;
                    continue;
                }
                if (family.cosets.insert(key).second) family.members.push_back({num, 0, std::move(w), key});
            }
        }
    }
    family.params["nondeep_numerators"] = {nondeep};
    const std::uint64_t q = f.order();
    const std::uint64_t expected = (q - 1) * (q * q + q + 2) / 2;
    if (check_count && family.cosets.size() != expected) {
        throw HypothesisFailure("cubic family of " + p.to_string() + " has " + std::to_string(family.cosets.size()) +
                                " cosets, expected " + std::to_string(expected));
    }
    return family;
}

DeepHoleFamily cubic_family(const Code& code, const Polynomial& p, const SearchLimits& limits) {
    return cubic_family(CosetWeightTable(code, limits), p);
}

CubicDegreeKOverlap cubic_degree_k_overlap(const CosetWeightTable& table, const Polynomial& p) {
    const Code& code = table.code();
    const Field& f = code.field();
    const auto cubic = cubic_family(table, p);
    const auto degk = degree_k_family(table);
    CubicDegreeKOverlap out;
    std::set_intersection(cubic.cosets.begin(), cubic.cosets.end(), degk.cosets.begin(), degk.cosets.end(),
                          std::inserter(out.overlap, out.overlap.end()));
    const unsigned k = code.dimension();
    const Elem alpha = p.coeff(2);
    for (Elem e : f.elements()) {
        if (e == 0) continue;
        std::vector<Elem> coeffs(k + 1, 0);
        coeffs[k] = e;
        coeffs[k - 1] = f.neg(f.mul(e, alpha));
        out.predicted.insert(syndrome_key(f, code.syndrome(code.evaluate(Polynomial(f, coeffs), 0))));
    }
    return out;
}

std::uint64_t pack_numerator(const Polynomial& n) {
    const std::uint64_t q = n.field().order();
    if (n.degree() > 2) throw std::invalid_argument("numerator degree exceeds 2");
    return n.coeff(0) + q * n.coeff(1) + q * q * n.coeff(2);
}

std::set<std::uint64_t> cubic_nondeep_numerators_by_splitting(const Polynomial& p) {
    require_irreducible(p, 3);
    const Field& f = p.field();
    const auto els = f.elements();
    std::vector<Polynomial> linear;
    for (Elem s : els) linear.emplace_back(f, std::vector<Elem>{f.neg(s), 1});

    std::set<std::uint64_t> out;
    auto add_products = [&](const std::vector<std::size_t>& excluded) {
        Polynomial prod = Polynomial::constant(f, 1);
        for (std::size_t i = 0; i < linear.size(); ++i) {
            if (std::find(excluded.begin(), excluded.end(), i) == excluded.end()) prod = (prod * linear[i]) % p;
        }
        for (Elem d : els) {
            if (d != 0) out.insert(pack_numerator(prod.scaled(d)));
        }
    };
    for (std::size_t i = 0; i < els.size(); ++i) {
        add_products({i});
        for (std::size_t j = i + 1; j < els.size(); ++j) add_products({i, j});
    }
    return out;
}

bool is_deep_hole(const CosetWeightTable& table, const Word& w) {
    return table.distance(w) == table.covering_radius();
}

bool is_deep_hole(const Code& code, const Word& w, const SearchLimits& limits) {
    return is_deep_hole(CosetWeightTable(code, limits), w);
}

bool same_coset(const Code& code, const Word& w1, const Word& w2) { return code.syndrome(w1) == code.syndrome(w2); }

bool same_projective_coset(const Code& code, const Word& w1, const Word& w2) {
    const Field& f = code.field();
    return normalize_projective(f, code.syndrome(w1)) == normalize_projective(f, code.syndrome(w2));
}

std::set<SyndromeKey> dh_intersection(const CosetWeightTable& table, const Polynomial& p1, const Polynomial& p2) {
    const Code& code = table.code();
    const Field& f = code.field();
    if (f.order() % 2 == 0) throw std::invalid_argument("dh_intersection needs odd q");
    if (code.kind() != CodeKind::projective || code.dimension() + 2 != f.order()) {
        throw std::invalid_argument("dh_intersection needs PRS(q+1, q-2)");
    }
    require_same_field(code, p1);
    require_same_field(code, p2);
    require_irreducible(p1, 2);
    require_irreducible(p2, 2);
    if (p1 == p2) throw std::invalid_argument("dh_intersection needs distinct polynomials");

    const Polynomial base = (Polynomial::field_vanishing(f) * mod_inverse(p2 % p1, p1)) % p1;
    std::set<SyndromeKey> congruence;
    for (Elem a : f.elements()) {
        if (a == 0) continue;
        const Polynomial num = base.scaled(a);
        congruence.insert(syndrome_key(f, code.syndrome(rational_word(code, num, p1))));
    }
    const auto d1 = quadratic_family(table, p1);
    const auto d2 = quadratic_family(table, p2);
    std::set<SyndromeKey> brute;
    std::set_intersection(d1.cosets.begin(), d1.cosets.end(), d2.cosets.begin(), d2.cosets.end(),
                          std::inserter(brute, brute.end()));
    if (brute != congruence) {
        throw HypothesisFailure("congruence construction disagrees with the brute-force intersection of DH(" +
                                p1.to_string() + ") and DH(" + p2.to_string() + ")");
    }
    return congruence;
}

std::set<SyndromeKey> projective_keys(const Field& field, std::size_t redundancy, const std::set<SyndromeKey>& raw) {
    std::set<SyndromeKey> out;
    for (SyndromeKey k : raw) {
        out.insert(syndrome_key(field, normalize_projective(field, syndrome_from_key(field, k, redundancy))));
    }
    return out;
}

}  // namespace deephole
