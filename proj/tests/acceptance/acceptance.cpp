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

// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 on any FAIL.
// Criteria marked report-only print their measurements and pass unless they crash.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "deephole/classify.hpp"
#include "deephole/families.hpp"
#include "deephole/numbertheory.hpp"

using namespace deephole;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;
};

class Notes {
   public:
    void fail(const std::string& what) {
        pass_ = false;
        add("FAIL " + what);
    }
    void check(bool ok, const std::string& what) {
        if (!ok) fail(what);
    }
    void add(const std::string& s) { os_ << (first_ ? "" : "; ") << s, first_ = false; }
    Verdict verdict() const { return {pass_, os_.str()}; }

   private:
    bool pass_ = true;
    bool first_ = true;
    std::ostringstream os_;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::uint64_t pow_u(std::uint64_t q, unsigned e) {
    std::uint64_t v = 1;
    for (unsigned i = 0; i < e; ++i) v *= q;
    return v;
}

SearchLimits wide_limits() {
    SearchLimits l;
    l.max_span_redundancy = 16;
    return l;
}

std::set<SyndromeKey> unite(const std::vector<DeepHoleFamily>& fams) {
    std::set<SyndromeKey> out;
    for (const auto& f : fams) out.insert(f.cosets.begin(), f.cosets.end());
    return out;
}

// Every code named by criteria 1-6, in a fixed order.
std::vector<Code> criterion_codes() {
    std::vector<Code> codes;
    for (std::uint32_t q : {5u, 7u, 8u, 9u}) {
        const Field& f = make_field_of_order(q);
        for (unsigned k = 1; k < q; ++k) {
            if (pow_u(q, q - k) <= 10'000'000) codes.push_back(Code::reed_solomon(f, k));
        }
    }
    for (std::uint32_t q : {5u, 7u, 9u, 11u, 13u}) codes.push_back(Code::projective(make_field_of_order(q), q - 2));
    for (std::uint32_t q : {5u, 7u, 8u, 9u}) codes.push_back(Code::projective(make_field_of_order(q), q - 3));
    codes.push_back(Code::projective(make_field(5, 1), 4));
    codes.push_back(Code::projective(make_field(7, 1), 4));
    return codes;
}

Verdict covering_radii() {
    Notes n;
    std::size_t cases = 0;
    double slowest = 0;
    auto one = [&](const Code& code, unsigned expected) {
        const auto t0 = std::chrono::steady_clock::now();
        const unsigned rho = covering_radius(code);
        const double dt = seconds_since(t0);
        slowest = std::max(slowest, dt);
        ++cases;
        n.check(rho == expected, code.describe() + " rho " + std::to_string(rho) + " expected " + std::to_string(expected));
        n.check(dt < 60.0, code.describe() + " took over 60 s");
    };
    for (std::uint32_t q : {5u, 7u, 8u, 9u}) {
        const Field& f = make_field_of_order(q);
        for (unsigned k = 1; k < q; ++k) {
            if (pow_u(q, q - k) <= 10'000'000) one(Code::reed_solomon(f, k), q - k);
        }
    }
    for (std::uint32_t q : {5u, 7u, 9u, 11u}) one(Code::projective(make_field_of_order(q), q - 2), 2);
    for (std::uint32_t q : {5u, 7u, 8u, 9u}) one(Code::projective(make_field_of_order(q), q - 3), 3);
    one(Code::projective(make_field(5, 1), 4), 1);
    char buf[96];
    std::snprintf(buf, sizeof buf, "%zu codes, slowest %.2f s", cases, slowest);
    n.add(buf);
    return n.verdict();
}

Verdict deep_coset_counts() {
    Notes n;
    std::ostringstream os;
    for (std::uint32_t q : {5u, 7u, 9u, 11u, 13u}) {
        const std::uint64_t got = count_deep_cosets(Code::projective(make_field_of_order(q), q - 2));
        const std::uint64_t want = std::uint64_t{q - 1} * q * q;
        n.check(got == want, "k=q-2 q=" + std::to_string(q) + " got " + std::to_string(got));
        os << "q" << q << ":" << got << " ";
    }
    for (std::uint32_t q : {5u, 7u, 8u, 9u}) {
        const std::uint64_t got = count_deep_cosets(Code::projective(make_field_of_order(q), q - 3));
        const std::uint64_t qq = q;
        const std::uint64_t want = (qq - 1) * (qq * qq * qq + 2 * qq * qq + qq) / 2;
        n.check(got == want, "k=q-3 q=" + std::to_string(q) + " got " + std::to_string(got));
        os << "q" << q << "/k=q-3:" << got << " ";
    }
    n.add(os.str());
    return n.verdict();
}

Verdict completeness() {
    Notes n;
    std::ostringstream os;
    for (std::uint32_t q : {5u, 7u, 9u, 11u}) {
        const auto r = completeness_check(make_field_of_order(q));
        n.check(r.complete && r.union_size == r.total, "q=" + std::to_string(q) + " not complete");
        n.check(r.quadratics == (q * q - q) / 2, "q=" + std::to_string(q) + " wrong quadratic count");
        os << "q" << q << ":" << r.union_size << "/" << r.total << " ";
    }
    n.add(os.str());
    return n.verdict();
}

Verdict hypergraph() {
    Notes n;
    std::ostringstream os;
    for (std::uint32_t q : {5u, 7u, 9u, 11u}) {
        const auto st = hypergraph_stats(build_hypergraph(make_field_of_order(q)));
        const std::string tag = "q=" + std::to_string(q) + " ";
        n.check(st.vertex_count == q * q, tag + "|V|");
        n.check(st.edge_count == (q * q - q) / 2, tag + "|E|");
        n.check(st.unit_intersections, tag + "intersections");
        n.check(st.two_degrees, tag + "degrees");
        n.check(st.balanced_edges, tag + "edge split");
        os << "q" << q << ":V" << st.vertex_count << ",E" << st.edge_count << " ";
    }
    n.add(os.str());
    return n.verdict();
}

Verdict quadratic_family_distances() {
    Notes n;
    const SearchLimits limits = wide_limits();
    std::uint64_t words = 0, spot = 0;
    for (auto [q, k] : std::vector<std::pair<std::uint32_t, unsigned>>{{5, 3}, {7, 5}, {5, 2}, {7, 4}, {8, 5}}) {
        const Field& f = make_field_of_order(q);
        const Code code = Code::projective(f, k);
        const CosetWeightTable table(code);
        const std::string tag = "(" + std::to_string(q) + "," + std::to_string(k) + ") ";
        for (const auto& p : monic_irreducibles(f, 2)) {
            const auto fam = quadratic_family(table, p);
            n.check(fam.members.size() == q * q - 1, tag + "member count");
            std::vector<Word> ws;
            for (const auto& m : fam.members) {
                ++words;
                const unsigned d = syndrome_span_weight(code, code.syndrome(m.word), limits);
                n.check(d == q - k, tag + p.to_string() + " span distance " + std::to_string(d));
                ws.push_back(m.word);
            }
            if (pow_u(q, k) <= 10'000'000) {
                for (unsigned d : error_distances_exhaustive(code, ws)) {
                    n.check(d == q - k, tag + p.to_string() + " exhaustive distance " + std::to_string(d));
                }
                spot += ws.size();
            }
        }
    }
    n.add(std::to_string(words) + " words by span, " + std::to_string(spot) + " by exhaustive search");
    return n.verdict();
}

Verdict cubic_family_checks() {
    Notes n;
    std::ostringstream os;
    for (std::uint32_t q : {5u, 7u}) {
        const Field& f = make_field_of_order(q);
        const CosetWeightTable table(Code::projective(f, q - 3));
        const auto degk = degree_k_family(table);
        std::vector<DeepHoleFamily> quads, cubics;
        for (const auto& p : monic_irreducibles(f, 2)) quads.push_back(quadratic_family(table, p));
        const auto quad_union = unite(quads);
        const std::uint64_t want = (q - 1) * (q * q + q + 2) / 2;
        std::size_t min_new = SIZE_MAX;
        for (const auto& p : monic_irreducibles(f, 3)) {
            cubics.push_back(cubic_family(table, p, false));
            const auto& c = cubics.back();
            n.check(c.cosets.size() == want, "q=" + std::to_string(q) + " " + p.to_string() + " has " +
                                                 std::to_string(c.cosets.size()) + " cosets");
            std::size_t fresh = 0;
            for (SyndromeKey key : c.cosets) fresh += degk.cosets.count(key) == 0 && quad_union.count(key) == 0;
            min_new = std::min(min_new, fresh);
        }
        n.check(min_new >= q - 1, "q=" + std::to_string(q) + " fewer than q-1 new cosets");
        const auto cubic_union = unite(cubics);
        n.check(std::includes(cubic_union.begin(), cubic_union.end(), quad_union.begin(), quad_union.end()),
                "q=" + std::to_string(q) + " quadratic family not inside cubic union");
        n.check(std::includes(cubic_union.begin(), cubic_union.end(), degk.cosets.begin(), degk.cosets.end()),
                "q=" + std::to_string(q) + " degree-k family not inside cubic union");
        os << "q" << q << ": " << cubics.size() << " cubics x " << want << ", min new " << min_new << " ";
    }
    n.add(os.str());
    return n.verdict();
}

Verdict cubic_coverage() {
    Notes n;
    std::ostringstream os;
    for (std::uint32_t q : {5u, 7u, 8u}) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto r = cubic_coverage_experiment(make_field_of_order(q));
        const double dt = seconds_since(t0);
        n.check(r.total == deep_coset_formula(q, q - 3), "q=" + std::to_string(q) + " total");
        n.check(dt < 600.0, "q=" + std::to_string(q) + " over 10 min");
        char buf[96];
        std::snprintf(buf, sizeof buf, "q%u: covered %llu/%llu (%.3f) ", q, static_cast<unsigned long long>(r.covered),
                      static_cast<unsigned long long>(r.total), r.fraction());
        os << buf;
        if (q == 8) os << (r.covered < r.total ? "[q=8 incomplete as expected]" : "[q=8 complete: covered < total not observed]");
    }
    n.add("report only; " + os.str());
    return n.verdict();
}

Verdict n3_distribution() {
    Notes n;
    const auto t0 = std::chrono::steady_clock::now();
    std::uint64_t rows = 0, zero = 0;
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
        const Field& f = make_field_of_order(q);
        for (const auto& qp : monic_irreducibles(f, 2)) {
            for (const auto& row : n3_sweep(qp)) {
                ++rows;
                zero += row.bruteforce == 0;
                n.check(row.bruteforce == row.formula,
                        "q=" + std::to_string(q) + " " + qp.to_string() + " alpha " + row.alpha.to_string());
            }
        }
    }
    const double dt = seconds_since(t0);
    n.check(dt < 60.0, "over 60 s");
    char buf[128];
    std::snprintf(buf, sizeof buf, "%llu (q(x), alpha) rows, %llu with N3 = 0, %.2f s",
                  static_cast<unsigned long long>(rows), static_cast<unsigned long long>(zero), dt);
    n.add(buf);
    return n.verdict();
}

Verdict subset_sums() {
    Notes n;
    std::uint64_t checked = 0, equiv = 0;
    auto whole = [](const Field& f) {
        const auto e = f.elements();
        return std::vector<Elem>(e.begin(), e.end());
    };
    for (std::uint32_t q : {3u, 5u, 7u, 9u, 11u, 13u, 2u, 4u, 8u}) {
        const Field& f = make_field_of_order(q);
        const auto d = whole(f);
        const unsigned lo = q % 2 ? 1 : 3;
        for (unsigned k = lo; q % 2 ? k + 1 <= q : k + 3 <= q; ++k) {
            for (Elem g = 0; g < q; ++g) {
                ++checked;
                n.check(subset_sum_count(f, d, k, g) > 0, "N(" + std::to_string(k) + "," + std::to_string(g) +
                                                              ",GF(" + std::to_string(q) + ")) = 0");
            }
        }
    }
    for (std::uint32_t q : {3u, 4u, 5u, 7u}) {
        const Field& f = make_field_of_order(q);
        const auto d = whole(f);
        for (unsigned k = 1; k <= 3 && k + 1 < q; ++k) {
            const Code code = Code::reed_solomon(f, k);
            const auto cws_limit = SearchLimits{};
            for (Elem a = 0; a < q; ++a) {
                std::vector<Elem> c(k + 2, 0);
                c[k + 1] = 1;
                c[k] = f.neg(a);
                const unsigned dist = error_distance(code, code.evaluate(Polynomial(f, c)), DistanceMethod::exhaustive, cws_limit);
                const bool deep = dist == q - k;
                ++equiv;
                n.check(degree_k1_nondeephole(f, d, k, a) == !deep,
                        "q=" + std::to_string(q) + " k=" + std::to_string(k) + " a=" + std::to_string(a));
            }
        }
    }
    n.add(std::to_string(checked) + " positivity cases, " + std::to_string(equiv) + " distance cross-checks");
    return n.verdict();
}

Verdict zero_sum_free() {
    Notes n;
    const Field& f13 = make_field(13, 1);
    const std::vector<Elem> d = {0, 1, 2, 3, 4};
    const Code code = Code::affine(f13, d, 2);
    const CosetWeightTable table(code);
    const Word w = code.evaluate(Polynomial(f13, {0, 0, 3, 1}));  // x^3 - 10x^2
    const unsigned dist = error_distance(code, w, DistanceMethod::exhaustive);
    n.check(dist == 3 && table.distance(w) == 3, "x^3 - 10x^2 at distance " + std::to_string(dist));
    const auto fam = zero_sum_free_family(table, 2);
    const SyndromeKey key = syndrome_key(f13, code.syndrome(w));
    n.check(fam.cosets.count(key) == 1, "generator coset missing from the family");
    n.check(degree_k_family(table).cosets.count(key) == 0, "coset lies in the degree-k family");
    for (Elem delta = 5; delta < 13; ++delta) {
        n.check(inverse_monomial_family(table, delta).cosets.count(key) == 0,
                "coset lies in the inverse-monomial family at " + std::to_string(delta));
    }
    std::ostringstream os;
    os << "distance 3, disjoint from degree-k and 8 inverse-monomial families; example sets:";
    for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
        const Field& f = make_field(p, 1);
        for (unsigned r : {2u, 3u}) {
            std::vector<Elem> set;
            for (Elem x = 0; x <= p / r + r - 1; ++x) set.push_back(x);
            const bool zsf = set.size() >= r && is_zero_sum_free(f, set, r);
            os << " p" << p << "r" << r << (zsf ? ":zsf" : ":not-zsf");
        }
    }
    n.add(os.str());
    return n.verdict();
}

Verdict oracle_equivalence() {
    Notes n;
    std::mt19937_64 rng(20261018);
    const SearchLimits limits = wide_limits();
    std::size_t codes = 0, words = 0;
    for (const Code& code : criterion_codes()) {
        if (pow_u(code.field().order(), code.dimension()) > 10'000'000) continue;
        ++codes;
        std::uniform_int_distribution<Elem> dist(0, code.field().order() - 1);
        std::vector<Word> ws(200);
        for (auto& w : ws) {
            for (std::size_t i = 0; i < code.length(); ++i) w.entries.push_back(dist(rng));
        }
        const auto ex = error_distances_exhaustive(code, ws, limits);
        for (std::size_t i = 0; i < ws.size(); ++i) {
            ++words;
            const unsigned span = error_distance(code, ws[i], DistanceMethod::syndrome_span, limits);
            if (span != ex[i]) {
                n.fail(code.describe() + " word " + std::to_string(i));
                break;
            }
        }
    }
    n.add(std::to_string(codes) + " codes, " + std::to_string(words) + " words");
    return n.verdict();
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
        {"covering radii", covering_radii},
        {"deep-hole coset counts", deep_coset_counts},
        {"completeness of quadratic families", completeness},
        {"hypergraph structure", hypergraph},
        {"quadratic family distances", quadratic_family_distances},
        {"cubic family", cubic_family_checks},
        {"cubic coverage", cubic_coverage},
        {"N3 distribution", n3_distribution},
        {"subset sums", subset_sums},
        {"zero-sum-free deep holes", zero_sum_free},
        {"oracle equivalence", oracle_equivalence},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        failures += !v.pass;
        std::printf("criterion %2zu %s  %s (%.1f s): %s\n", i + 1, v.pass ? "PASS" : "FAIL", criteria[i].first,
                    seconds_since(t0), v.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
