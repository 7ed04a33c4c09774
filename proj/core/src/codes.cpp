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

#include "deephole/codes.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "deephole/parallel.hpp"

namespace deephole {

namespace {

constexpr std::uint8_t kUnvisited = std::numeric_limits<std::uint8_t>::max();

// Advances an m-subset of {0..n-1} in lexicographic order; false when exhausted.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t m = idx.size();
    for (std::size_t i = m; i-- > 0;) {
        if (idx[i] < n - m + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<std::size_t> first_combination(std::size_t m) {
    std::vector<std::size_t> idx(m);
    for (std::size_t i = 0; i < m; ++i) idx[i] = i;
    return idx;
}

}  // namespace

std::uint64_t checked_power(std::uint64_t q, std::uint64_t e, std::uint64_t bound, const std::string& what) {
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (v > bound / q) {
            throw BoundExceeded(what + ": " + std::to_string(q) + "^" + std::to_string(e) + " exceeds bound " +
                                std::to_string(bound));
        }
        v *= q;
    }
    if (v > bound) throw BoundExceeded(what + " exceeds bound " + std::to_string(bound));
    return v;
}

bool Syndrome::is_zero() const noexcept {
    return std::all_of(coords.begin(), coords.end(), [](Elem e) { return e == 0; });
}

SyndromeKey syndrome_key(const Field& field, const Syndrome& s) {
    SyndromeKey key = 0;
    for (std::size_t i = s.coords.size(); i-- > 0;) {
        if (key > (std::numeric_limits<SyndromeKey>::max() - s.coords[i]) / field.order()) {
            throw BoundExceeded("syndrome does not fit in a 64-bit key");
        }
        key = key * field.order() + s.coords[i];
    }
    return key;
}

Syndrome syndrome_from_key(const Field& field, SyndromeKey key, std::size_t length) {
    Syndrome s;
    s.coords.resize(length);
    for (std::size_t i = 0; i < length; ++i) {
        s.coords[i] = static_cast<Elem>(key % field.order());
        key /= field.order();
    }
    return s;
}

Syndrome normalize_projective(const Field& field, const Syndrome& s) {
    Syndrome out = s;
    auto it = std::find_if(s.coords.begin(), s.coords.end(), [](Elem e) { return e != 0; });
    if (it == s.coords.end()) return out;
    const Elem inv = field.inv(*it);
    for (auto& c : out.coords) c = field.mul(c, inv);
    return out;
}

Code::Code(const Field& field, CodeKind kind, std::vector<Elem> points, unsigned k, std::vector<Elem> scale)
    : field_(&field),
      kind_(kind),
      points_(std::move(points)),
      scale_(std::move(scale)),
      n_(kind == CodeKind::projective ? field.order() + 1 : points_.size()),
      k_(k),
      generator_(field, k, n_),
      parity_(field, n_ > k ? n_ - k : 0, n_) {
    if (k_ == 0 || k_ >= n_) {
        throw std::invalid_argument("code dimension must satisfy 0 < k < n (k=" + std::to_string(k_) +
                                    ", n=" + std::to_string(n_) + ")");
    }
    const Field& f = field;
    if (kind_ == CodeKind::affine) {
        std::set<Elem> seen;
        for (Elem x : points_) {
            if (!f.contains(x)) throw std::out_of_range("evaluation point outside GF(" + f.name() + ")");
            if (!seen.insert(x).second) throw std::invalid_argument("evaluation points must be distinct");
        }
        if (scale_.empty()) scale_.assign(n_, 1);
        if (scale_.size() != n_) throw std::invalid_argument("scale vector length must equal the code length");
        for (Elem v : scale_) {
            if (v == 0 || !f.contains(v)) throw std::invalid_argument("scale entries must be nonzero field elements");
        }
        for (unsigned i = 0; i < k_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) generator_(i, j) = f.mul(scale_[j], f.pow(points_[j], i));
        }
        // Dual GRS: column multipliers u_j = 1 / (v_j prod_{l != j} (x_j - x_l)).
        for (std::size_t j = 0; j < n_; ++j) {
            Elem prod = scale_[j];
            for (std::size_t l = 0; l < n_; ++l) {
                if (l != j) prod = f.mul(prod, f.sub(points_[j], points_[l]));
            }
            const Elem u = f.inv(prod);
            for (std::size_t i = 0; i < n_ - k_; ++i) parity_(i, j) = f.mul(u, f.pow(points_[j], i));
        }
    } else {
        const std::size_t q = f.order();
        for (unsigned i = 0; i < k_; ++i) {
            for (std::size_t j = 0; j < q; ++j) generator_(i, j) = f.pow(points_[j], i);
        }
        generator_(k_ - 1, q) = 1;
        const std::size_t r = n_ - k_;
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < q; ++j) parity_(i, j) = f.pow(points_[j], i);
        }
        parity_(r - 1, q) = 1;
    }
}

Code Code::affine(const Field& field, std::vector<Elem> points, unsigned k, std::vector<Elem> scale) {
    return Code(field, CodeKind::affine, std::move(points), k, std::move(scale));
}

Code Code::reed_solomon(const Field& field, unsigned k) {
    const auto els = field.elements();
    return affine(field, std::vector<Elem>(els.begin(), els.end()), k);
}

Code Code::projective(const Field& field, unsigned k) {
    const auto els = field.elements();
    return Code(field, CodeKind::projective, std::vector<Elem>(els.begin(), els.end()), k, {});
}

std::string Code::describe() const {
    const std::string over = " over GF(" + field_->name() + ")";
    if (kind_ == CodeKind::projective) {
        return "PRS(" + std::to_string(n_) + "," + std::to_string(k_) + ")" + over;
    }
    return "RS(D,k) n=" + std::to_string(n_) + " k=" + std::to_string(k_) + over;
}

void Code::check_word(const Word& w) const {
    if (w.size() != n_) {
        throw std::invalid_argument("word length " + std::to_string(w.size()) + " does not match code length " +
                                    std::to_string(n_));
    }
}

Word Code::encode(const Polynomial& f) const {
    if (&f.field() != field_) throw std::invalid_argument("message polynomial over a different field");
    if (f.degree() >= static_cast<int>(k_)) {
        throw std::invalid_argument("message degree " + std::to_string(f.degree()) + " exceeds k-1 = " +
                                    std::to_string(k_ - 1));
    }
    return evaluate(f, f.coeff(k_ - 1));
}

Word Code::evaluate(const Polynomial& f, Elem last) const {
    if (&f.field() != field_) throw std::invalid_argument("polynomial over a different field");
    Word w;
    w.entries.reserve(n_);
    for (std::size_t j = 0; j < points_.size(); ++j) {
        Elem v = f.eval(points_[j]);
        if (kind_ == CodeKind::affine) v = field_->mul(v, scale_[j]);
        w.entries.push_back(v);
    }
    if (kind_ == CodeKind::projective) w.entries.push_back(last);
    return w;
}

Word Code::word_from_rational(const RationalFunction& r, Elem last) const {
    if (kind_ != CodeKind::projective) throw std::invalid_argument("word_from_rational expects a projective code");
    if (&r.field() != field_) throw std::invalid_argument("rational function over a different field");
    if (!r.defined_everywhere()) {
        throw std::domain_error("denominator " + r.den.to_string() + " has a root in GF(" + field_->name() + ")");
    }
    Word w;
    w.entries.reserve(n_);
    for (Elem a : points_) w.entries.push_back(r.eval(a));
    w.entries.push_back(last);
    return w;
}

Syndrome Code::syndrome(const Word& w) const {
    check_word(w);
    return Syndrome{parity_.apply(w.entries)};
}

CosetId Code::coset_id(const Word& w) const {
    CosetId id;
    id.raw = syndrome(w);
    id.projective = normalize_projective(*field_, id.raw);
    id.raw_key = syndrome_key(*field_, id.raw);
    id.projective_key = syndrome_key(*field_, id.projective);
    return id;
}

Word Code::add(const Word& a, const Word& b) const {
    check_word(a);
    check_word(b);
    Word out{a.entries};
    for (std::size_t i = 0; i < n_; ++i) out.entries[i] = field_->add(a[i], b[i]);
    return out;
}

Word Code::scale_word(const Word& w, Elem c) const {
    check_word(w);
    Word out{w.entries};
    for (auto& e : out.entries) e = field_->mul(e, c);
    return out;
}

std::vector<unsigned> error_distances_exhaustive(const Code& code, std::span<const Word> words,
                                                 const SearchLimits& limits) {
    const Field& f = code.field();
    const std::size_t n = code.length();
    const unsigned k = code.dimension();
    const std::uint32_t q = f.order();
    checked_power(q, k, limits.max_codewords, "exhaustive codeword enumeration");
    for (const auto& w : words) {
        if (w.size() != n) throw std::invalid_argument("word length does not match code length");
    }

    const Matrix& g = code.generator_matrix();
    // The row with most nonzeros is swept innermost: for a fixed combination c of
    // the other rows, position j agrees with c + s*g_t exactly when
    // s = (w_j - c_j) / g_tj, so one pass over positions scores all q scalars.
    std::size_t inner = 0, best_nz = 0;
    for (std::size_t i = 0; i < k; ++i) {
        const auto row = g.row(i);
        const auto nz = static_cast<std::size_t>(std::count_if(row.begin(), row.end(), [](Elem e) { return e; }));
        if (nz > best_nz) {
            best_nz = nz;
            inner = i;
        }
    }
    std::vector<std::size_t> outer_rows;
    for (std::size_t i = 0; i < k; ++i) {
        if (i != inner) outer_rows.push_back(i);
    }
    std::vector<Elem> inner_inv(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        if (g(inner, j)) inner_inv[j] = f.inv(g(inner, j));
    }

    std::vector<unsigned> result(words.size(), static_cast<unsigned>(n));
    parallel_chunks(words.size(), limits.threads, [&](std::size_t begin, std::size_t end) {
        if (begin == end) return;
        std::vector<Elem> base(n, 0);
        std::vector<Elem> digit(outer_rows.size(), 0);
        std::vector<std::uint32_t> hist(q, 0);
        std::vector<Elem> scalar(n, 0);
        while (true) {
            for (std::size_t w = begin; w < end; ++w) {
                const auto& entries = words[w].entries;
                unsigned fixed = 0, best = 0;
                for (std::size_t j = 0; j < n; ++j) {
                    const Elem diff = f.sub(entries[j], base[j]);
                    if (inner_inv[j]) {
                        const Elem s = f.mul(diff, inner_inv[j]);
                        scalar[j] = s;
                        best = std::max(best, ++hist[s]);
                    } else if (diff == 0) {
                        ++fixed;
                    }
                }
                for (std::size_t j = 0; j < n; ++j) {
                    if (inner_inv[j]) hist[scalar[j]] = 0;
                }
                const unsigned d = static_cast<unsigned>(n) - fixed - best;
                if (d < result[w]) result[w] = d;
            }
            std::size_t i = 0;
            for (; i < digit.size(); ++i) {
                const Elem old = digit[i];
                const Elem next = old + 1 == q ? 0 : old + 1;
                const Elem delta = f.sub(next, old);
                const auto row = g.row(outer_rows[i]);
                for (std::size_t j = 0; j < n; ++j) base[j] = f.add(base[j], f.mul(delta, row[j]));
                digit[i] = next;
                if (next != 0) break;
            }
            if (i == digit.size()) break;
        }
    });
    return result;
}

unsigned syndrome_span_weight(const Code& code, const Syndrome& s, const SearchLimits& limits) {
    const std::size_t r = code.redundancy();
    if (r > limits.max_span_redundancy) {
        throw BoundExceeded("syndrome-span distance: redundancy " + std::to_string(r) + " exceeds bound " +
                            std::to_string(limits.max_span_redundancy));
    }
    if (s.coords.size() != r) throw std::invalid_argument("syndrome length does not match code redundancy");
    if (s.is_zero()) return 0;
    const Field& f = code.field();
    const Matrix& h = code.parity_check_matrix();
    const std::size_t n = code.length();
    std::vector<std::vector<Elem>> columns(n);
    for (std::size_t j = 0; j < n; ++j) columns[j] = h.column(j);

    std::vector<std::vector<Elem>> chosen;
    for (std::size_t m = 1; m <= n; ++m) {
        auto idx = first_combination(m);
        do {
            chosen.clear();
            for (std::size_t j : idx) chosen.push_back(columns[j]);
            if (in_span(f, chosen, s.coords)) return static_cast<unsigned>(m);
        } while (next_combination(idx, n));
    }
    throw std::logic_error("syndrome outside the column space of H");
}

unsigned error_distance(const Code& code, const Word& w, DistanceMethod method, const SearchLimits& limits) {
    if (method == DistanceMethod::exhaustive) {
        return error_distances_exhaustive(code, std::span<const Word>(&w, 1), limits).front();
    }
    return syndrome_span_weight(code, code.syndrome(w), limits);
}

CosetWeightTable::CosetWeightTable(const Code& code, const SearchLimits& limits) : code_(code) {
    const Field& f = code.field();
    const std::uint32_t q = f.order();
    const std::size_t r = code.redundancy();
    const std::size_t n = code.length();
    const std::uint64_t total = checked_power(q, r, limits.max_syndromes, "syndrome-space enumeration");

    // Keys split into low and high coordinate halves so that adding a fixed
    // vector is two table lookups instead of r digit additions.
    const std::size_t lo_digits = r / 2, hi_digits = r - lo_digits;
    const std::uint64_t lo_size = checked_power(q, lo_digits, total, "syndrome split");
    const std::uint64_t hi_size = checked_power(q, hi_digits, total, "syndrome split");

    const Matrix& h = code.parity_check_matrix();
    std::vector<std::vector<Elem>> moves;
    for (std::size_t j = 0; j < n; ++j) {
        for (Elem c = 1; c < q; ++c) {
            std::vector<Elem> v(r);
            for (std::size_t i = 0; i < r; ++i) v[i] = f.mul(c, h(i, j));
            moves.push_back(std::move(v));
        }
    }
    const std::size_t nm = moves.size();
    std::vector<std::uint32_t> lo_table(nm * lo_size), hi_table(nm * hi_size);
    auto fill = [&](std::vector<std::uint32_t>& table, std::uint64_t size, std::size_t offset, std::size_t ndig,
                    std::uint64_t mult) {
        for (std::size_t mv = 0; mv < nm; ++mv) {
            for (std::uint64_t v = 0; v < size; ++v) {
                std::uint64_t rest = v, out = 0, place = 1;
                for (std::size_t d = 0; d < ndig; ++d) {
                    const Elem digit = static_cast<Elem>(rest % q);
                    rest /= q;
                    out += static_cast<std::uint64_t>(f.add(digit, moves[mv][offset + d])) * place;
                    place *= q;
                }
                table[mv * size + v] = static_cast<std::uint32_t>(out * mult);
            }
        }
    };
    fill(lo_table, lo_size, 0, lo_digits, 1);
    fill(hi_table, hi_size, lo_digits, hi_digits, lo_size);

    weights_.assign(total, kUnvisited);
    std::vector<std::uint32_t> queue;
    queue.reserve(total);
    weights_[0] = 0;
    queue.push_back(0);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::uint32_t key = queue[head];
        const std::uint8_t next_w = static_cast<std::uint8_t>(weights_[key] + 1);
        const std::uint64_t lo = key % lo_size, hi = key / lo_size;
        for (std::size_t mv = 0; mv < nm; ++mv) {
            const std::uint32_t nk = lo_table[mv * lo_size + lo] + hi_table[mv * hi_size + hi];
            if (weights_[nk] == kUnvisited) {
                weights_[nk] = next_w;
                queue.push_back(nk);
            }
        }
    }
    if (queue.size() != total) throw std::logic_error("parity-check columns do not span the syndrome space");
    radius_ = weights_[queue.back()];
    histogram_.assign(radius_ + 1, 0);
    for (auto w : weights_) ++histogram_[w];
}

unsigned CosetWeightTable::weight(const Syndrome& s) const { return weights_.at(syndrome_key(code_.field(), s)); }

unsigned CosetWeightTable::distance(const Word& w) const { return weight(code_.syndrome(w)); }

unsigned covering_radius(const Code& code, const SearchLimits& limits) {
    return CosetWeightTable(code, limits).covering_radius();
}

unsigned minimum_distance(const Code& code, const SearchLimits& limits) {
    const Field& f = code.field();
    const std::size_t n = code.length();
    const unsigned k = code.dimension();
    std::uint64_t codewords = 0;
    bool enumerate = true;
    try {
        codewords = checked_power(f.order(), k, limits.max_codewords, "codeword enumeration");
    } catch (const BoundExceeded&) {
        enumerate = false;
    }
    if (enumerate) {
        (void)codewords;
        const Matrix& g = code.generator_matrix();
        std::vector<Elem> digit(k, 0), c(n, 0);
        unsigned best = static_cast<unsigned>(n);
        while (true) {
            std::size_t i = 0;
            for (; i < k; ++i) {
                const Elem old = digit[i];
                const Elem next = old + 1 == f.order() ? 0 : old + 1;
                const Elem delta = f.sub(next, old);
                const auto row = g.row(i);
                for (std::size_t j = 0; j < n; ++j) c[j] = f.add(c[j], f.mul(delta, row[j]));
                digit[i] = next;
                if (next != 0) break;
            }
            if (i == k) break;
            const auto wt = static_cast<unsigned>(std::count_if(c.begin(), c.end(), [](Elem e) { return e; }));
            best = std::min(best, wt);
        }
        return best;
    }
    // d = size of the smallest linearly dependent set of columns of H.
    if (code.redundancy() > limits.max_span_redundancy + 2) {
        throw BoundExceeded("minimum distance: neither q^k nor the redundancy is within bounds");
    }
    const Matrix& h = code.parity_check_matrix();
    std::vector<std::vector<Elem>> columns(n);
    for (std::size_t j = 0; j < n; ++j) columns[j] = h.column(j);
    std::vector<std::vector<Elem>> chosen;
    for (std::size_t m = 1; m <= n; ++m) {
        auto idx = first_combination(m);
        do {
            chosen.clear();
            for (std::size_t j : idx) chosen.push_back(columns[j]);
            if (!linearly_independent(f, chosen)) return static_cast<unsigned>(m);
        } while (next_combination(idx, n));
    }
    throw std::logic_error("parity-check matrix has independent columns only");
}

}  // namespace deephole
