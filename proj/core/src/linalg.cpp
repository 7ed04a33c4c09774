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

#include "deephole/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace deephole {

std::vector<Elem> Matrix::column(std::size_t c) const {
    std::vector<Elem> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

Matrix Matrix::transposed() const {
    Matrix t(*field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (field_ != rhs.field_ || cols_ != rhs.rows_) throw std::invalid_argument("matrix shape or field mismatch");
    Matrix out(*field_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Elem a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                out(i, j) = field_->add(out(i, j), field_->mul(a, rhs(k, j)));
            }
        }
    }
    return out;
}

std::vector<Elem> Matrix::apply(std::span<const Elem> v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector length does not match matrix columns");
    std::vector<Elem> out(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        Elem acc = 0;
        for (std::size_t c = 0; c < cols_; ++c) acc = field_->add(acc, field_->mul((*this)(r, c), v[c]));
        out[r] = acc;
    }
    return out;
}

bool Matrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e == 0; });
}

std::size_t Matrix::rank() const {
    std::vector<std::vector<Elem>> rows(rows_);
    for (std::size_t r = 0; r < rows_; ++r) rows[r].assign(row(r).begin(), row(r).end());
    return row_reduce(*field_, rows);
}

std::size_t row_reduce(const Field& field, std::vector<std::vector<Elem>>& rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const Elem inv = field.inv(rows[rank][c]);
        for (auto& e : rows[rank]) e = field.mul(e, inv);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            const Elem factor = rows[r][c];
            for (std::size_t j = c; j < cols; ++j) {
                rows[r][j] = field.sub(rows[r][j], field.mul(factor, rows[rank][j]));
            }
        }
        ++rank;
    }
    return rank;
}

bool in_span(const Field& field, std::span<const std::vector<Elem>> vectors, std::span<const Elem> target) {
    if (vectors.empty()) {
        return std::all_of(target.begin(), target.end(), [](Elem e) { return e == 0; });
    }
    // Columns are the spanning vectors plus the target; target is in the span iff
    // appending it does not raise the rank.
    const std::size_t dim = target.size();
    std::vector<std::vector<Elem>> rows(dim, std::vector<Elem>(vectors.size() + 1));
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < vectors.size(); ++j) rows[i][j] = vectors[j][i];
        rows[i][vectors.size()] = target[i];
    }
    std::vector<std::vector<Elem>> basis_rows(dim, std::vector<Elem>(vectors.size()));
    for (std::size_t i = 0; i < dim; ++i) {
        std::copy_n(rows[i].begin(), vectors.size(), basis_rows[i].begin());
    }
    return row_reduce(field, rows) == row_reduce(field, basis_rows);
}

bool linearly_independent(const Field& field, std::span<const std::vector<Elem>> vectors) {
    std::vector<std::vector<Elem>> rows(vectors.begin(), vectors.end());
    return row_reduce(field, rows) == vectors.size();
}

}  // namespace deephole
