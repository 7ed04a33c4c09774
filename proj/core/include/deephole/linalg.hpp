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

#include <cstddef>
#include <span>
#include <vector>

#include "deephole/field.hpp"

namespace deephole {

/// Dense row-major matrix over a Field.
class Matrix {
   public:
    Matrix(const Field& field, std::size_t rows, std::size_t cols)
        : field_(&field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    const Field& field() const noexcept { return *field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Elem& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    Elem operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

    std::span<const Elem> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
    std::vector<Elem> column(std::size_t c) const;
    std::span<const Elem> data() const noexcept { return data_; }

    Matrix transposed() const;
    Matrix operator*(const Matrix& rhs) const;
    /// this * v for a column vector v.
    std::vector<Elem> apply(std::span<const Elem> v) const;

    bool is_zero() const noexcept;
    std::size_t rank() const;

    bool operator==(const Matrix& rhs) const noexcept {
        return field_ == rhs.field_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
    }

   private:
    const Field* field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Elem> data_;
};

/// Row-reduces `rows` (each of equal length) in place and returns the rank.
std::size_t row_reduce(const Field& field, std::vector<std::vector<Elem>>& rows);

/// True when `target` is a linear combination of `vectors` (all of one length).
bool in_span(const Field& field, std::span<const std::vector<Elem>> vectors, std::span<const Elem> target);

/// True when the given vectors are linearly independent.
bool linearly_independent(const Field& field, std::span<const std::vector<Elem>> vectors);

}  // namespace deephole
