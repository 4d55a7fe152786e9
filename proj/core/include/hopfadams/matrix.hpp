// Copyright 2026 The hopfadams Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HOPFADAMS_MATRIX_HPP
#define HOPFADAMS_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hopfadams/scalar.hpp"

namespace hopfadams {

/// Dense row-major matrix of exact rationals.
///
/// When a matrix represents a linear map on a basis, column j holds the
/// coordinates of the image of basis vector j.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<Scalar> column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const Scalar> values);

  Matrix transpose() const;
  bool is_zero() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend std::vector<Scalar> operator*(const Matrix& a, std::span<const Scalar> v);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form, in place. Returns pivot column indices.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(Matrix m);

/// Inverse of a square matrix, or nullopt if singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Basis of the right null space {v : m v = 0}, one vector per free column.
std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m);

/// Solve m x = b for square invertible m. Throws std::domain_error if singular.
std::vector<Scalar> solve(const Matrix& m, std::span<const Scalar> b);

/// Aligned text rendering with optional row/column labels.
std::string format_matrix(const Matrix& m, const std::vector<std::string>& row_labels = {},
                          const std::vector<std::string>& col_labels = {});

}  // namespace hopfadams

#endif  // HOPFADAMS_MATRIX_HPP
