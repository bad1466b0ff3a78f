/*
   Copyright 2026 The snw Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <map>
#include <optional>
#include <vector>

#include "snw/scalar.hpp"

namespace snw {

/// Dense row-major matrix over Scalar.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

// Fraction-free (Bareiss) elimination. Rows are first scaled to integers.
Scalar determinant(const Matrix& a);
std::size_t rank(const Matrix& a);
/// Basis of {v : a v = 0}, one vector per free column.
std::vector<std::vector<Scalar>> nullspace(const Matrix& a);
/// std::nullopt when singular.
std::optional<Matrix> inverse(const Matrix& a);

/// Incremental row echelon form over sparse rows, for large systems with few
/// nonzeros per row. Each stored row is normalized to a leading 1.
class SparseEchelon {
 public:
  using Row = std::map<std::size_t, Scalar>;

  explicit SparseEchelon(std::size_t cols) : cols_(cols) {}

  /// Reduces the row against the stored pivots; returns true if it was
  /// independent and has been stored.
  bool add_row(Row row);
  std::size_t rank() const { return pivots_.size(); }
  std::size_t nullity() const { return cols_ - pivots_.size(); }
  std::vector<std::vector<Scalar>> nullspace() const;

 private:
  std::size_t cols_;
  std::map<std::size_t, Row> pivots_;
};

}  // namespace snw
