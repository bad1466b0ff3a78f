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

#include "snw/linalg.hpp"

#include <utility>

#include "snw/errors.hpp"

namespace snw {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionError, "matrix shape mismatch");
  Matrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& v = a(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += v * b(k, j);
    }
  return r;
}

namespace {

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Multiplies each row by the lcm of its denominators; scales[r] records it.
IntMatrix integer_rows(const Matrix& a, std::vector<mpz_class>* scales) {
  IntMatrix b(a.rows(), std::vector<mpz_class>(a.cols()));
  if (scales) scales->assign(a.rows(), 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < a.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < a.cols(); ++c) b[r][c] = a(r, c).get_num() * (l / a(r, c).get_den());
    if (scales) (*scales)[r] = l;
  }
  return b;
}

void divexact(mpz_class& x, const mpz_class& d) {
  mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
}

// Fraction-free row echelon form in place; returns pivot columns.
std::vector<std::size_t> bareiss_echelon(IntMatrix& b, std::size_t cols, int* sign) {
  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  std::size_t r = 0;
  const std::size_t rows = b.size();
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && b[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(b[p], b[r]);
      if (sign) *sign = -*sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        b[i][j] = b[i][j] * b[r][c] - b[i][c] * b[r][j];
        divexact(b[i][j], prev);
      }
      b[i][c] = 0;
    }
    prev = b[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Scalar determinant(const Matrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::DimensionError, "determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  std::vector<mpz_class> scales;
  IntMatrix b = integer_rows(a, &scales);
  int sign = 1;
  auto pivots = bareiss_echelon(b, n, &sign);
  if (pivots.size() < n) return 0;
  Scalar det(b[n - 1][n - 1] * sign);
  mpz_class scale = 1;
  for (const auto& s : scales) scale *= s;
  det /= scale;
  return det;
}

std::size_t rank(const Matrix& a) {
  IntMatrix b = integer_rows(a, nullptr);
  return bareiss_echelon(b, a.cols(), nullptr).size();
}

std::vector<std::vector<Scalar>> nullspace(const Matrix& a) {
  IntMatrix b = integer_rows(a, nullptr);
  const auto pivots = bareiss_echelon(b, a.cols(), nullptr);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(a.cols());
    v[f] = 1;
    for (std::size_t r = pivots.size(); r-- > 0;) {
      const std::size_t pc = pivots[r];
      Scalar s = 0;
      for (std::size_t j = pc + 1; j < a.cols(); ++j)
        if (b[r][j] != 0 && v[j] != 0) s += Scalar(b[r][j]) * v[j];
      v[pc] = -s / Scalar(b[r][pc]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::DimensionError, "inverse of non-square matrix");
  const std::size_t n = a.rows();
  std::vector<mpz_class> scales;
  IntMatrix b = integer_rows(a, &scales);
  for (std::size_t r = 0; r < n; ++r) {
    b[r].resize(2 * n);
    b[r][n + r] = 1;
  }
  // Fraction-free Gauss-Jordan: the left block ends as d*I, the right as d*B^{-1}.
  mpz_class prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && b[p][k] == 0) ++p;
    if (p == n) return std::nullopt;
    if (p != k) std::swap(b[p], b[k]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      for (std::size_t j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        b[i][j] = b[k][k] * b[i][j] - b[i][k] * b[k][j];
        divexact(b[i][j], prev);
      }
      b[i][k] = 0;
    }
    prev = b[k][k];
  }
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar v(b[i][n + j] * scales[j], b[i][i]);
      v.canonicalize();
      inv(i, j) = v;
    }
  return inv;
}

bool SparseEchelon::add_row(Row row) {
  for (auto it = row.begin(); it != row.end();) {
    if (it->second == 0) {
      it = row.erase(it);
      continue;
    }
    auto piv = pivots_.find(it->first);
    if (piv == pivots_.end()) break;
    const Scalar factor = it->second;
    for (const auto& [c, v] : piv->second) {
      auto& slot = row[c];
      slot -= factor * v;
    }
    // The leading entry cancelled; restart from the smallest remaining column.
    it = row.begin();
  }
  while (!row.empty() && row.begin()->second == 0) row.erase(row.begin());
  if (row.empty()) return false;
  for (auto it = row.begin(); it != row.end();) {
    if (it->second == 0) it = row.erase(it);
    else ++it;
  }
  const Scalar lead = row.begin()->second;
  for (auto& [c, v] : row) v /= lead;
  const std::size_t col = row.begin()->first;
  pivots_.emplace(col, std::move(row));
  return true;
}

std::vector<std::vector<Scalar>> SparseEchelon::nullspace() const {
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (pivots_.count(f)) continue;
    std::vector<Scalar> v(cols_);
    v[f] = 1;
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
      Scalar s = 0;
      for (const auto& [c, coef] : it->second)
        if (c != it->first && v[c] != 0) s += coef * v[c];
      v[it->first] = -s;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace snw
