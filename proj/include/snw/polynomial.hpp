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

#include "snw/core.hpp"

namespace snw {

/// Degree, then lexicographic on exponent tuples.
struct ExponentOrder {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Element of P_n = K[x_1..x_n].
class Polynomial {
 public:
  using Terms = std::map<Exponents, Scalar, ExponentOrder>;

  explicit Polynomial(std::size_t dim = 1);
  static Polynomial constant(std::size_t dim, const Scalar& c);
  static Polynomial monomial(const Exponents& alpha, const Scalar& c = 1);
  static Polynomial variable(std::size_t dim, std::size_t i);
  /// Requires every monomial of a to be y-free.
  static Polynomial from_element(const Element& a);

  std::size_t dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const Exponents& alpha) const;
  void add_term(const Exponents& alpha, const Scalar& c);

  /// Substitutes x_j = 0.
  Polynomial restrict_zero(std::size_t j) const;
  /// Exact division by x_j; every term must contain x_j.
  Polynomial divide_var(std::size_t j) const;
  Polynomial mul_var(std::size_t j) const;
  /// The same polynomial as an element of S_n (x-monomials).
  Element to_element() const;
  /// The same coefficients on y-monomials (image under the involution).
  Element to_y_element() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& b);
  Polynomial& operator-=(const Polynomial& b);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Scalar& c);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t dim_;
  Terms terms_;
};

}  // namespace snw
