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

#include <cstdint>
#include <map>
#include <vector>

#include "snw/index_set.hpp"
#include "snw/scalar.hpp"

namespace snw {

using Exponents = std::vector<std::uint32_t>;

/// x^alpha y^beta.
struct Monomial {
  Exponents alpha;
  Exponents beta;

  static Monomial one(std::size_t n) { return {Exponents(n, 0), Exponents(n, 0)}; }
  std::size_t dim() const { return alpha.size(); }
  std::uint64_t degree() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Degree-lexicographic on (|alpha|+|beta|, alpha, beta).
struct DegLex {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

Monomial monomial_mul(const Monomial& m1, const Monomial& m2);

void require_same_dim(std::size_t a, std::size_t b, const char* op);

class Element {
 public:
  using Terms = std::map<Monomial, Scalar, DegLex>;

  explicit Element(std::size_t dim = 1);

  static Element constant(std::size_t dim, const Scalar& c);
  static Element from_monomial(const Monomial& m, const Scalar& c = 1);
  static Element x(std::size_t dim, std::size_t i);
  static Element y(std::size_t dim, std::size_t i);
  /// E_{kl} in index i.
  static Element E(std::size_t dim, std::size_t i, std::uint32_t k, std::uint32_t l);
  /// E_{alpha beta}(I); alpha, beta are full length and read only on I.
  static Element E(std::size_t dim, IndexSet I, const Exponents& alpha,
                   const Exponents& beta);

  std::size_t dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const Monomial& m) const;

  /// Accumulates c*m, pruning zeros.
  void add_term(const Monomial& m, const Scalar& c);

  Element operator-() const;
  Element& operator+=(const Element& b);
  Element& operator-=(const Element& b);
  Element& operator*=(const Scalar& c);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator*(Element a, const Scalar& c) { return a *= c; }
  friend Element operator*(const Scalar& c, Element a) { return a *= c; }
  friend bool operator==(const Element& a, const Element& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

  Element pow(unsigned e) const;

 private:
  std::size_t dim_;
  Terms terms_;
};

inline Element add(const Element& a, const Element& b) { return a + b; }
inline Element mul(const Element& a, const Element& b) { return a * b; }

/// eta: x_i <-> y_i, so x^a y^b -> x^b y^a.
Element involution(const Element& a);
Element commutator(const Element& a, const Element& b);

/// Moves index j of a to positions[j] of an element of dimension new_dim.
Element embed(const Element& a, std::size_t new_dim,
              const std::vector<std::size_t>& positions);

}  // namespace snw
