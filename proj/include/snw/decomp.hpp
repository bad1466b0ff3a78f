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

#include "snw/core.hpp"

namespace snw {

/// f in B_n: bits[i] = true selects the Laurent-like factor at index i,
/// false selects the matrix-unit ideal F(i).
struct PatternF {
  std::vector<bool> bits;

  static PatternF from_matrix_part(std::size_t n, IndexSet I);
  /// The f_i = 0 positions.
  IndexSet matrix_part() const;
};

using LaurentExponents = std::vector<std::int64_t>;

/// coeff * v_laurent(CI) * E_{alpha beta}(I). All tuples have full length n;
/// alpha/beta vanish off I and laurent vanishes on I. v_j = x^j (j >= 0),
/// y^{-j} (j < 0).
struct MixedKey {
  IndexSet I;
  Exponents alpha;
  Exponents beta;
  LaurentExponents laurent;

  friend bool operator==(const MixedKey&, const MixedKey&) = default;
};

/// |I|, then I lexicographically, then alpha, beta, laurent.
struct MixedKeyOrder {
  bool operator()(const MixedKey& a, const MixedKey& b) const;
};

class MixedElement {
 public:
  using Terms = std::map<MixedKey, Scalar, MixedKeyOrder>;

  explicit MixedElement(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  void add_term(const MixedKey& k, const Scalar& c);

  friend bool operator==(const MixedElement&, const MixedElement&) = default;

 private:
  std::size_t dim_;
  Terms terms_;
};

class LaurentPoly {
 public:
  using Terms = std::map<LaurentExponents, Scalar>;

  explicit LaurentPoly(std::size_t dim) : dim_(dim) {}
  static LaurentPoly monomial(const LaurentExponents& e, const Scalar& c = 1);

  std::size_t dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const LaurentExponents& e, const Scalar& c);

  LaurentPoly& operator+=(const LaurentPoly& b);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::size_t dim_;
  Terms terms_;
};

MixedElement to_mixed(const Element& a);
Element from_mixed(const MixedElement& m);

/// Expands a single mixed basis element back into monomials.
Element mixed_basis_element(std::size_t dim, const MixedKey& k);

Element component(const Element& a, const PatternF& f);
/// The component whose matrix-unit positions are exactly I.
Element component_on(const Element& a, IndexSet I);

bool in_ideal_pI(const Element& a, IndexSet I);
bool in_Fn(const Element& a);
/// a_n = p_1 + ... + p_n, the kernel of laurent_image.
bool in_an(const Element& a);
bool in_K_plus_Fn(const Element& a);

LaurentPoly laurent_image(const Element& a);
/// n = 1 only: minus the leading x-degree of the Laurent image.
std::int64_t index_s1(const Element& a);
std::size_t volume(const Element& a);

/// Largest matrix-unit coordinate or |laurent exponent| in the mixed form.
std::uint64_t mixed_support_size(const Element& a);

}  // namespace snw
