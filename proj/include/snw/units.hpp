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
#include <vector>

#include "snw/core.hpp"
#include "snw/linalg.hpp"

namespace snw {

/// True iff a lies in M_n = 1 + sum over nonempty I of F(I).
bool in_monoid(const Element& a);

/// An element validated to lie in M_n.
class MonoidElement {
 public:
  /// Throws NotRepresentable when u is not in M_n.
  explicit MonoidElement(Element u);
  static MonoidElement one(std::size_t dim) { return MonoidElement(Element::constant(dim, 1)); }

  const Element& element() const { return u_; }
  std::size_t dim() const { return u_.dim(); }

  friend bool operator==(const MonoidElement&, const MonoidElement&) = default;

 private:
  Element u_;
};

struct SizeReport {
  std::uint64_t s = 0;
  /// Least |I| among the components of u - 1; dim + 1 for the identity.
  std::size_t deg = 0;
  bool identity = true;
};

SizeReport size(const MonoidElement& u);

struct Factor {
  IndexSet I;
  MonoidElement u;
};

/// Ordered by |I| ascending, then lexicographically on I.
using FactorList = std::vector<Factor>;

/// Throws SingularFactor naming the first singular block.
FactorList peel_factorize(const MonoidElement& u);
Element factor_product(std::size_t dim, const FactorList& factors);

/// The C_s(I) block of u_I (s = size of u_I) as the finite matrix Id + Lambda.
Matrix factor_block(IndexSet I, const MonoidElement& uI, std::vector<Exponents>* basis = nullptr);

/// Throws SupportError when u_I - 1 is not supported in F(I).
Scalar det_MI(IndexSet I, const MonoidElement& uI);
Scalar global_det(const MonoidElement& u);
/// Throws NotUnit when global_det(u) = 0.
MonoidElement invert(const MonoidElement& u);

struct UnitSplit {
  Scalar lambda;
  MonoidElement u;
};

/// a = lambda * u with u in M_n and det(u) != 0. Throws NotRepresentable
/// outside K* M_n and NotUnit when det(u) = 0.
UnitSplit try_unit_split(const Element& a);

}  // namespace snw
