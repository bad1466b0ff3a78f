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

#include "snw/decomp.hpp"

#include <algorithm>
#include <cstdlib>

#include "snw/errors.hpp"

namespace snw {

PatternF PatternF::from_matrix_part(std::size_t n, IndexSet I) {
  PatternF f;
  f.bits.resize(n);
  for (std::size_t i = 0; i < n; ++i) f.bits[i] = !I.contains(i);
  return f;
}

IndexSet PatternF::matrix_part() const {
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < this->bits.size(); ++i)
    if (!this->bits[i]) bits |= 1u << i;
  return IndexSet(bits);
}

bool MixedKeyOrder::operator()(const MixedKey& a, const MixedKey& b) const {
  if (a.I != b.I) return SubsetOrder{}(a.I, b.I);
  if (a.alpha != b.alpha) return a.alpha < b.alpha;
  if (a.beta != b.beta) return a.beta < b.beta;
  return a.laurent < b.laurent;
}

void MixedElement::add_term(const MixedKey& k, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::monomial(const LaurentExponents& e, const Scalar& c) {
  LaurentPoly p(e.size());
  p.add_term(e, c);
  return p;
}

void LaurentPoly::add_term(const LaurentExponents& e, const Scalar& c) {
  require_same_dim(e.size(), dim_, "laurent");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& b) {
  require_same_dim(dim_, b.dim_, "laurent add");
  for (const auto& [e, c] : b.terms_) add_term(e, c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_dim(a.dim_, b.dim_, "laurent mul");
  LaurentPoly r(a.dim_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      LaurentExponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

namespace {

struct Piece {
  bool matrix;
  std::uint32_t k, l;
  std::int64_t laurent;
  int sign;
};

// x^a y^b in one index as v_{a-b} minus a run of matrix units.
std::vector<Piece> expand_single(std::uint32_t a, std::uint32_t b) {
  std::vector<Piece> out;
  const std::int64_t d = std::int64_t(a) - std::int64_t(b);
  out.push_back({false, 0, 0, d, 1});
  if (a >= b) {
    for (std::uint32_t k = 0; k < b; ++k) out.push_back({true, a - b + k, k, 0, -1});
  } else {
    for (std::uint32_t k = 0; k < a; ++k) out.push_back({true, k, b - a + k, 0, -1});
  }
  return out;
}

}  // namespace

MixedElement to_mixed(const Element& a) {
  const std::size_t n = a.dim();
  MixedElement out(n);
  std::vector<std::vector<Piece>> per(n);
  for (const auto& [m, c] : a.terms()) {
    for (std::size_t i = 0; i < n; ++i) per[i] = expand_single(m.alpha[i], m.beta[i]);
    MixedKey key{IndexSet(), Exponents(n, 0), Exponents(n, 0), LaurentExponents(n, 0)};
    auto rec = [&](auto&& self, std::size_t i, int sign) -> void {
      if (i == n) {
        out.add_term(key, sign > 0 ? c : Scalar(-c));
        return;
      }
      for (const Piece& p : per[i]) {
        const IndexSet saved = key.I;
        if (p.matrix) {
          key.I = key.I.with(i);
          key.alpha[i] = p.k;
          key.beta[i] = p.l;
          key.laurent[i] = 0;
        } else {
          key.alpha[i] = key.beta[i] = 0;
          key.laurent[i] = p.laurent;
        }
        self(self, i + 1, sign * p.sign);
        key.I = saved;
      }
    };
    rec(rec, 0, 1);
  }
  return out;
}

Element mixed_basis_element(std::size_t n, const MixedKey& k) {
  Element e = Element::E(n, k.I, k.alpha, k.beta);
  Monomial v = Monomial::one(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (k.I.contains(i)) continue;
    if (k.laurent[i] >= 0)
      v.alpha[i] = static_cast<std::uint32_t>(k.laurent[i]);
    else
      v.beta[i] = static_cast<std::uint32_t>(-k.laurent[i]);
  }
  // v and E live on disjoint indices, so they commute.
  return Element::from_monomial(v) * e;
}

Element from_mixed(const MixedElement& m) {
  Element r(m.dim());
  for (const auto& [k, c] : m.terms()) r += mixed_basis_element(m.dim(), k) * c;
  return r;
}

Element component_on(const Element& a, IndexSet I) {
  MixedElement part(a.dim());
  const MixedElement mixed = to_mixed(a);
  for (const auto& [k, c] : mixed.terms())
    if (k.I == I) part.add_term(k, c);
  return from_mixed(part);
}

Element component(const Element& a, const PatternF& f) {
  require_same_dim(f.bits.size(), a.dim(), "component");
  return component_on(a, f.matrix_part());
}

bool in_ideal_pI(const Element& a, IndexSet I) {
  if (I.empty()) throw Error(ErrorCode::InvalidArgument, "index set must be nonempty");
  if (!I.subset_of(IndexSet::full(a.dim())))
    throw Error(ErrorCode::DimensionError, "index set exceeds dimension");
  const MixedElement mixed = to_mixed(a);
  for (const auto& [k, c] : mixed.terms())
    if (!k.I.intersects(I)) return false;
  return true;
}

bool in_Fn(const Element& a) {
  const IndexSet all = IndexSet::full(a.dim());
  const MixedElement mixed = to_mixed(a);
  for (const auto& [k, c] : mixed.terms())
    if (k.I != all) return false;
  return true;
}

bool in_an(const Element& a) {
  const MixedElement mixed = to_mixed(a);
  for (const auto& [k, c] : mixed.terms())
    if (k.I.empty()) return false;
  return true;
}

bool in_K_plus_Fn(const Element& a) {
  const IndexSet all = IndexSet::full(a.dim());
  const MixedElement mixed = to_mixed(a);
  for (const auto& [k, c] : mixed.terms()) {
    if (k.I == all) continue;
    if (!k.I.empty()) return false;
    for (auto e : k.laurent)
      if (e != 0) return false;
  }
  return true;
}

LaurentPoly laurent_image(const Element& a) {
  LaurentPoly p(a.dim());
  const MixedElement mixed = to_mixed(a);
  for (const auto& [k, c] : mixed.terms())
    if (k.I.empty()) p.add_term(k.laurent, c);
  return p;
}

std::int64_t index_s1(const Element& a) {
  if (a.dim() != 1) throw Error(ErrorCode::DimensionError, "index is defined for n = 1 only");
  LaurentPoly p = laurent_image(a);
  if (p.is_zero()) throw Error(ErrorCode::InFError, "element lies in F");
  return -p.terms().rbegin()->first[0];
}

std::size_t volume(const Element& a) { return to_mixed(a).terms().size(); }

std::uint64_t mixed_support_size(const Element& a) {
  std::uint64_t s = 0;
  const MixedElement mixed = to_mixed(a);
  for (const auto& [k, c] : mixed.terms()) {
    for (std::size_t i = 0; i < a.dim(); ++i) {
      s = std::max<std::uint64_t>(s, std::max(k.alpha[i], k.beta[i]));
      s = std::max<std::uint64_t>(s, static_cast<std::uint64_t>(std::llabs(k.laurent[i])));
    }
  }
  return s;
}

}  // namespace snw
