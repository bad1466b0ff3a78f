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

#include "snw/units.hpp"

#include <algorithm>
#include <map>

#include "snw/decomp.hpp"
#include "snw/errors.hpp"

namespace snw {

namespace {

bool zero_laurent(const MixedKey& k) {
  return std::all_of(k.laurent.begin(), k.laurent.end(), [](auto e) { return e == 0; });
}

}  // namespace

bool in_monoid(const Element& a) {
  const MixedElement m = to_mixed(a - Element::constant(a.dim(), 1));
  for (const auto& [k, c] : m.terms())
    if (k.I.empty() || !zero_laurent(k)) return false;
  return true;
}

MonoidElement::MonoidElement(Element u) : u_(std::move(u)) {
  if (!in_monoid(u_)) throw Error(ErrorCode::NotRepresentable, "element is not in 1 + F");
}

SizeReport size(const MonoidElement& u) {
  SizeReport r;
  r.deg = u.dim() + 1;
  const MixedElement m = to_mixed(u.element() - Element::constant(u.dim(), 1));
  for (const auto& [k, c] : m.terms()) {
    r.identity = false;
    r.deg = std::min<std::size_t>(r.deg, k.I.size());
    for (std::size_t i = 0; i < u.dim(); ++i)
      r.s = std::max<std::uint64_t>(r.s, std::max(k.alpha[i], k.beta[i]));
  }
  return r;
}

Element factor_product(std::size_t dim, const FactorList& factors) {
  Element p = Element::constant(dim, 1);
  for (const auto& f : factors) p = p * f.u.element();
  return p;
}

Matrix factor_block(IndexSet I, const MonoidElement& uI, std::vector<Exponents>* basis_out) {
  const std::size_t n = uI.dim();
  const MixedElement m = to_mixed(uI.element() - Element::constant(n, 1));
  std::uint64_t s = 0;
  for (const auto& [k, c] : m.terms()) {
    if (k.I != I) {
      throw Error(ErrorCode::SupportError,
                  "factor leaks outside F" + I.to_string() + " (component on " + k.I.to_string() + ")");
    }
    for (std::size_t i = 0; i < n; ++i) s = std::max<std::uint64_t>(s, std::max(k.alpha[i], k.beta[i]));
  }
  // Basis [0..s]^I, with zeros off I.
  const auto idx = I.elements();
  std::vector<Exponents> basis;
  Exponents e(n, 0);
  while (true) {
    basis.push_back(e);
    std::size_t t = 0;
    while (t < idx.size() && e[idx[t]] == s) e[idx[t++]] = 0;
    if (t == idx.size()) break;
    ++e[idx[t]];
  }
  std::map<Exponents, std::size_t> pos;
  for (std::size_t i = 0; i < basis.size(); ++i) pos[basis[i]] = i;
  Matrix b = Matrix::identity(basis.size());
  for (const auto& [k, c] : m.terms()) b(pos.at(k.alpha), pos.at(k.beta)) += c;
  if (basis_out) *basis_out = std::move(basis);
  return b;
}

Scalar det_MI(IndexSet I, const MonoidElement& uI) { return determinant(factor_block(I, uI)); }

namespace {

MonoidElement invert_factor(IndexSet I, const MonoidElement& uI) {
  std::vector<Exponents> basis;
  const Matrix b = factor_block(I, uI, &basis);
  auto inv = inverse(b);
  if (!inv) throw Error(ErrorCode::NotUnit, "singular factor on " + I.to_string());
  const std::size_t n = uI.dim();
  Element r = Element::constant(n, 1);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      Scalar c = (*inv)(i, j) - (i == j ? 1 : 0);
      if (c != 0) r += Element::E(n, I, basis[i], basis[j]) * c;
    }
  return MonoidElement(std::move(r));
}

}  // namespace

FactorList peel_factorize(const MonoidElement& u) {
  const std::size_t n = u.dim();
  FactorList factors;
  Element r = u.element();
  for (int s = 1; s <= static_cast<int>(n); ++s) {
    const MixedElement m = to_mixed(r);
    std::map<IndexSet, MixedElement, SubsetOrder> parts;
    for (const auto& [k, c] : m.terms())
      if (k.I.size() == s) parts.try_emplace(k.I, n).first->second.add_term(k, c);
    std::vector<MonoidElement> stage_inverses;
    for (const auto& [I, part] : parts) {
      MonoidElement uI(Element::constant(n, 1) + from_mixed(part));
      if (det_MI(I, uI) == 0)
        throw Error(ErrorCode::SingularFactor, "singular factor on " + I.to_string());
      stage_inverses.push_back(invert_factor(I, uI));
      factors.push_back({I, std::move(uI)});
    }
    for (const auto& inv : stage_inverses) r = inv.element() * r;
  }
  if (r != Element::constant(n, 1)) {
    throw Error(ErrorCode::NotRepresentable, "peel factorization left a nontrivial remainder");
  }
  return factors;
}

Scalar global_det(const MonoidElement& u) {
  FactorList factors;
  try {
    factors = peel_factorize(u);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SingularFactor) return 0;
    throw;
  }
  Scalar d = 1;
  for (const auto& f : factors) d *= det_MI(f.I, f.u);
  return d;
}

MonoidElement invert(const MonoidElement& u) {
  FactorList factors;
  try {
    factors = peel_factorize(u);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SingularFactor) throw Error(ErrorCode::NotUnit, e.what());
    throw;
  }
  Element r = Element::constant(u.dim(), 1);
  for (auto it = factors.rbegin(); it != factors.rend(); ++it)
    r = r * invert_factor(it->I, it->u).element();
  return MonoidElement(std::move(r));
}

UnitSplit try_unit_split(const Element& a) {
  const LaurentPoly image = laurent_image(a);
  if (image.terms().size() != 1 ||
      std::any_of(image.terms().begin()->first.begin(), image.terms().begin()->first.end(),
                  [](auto e) { return e != 0; })) {
    throw Error(ErrorCode::NotRepresentable, "Laurent image is not a nonzero constant");
  }
  const Scalar lambda = image.terms().begin()->second;
  Element scaled = a * Scalar(1 / lambda);
  if (!in_monoid(scaled)) throw Error(ErrorCode::NotRepresentable, "a / lambda is not in 1 + F");
  MonoidElement u(std::move(scaled));
  if (global_det(u) == 0) throw Error(ErrorCode::NotUnit, "det of the monoid part is 0");
  return {lambda, std::move(u)};
}

}  // namespace snw
