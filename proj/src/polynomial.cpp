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

#include "snw/polynomial.hpp"

#include "snw/errors.hpp"

namespace snw {

bool ExponentOrder::operator()(const Exponents& a, const Exponents& b) const {
  std::uint64_t da = 0, db = 0;
  for (auto e : a) da += e;
  for (auto e : b) db += e;
  if (da != db) return da < db;
  return a < b;
}

Polynomial::Polynomial(std::size_t dim) : dim_(dim) {
  if (dim == 0 || dim > kMaxDim) throw Error(ErrorCode::DimensionError, "bad dimension");
}

Polynomial Polynomial::constant(std::size_t dim, const Scalar& c) {
  Polynomial p(dim);
  p.add_term(Exponents(dim, 0), c);
  return p;
}

Polynomial Polynomial::monomial(const Exponents& alpha, const Scalar& c) {
  Polynomial p(alpha.size());
  p.add_term(alpha, c);
  return p;
}

Polynomial Polynomial::variable(std::size_t dim, std::size_t i) {
  if (i >= dim) throw Error(ErrorCode::DimensionError, "variable index exceeds dimension");
  Exponents a(dim, 0);
  a[i] = 1;
  return monomial(a);
}

Polynomial Polynomial::from_element(const Element& a) {
  Polynomial p(a.dim());
  for (const auto& [m, c] : a.terms()) {
    for (auto b : m.beta)
      if (b != 0) throw Error(ErrorCode::NotPolynomial, "element contains y-generators");
    p.add_term(m.alpha, c);
  }
  return p;
}

Scalar Polynomial::coefficient(const Exponents& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Polynomial::add_term(const Exponents& alpha, const Scalar& c) {
  require_same_dim(alpha.size(), dim_, "polynomial");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::restrict_zero(std::size_t j) const {
  Polynomial r(dim_);
  for (const auto& [a, c] : terms_)
    if (a[j] == 0) r.add_term(a, c);
  return r;
}

Polynomial Polynomial::divide_var(std::size_t j) const {
  Polynomial r(dim_);
  for (const auto& [key, c] : terms_) {
    Exponents a = key;
    if (a[j] == 0) throw Error(ErrorCode::InvalidArgument, "inexact division by a variable");
    --a[j];
    r.add_term(a, c);
  }
  return r;
}

Polynomial Polynomial::mul_var(std::size_t j) const {
  Polynomial r(dim_);
  for (const auto& [key, c] : terms_) {
    Exponents a = key;
    ++a[j];
    r.add_term(a, c);
  }
  return r;
}

Element Polynomial::to_element() const {
  Element e(dim_);
  for (const auto& [a, c] : terms_) e.add_term(Monomial{a, Exponents(dim_, 0)}, c);
  return e;
}

Element Polynomial::to_y_element() const {
  Element e(dim_);
  for (const auto& [a, c] : terms_) e.add_term(Monomial{Exponents(dim_, 0), a}, c);
  return e;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [a, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& b) {
  require_same_dim(dim_, b.dim_, "polynomial add");
  for (const auto& [a, c] : b.terms_) add_term(a, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& b) {
  require_same_dim(dim_, b.dim_, "polynomial sub");
  for (const auto& [a, c] : b.terms_) add_term(a, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_dim(a.dim_, b.dim_, "polynomial mul");
  Polynomial r(a.dim_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

Polynomial operator*(Polynomial a, const Scalar& c) {
  if (c == 0) {
    a.terms_.clear();
  } else {
    for (auto& [e, v] : a.terms_) v *= c;
  }
  return a;
}

}  // namespace snw
