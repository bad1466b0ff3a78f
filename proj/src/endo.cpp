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

#include "snw/endo.hpp"

#include <map>

#include "snw/errors.hpp"
#include "snw/linalg.hpp"

namespace snw {

namespace {

void require_tuple(const std::vector<Polynomial>& p) {
  if (p.empty()) throw Error(ErrorCode::InvalidArgument, "empty tuple");
  for (const auto& pi : p) require_same_dim(pi.dim(), p.size(), "endomorphism tuple");
}

}  // namespace

bool check_pij(const std::vector<Polynomial>& p) {
  require_tuple(p);
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Polynomial pij = p[i].restrict_zero(j);
      const Polynomial pji = p[j].restrict_zero(i);
      const Polynomial lhs = -(p[i] - pij).divide_var(j) + (p[j] - pji).divide_var(i) +
                             p[i] * pji - p[j] * pij;
      if (!lhs.is_zero()) return false;
    }
  }
  return true;
}

EndoP::EndoP(std::vector<Polynomial> p) : p_(std::move(p)) {
  if (!check_pij(p_)) throw Error(ErrorCode::InvalidEndo, "tuple violates the compatibility identity");
}

EndoQ::EndoQ(std::vector<Polynomial> q) : q_(std::move(q)) {
  if (!check_qij(q_)) throw Error(ErrorCode::InvalidEndo, "tuple violates the compatibility identity");
}

Element sigma_p_apply(const EndoP& p, const Element& a) {
  const std::size_t n = p.dim();
  require_same_dim(n, a.dim(), "sigma_p_apply");
  std::vector<Element> y_image;
  for (std::size_t i = 0; i < n; ++i)
    y_image.push_back(Element::y(n, i) + p.p()[i].to_element() * Element::E(n, i, 0, 0));
  std::vector<std::map<std::uint32_t, Element>> powers(n);
  auto y_pow = [&](std::size_t i, std::uint32_t e) -> const Element& {
    auto it = powers[i].find(e);
    if (it == powers[i].end()) it = powers[i].emplace(e, y_image[i].pow(e)).first;
    return it->second;
  };
  Element r(n);
  for (const auto& [m, c] : a.terms()) {
    Element t = Element::from_monomial(Monomial{m.alpha, Exponents(n, 0)}, c);
    for (std::size_t i = 0; i < n; ++i)
      if (m.beta[i]) t = t * y_pow(i, m.beta[i]);
    r += t;
  }
  return r;
}

EndoP compose_sigma(const EndoP& p, const EndoP& p2) {
  require_same_dim(p.dim(), p2.dim(), "compose_sigma");
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    const Polynomial& a = p.p()[i];
    const Polynomial& b = p2.p()[i];
    out.push_back(a + b - (a * b).mul_var(i));
  }
  return EndoP(std::move(out));
}

Element tau_q_apply(const EndoQ& q, const Element& a) {
  // eta o sigma_{eta(q)} o eta; eta(q) has the same exponent data read in x.
  return involution(sigma_p_apply(EndoP(q.q()), involution(a)));
}

std::size_t image_dimension(const Element& x_image, const Element& y_image, unsigned bound) {
  require_same_dim(x_image.dim(), y_image.dim(), "image_dimension");
  std::vector<Element> xp, yp;
  for (unsigned k = 0; k <= bound; ++k) {
    xp.push_back(x_image.pow(k));
    yp.push_back(y_image.pow(k));
  }
  std::map<Monomial, std::size_t, DegLex> col;
  std::vector<Element> spans;
  for (unsigned a = 0; a <= bound; ++a)
    for (unsigned b = 0; b <= bound; ++b) {
      spans.push_back(xp[a] * yp[b]);
      for (const auto& [m, c] : spans.back().terms()) col.try_emplace(m, col.size());
    }
  Matrix mat(spans.size(), col.size());
  for (std::size_t r = 0; r < spans.size(); ++r)
    for (const auto& [m, c] : spans[r].terms()) mat(r, col.at(m)) = c;
  return col.empty() ? 0 : rank(mat);
}

FiniteImage finite_image_endo(unsigned m) {
  if (m < 2) throw Error(ErrorCode::InvalidArgument, "finite_image_endo needs m >= 2");
  Element nil(1);
  for (unsigned i = 0; i + 2 <= m; ++i) nil += Element::E(1, 0, i, i + 1);
  const Element one = Element::constant(1, 1);
  const Element x = one + nil;
  // (1 + N)^{-1} = sum_{k<m} (-N)^k since N^m = 0.
  Element y(1);
  Element term = one;
  for (unsigned k = 0; k < m; ++k) {
    y += term;
    term = term * (-nil);
  }
  if (y * x != one || x * y != one) throw Error(ErrorCode::InvalidArgument, "nilpotent inverse failed");
  return {x, y, image_dimension(x, y, m)};
}

}  // namespace snw
