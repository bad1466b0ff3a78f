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

#include "snw/group.hpp"

#include <algorithm>
#include <map>

#include "snw/decomp.hpp"
#include "snw/errors.hpp"
#include "snw/linalg.hpp"

namespace snw {

// ---- Permutation ------------------------------------------------------------

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto i : images_) {
    if (i >= images_.size() || seen[i]) throw Error(ErrorCode::InvalidArgument, "not a permutation");
    seen[i] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = i;
  return Permutation(std::move(img));
}

Permutation Permutation::transposition(std::size_t n, std::size_t i, std::size_t j) {
  if (i >= n || j >= n || i == j) throw Error(ErrorCode::InvalidArgument, "transposition needs two distinct indices");
  auto p = identity(n);
  std::swap(p.images_[i], p.images_[j]);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

int Permutation::sign() const {
  int s = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::string Permutation::to_string() const {
  if (is_identity()) return "e";
  std::string s;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    s += "(";
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      if (j != i) s += " ";
      s += std::to_string(j + 1);
      seen[j] = true;
    }
    s += ")";
  }
  return s;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  require_same_dim(a.size(), b.size(), "permutation product");
  std::vector<std::size_t> img(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) img[i] = a(b(i));
  return Permutation(std::move(img));
}

// ---- layer actions ----------------------------------------------------------

Element apply_permutation(const Permutation& tau, const Element& a) {
  require_same_dim(tau.size(), a.dim(), "apply_permutation");
  Element r(a.dim());
  for (const auto& [m, c] : a.terms()) {
    Monomial t = Monomial::one(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
      t.alpha[tau(i)] = m.alpha[i];
      t.beta[tau(i)] = m.beta[i];
    }
    r.add_term(t, c);
  }
  return r;
}

Element apply_torus(const TorusVector& lambda, const Element& a) {
  require_same_dim(lambda.size(), a.dim(), "apply_torus");
  Element r(a.dim());
  for (const auto& [m, c] : a.terms()) {
    Scalar f = c;
    for (std::size_t i = 0; i < a.dim(); ++i) {
      const std::int64_t e = std::int64_t(m.alpha[i]) - std::int64_t(m.beta[i]);
      Scalar p = 1;
      const Scalar base = e >= 0 ? lambda[i] : Scalar(1 / lambda[i]);
      for (std::int64_t k = 0; k < (e >= 0 ? e : -e); ++k) p *= base;
      f *= p;
    }
    r.add_term(m, f);
  }
  return r;
}

TorusVector permute_torus(const Permutation& tau, const TorusVector& lambda) {
  TorusVector out(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i) out[tau(i)] = lambda[i];
  return out;
}

namespace {

TorusVector inverse_torus(const TorusVector& lambda) {
  TorusVector out;
  for (const auto& l : lambda) out.push_back(1 / l);
  return out;
}

// h = tau o t_lambda and its inverse.
Element apply_layer(const Permutation& tau, const TorusVector& lambda, const Element& a) {
  return apply_permutation(tau, apply_torus(lambda, a));
}

Element apply_layer_inverse(const Permutation& tau, const TorusVector& lambda, const Element& a) {
  return apply_torus(inverse_torus(lambda), apply_permutation(tau.inverse(), a));
}

}  // namespace

// ---- GroupElement -----------------------------------------------------------

GroupElement::GroupElement(Permutation tau, TorusVector lambda, MonoidElement u)
    : GroupElement(std::move(tau), std::move(lambda), u, invert(u)) {}

GroupElement::GroupElement(Permutation tau, TorusVector lambda, MonoidElement u, MonoidElement u_inv)
    : tau_(std::move(tau)), lambda_(std::move(lambda)), u_(std::move(u)), u_inv_(std::move(u_inv)) {
  require_same_dim(tau_.size(), lambda_.size(), "group element");
  require_same_dim(tau_.size(), u_.dim(), "group element");
  for (const auto& l : lambda_)
    if (l == 0) throw Error(ErrorCode::InvalidArgument, "torus entries must be nonzero");
}

GroupElement GroupElement::identity(std::size_t n) {
  return GroupElement(Permutation::identity(n), TorusVector(n, Scalar(1)), MonoidElement::one(n),
                      MonoidElement::one(n));
}

Element apply(const GroupElement& g, const Element& a) {
  require_same_dim(g.dim(), a.dim(), "apply");
  const Element inner = g.u().element() * a * g.u_inverse().element();
  return apply_layer(g.tau(), g.lambda(), inner);
}

GroupElement compose(const GroupElement& g1, const GroupElement& g2) {
  require_same_dim(g1.dim(), g2.dim(), "compose");
  // omega_{u1} o h2 = h2 o omega_{h2^{-1}(u1)}, and tau1 t1 tau2 = tau1 tau2 t_{tau2^{-1}(lambda1)}.
  const Permutation tau = g1.tau_ * g2.tau_;
  TorusVector lambda = permute_torus(g2.tau_.inverse(), g1.lambda_);
  for (std::size_t i = 0; i < lambda.size(); ++i) lambda[i] *= g2.lambda_[i];
  const Element u1 = apply_layer_inverse(g2.tau_, g2.lambda_, g1.u_.element());
  const Element u1_inv = apply_layer_inverse(g2.tau_, g2.lambda_, g1.u_inv_.element());
  return GroupElement(tau, std::move(lambda), MonoidElement(u1 * g2.u_.element()),
                      MonoidElement(g2.u_inv_.element() * u1_inv));
}

GroupElement inverse_g(const GroupElement& g) {
  // omega_{u^{-1}} o h^{-1} = h^{-1} o omega_{h(u^{-1})}.
  const Permutation tau = g.tau_.inverse();
  const TorusVector lambda = inverse_torus(permute_torus(g.tau_, g.lambda_));
  return GroupElement(tau, lambda, MonoidElement(apply_layer(g.tau_, g.lambda_, g.u_inv_.element())),
                      MonoidElement(apply_layer(g.tau_, g.lambda_, g.u_.element())));
}

Scalar det_g(const GroupElement& g) {
  Scalar d = g.tau().sign();
  for (const auto& l : g.lambda()) d *= l;
  return d * global_det(g.u());
}

// ---- generators -------------------------------------------------------------

GroupElement make_transposition(std::size_t n, std::size_t i, std::size_t j) {
  return GroupElement(Permutation::transposition(n, i, j), TorusVector(n, Scalar(1)), MonoidElement::one(n));
}

GroupElement make_torus(std::size_t n, std::size_t i, const Scalar& lambda) {
  if (i >= n) throw Error(ErrorCode::DimensionError, "torus index exceeds dimension");
  if (lambda == 0) throw Error(ErrorCode::InvalidArgument, "torus parameter must be nonzero");
  TorusVector t(n, Scalar(1));
  t[i] = lambda;
  return GroupElement(Permutation::identity(n), std::move(t), MonoidElement::one(n));
}

GroupElement make_elementary(std::size_t n, IndexSet I, const Exponents& k, const Exponents& l,
                             const Scalar& lambda) {
  if (I.empty()) throw Error(ErrorCode::InvalidArgument, "index set must be nonempty");
  require_same_dim(k.size(), n, "make_elementary");
  require_same_dim(l.size(), n, "make_elementary");
  bool differ = false;
  for (auto i : I.elements()) differ = differ || k[i] != l[i];
  if (!differ) throw Error(ErrorCode::InvalidArgument, "elementary generator needs k != l");
  Exponents kk(n, 0), ll(n, 0);
  for (auto i : I.elements()) {
    kk[i] = k[i];
    ll[i] = l[i];
  }
  return make_inner(MonoidElement(Element::constant(n, 1) + Element::E(n, I, kk, ll) * lambda));
}

GroupElement make_diagonal(std::size_t n, IndexSet I, const Scalar& lambda) {
  if (I.empty()) throw Error(ErrorCode::InvalidArgument, "index set must be nonempty");
  if (lambda == -1) throw Error(ErrorCode::InvalidArgument, "diagonal generator needs lambda != -1");
  const Exponents zero(n, 0);
  return make_inner(MonoidElement(Element::constant(n, 1) + Element::E(n, I, zero, zero) * lambda));
}

GroupElement make_inner(const MonoidElement& u) {
  const std::size_t n = u.dim();
  return GroupElement(Permutation::identity(n), TorusVector(n, Scalar(1)), u);
}

// ---- recover ----------------------------------------------------------------

namespace {

struct Ansatz {
  std::vector<Element> basis;  // basis[0] = 1
};

Ansatz build_ansatz(std::size_t n, std::uint64_t m) {
  Ansatz a;
  a.basis.push_back(Element::constant(n, 1));
  for (std::uint32_t bits = 1; bits < (1u << n); ++bits) {
    const IndexSet I(bits);
    const auto idx = I.elements();
    // Enumerate alpha, beta in [0..m]^I jointly.
    std::vector<std::uint32_t> digits(2 * idx.size(), 0);
    while (true) {
      Exponents alpha(n, 0), beta(n, 0);
      for (std::size_t t = 0; t < idx.size(); ++t) {
        alpha[idx[t]] = digits[t];
        beta[idx[t]] = digits[idx.size() + t];
      }
      a.basis.push_back(Element::E(n, I, alpha, beta));
      std::size_t t = 0;
      while (t < digits.size() && digits[t] == m) digits[t++] = 0;
      if (t == digits.size()) break;
      ++digits[t];
    }
  }
  return a;
}

// Columns of sum_b c_b (b g - G b) for each generator pair (g, G).
SparseEchelon intertwining_system(const Ansatz& ansatz, const std::vector<Element>& gens,
                                  const std::vector<Element>& images) {
  std::map<Monomial, std::size_t, DegLex> row_of;
  std::vector<SparseEchelon::Row> rows;
  for (std::size_t col = 0; col < ansatz.basis.size(); ++col) {
    const Element& b = ansatz.basis[col];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Element residual = b * gens[i] - images[i] * b;
      for (const auto& [mono, c] : residual.terms()) {
        // Rows are keyed by (generator, monomial).
        Monomial key = mono;
        key.alpha.push_back(static_cast<std::uint32_t>(i));
        auto [it, inserted] = row_of.try_emplace(key, rows.size());
        if (inserted) rows.emplace_back();
        rows[it->second][col] = c;
      }
    }
  }
  SparseEchelon ech(ansatz.basis.size());
  for (auto& r : rows) ech.add_row(std::move(r));
  return ech;
}

}  // namespace

GroupElement recover(const std::vector<Element>& x_images, const std::vector<Element>& y_images,
                     const RecoverOptions& options) {
  if (x_images.empty() || x_images.size() != y_images.size())
    throw Error(ErrorCode::DimensionError, "recover needs n x-images and n y-images");
  const std::size_t n = x_images.size();
  for (const auto& e : x_images) require_same_dim(e.dim(), n, "recover");
  for (const auto& e : y_images) require_same_dim(e.dim(), n, "recover");

  // (1) tau and lambda from the Laurent images of the x-images.
  std::vector<std::size_t> tau_img(n);
  TorusVector lambda(n);
  for (std::size_t i = 0; i < n; ++i) {
    const LaurentPoly image = laurent_image(x_images[i]);
    bool ok = image.terms().size() == 1;
    if (ok) {
      const auto& [e, c] = *image.terms().begin();
      std::size_t ones = 0, where = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (e[j] == 1) {
          ++ones;
          where = j;
        } else if (e[j] != 0) {
          ok = false;
        }
      }
      ok = ok && ones == 1;
      tau_img[i] = where;
      lambda[i] = c;
    }
    if (!ok) {
      throw Error(ErrorCode::NotLaurentMonomial,
                  "Laurent image of x" + std::to_string(i + 1) + " is not a scaled generator");
    }
  }
  std::vector<bool> hit(n, false);
  for (auto j : tau_img) {
    if (hit[j]) throw Error(ErrorCode::NotLaurentMonomial, "x-images do not induce a permutation");
    hit[j] = true;
  }
  const Permutation tau(tau_img);

  // (2) strip the permutation/torus layer.
  std::vector<Element> xs, ys, x_tw, y_tw;
  std::uint64_t m = 1;
  for (std::size_t i = 0; i < n; ++i) {
    xs.push_back(Element::x(n, i));
    ys.push_back(Element::y(n, i));
    x_tw.push_back(apply_layer_inverse(tau, lambda, x_images[i]));
    y_tw.push_back(apply_layer_inverse(tau, lambda, y_images[i]));
    const Element p = x_tw[i] - xs[i];
    const Element q = y_tw[i] - ys[i];
    const IndexSet Ii = IndexSet::single(i);
    if (!p.is_zero() && !in_ideal_pI(p, Ii))
      throw Error(ErrorCode::NotInIdeal, "x" + std::to_string(i + 1) + " residue is not in p_" + std::to_string(i + 1));
    if (!q.is_zero() && !in_ideal_pI(q, Ii))
      throw Error(ErrorCode::NotInIdeal, "y" + std::to_string(i + 1) + " residue is not in p_" + std::to_string(i + 1));
    m = std::max({m, mixed_support_size(p), mixed_support_size(q)});
  }

  // (3) intertwiners u x_i = (x_i + p_i) u inside the window; the y-relations
  // are checked on the candidate.
  const std::uint64_t cap = options.window_cap;
  m = std::min<std::uint64_t>(m, cap);
  while (true) {
    const Ansatz ansatz = build_ansatz(n, m);
    const SparseEchelon ech = intertwining_system(ansatz, xs, x_tw);
    if (ech.nullity() > 1)
      throw Error(ErrorCode::NotOneDimensional, "intertwiner space has dimension " + std::to_string(ech.nullity()));
    if (ech.nullity() == 1) {
      const auto v = ech.nullspace().front();
      if (v[0] == 0) throw Error(ErrorCode::NotUnit, "intertwiner has zero constant part");
      Element u(n);
      for (std::size_t c = 0; c < v.size(); ++c)
        if (v[c] != 0) u += ansatz.basis[c] * Scalar(v[c] / v[0]);
      for (std::size_t i = 0; i < n; ++i) {
        if (u * ys[i] != y_tw[i] * u)
          throw Error(ErrorCode::NoSolution, "y-images are inconsistent with the x-images");
      }
      // (5) det and round trip.
      MonoidElement mu(std::move(u));
      if (global_det(mu) == 0) throw Error(ErrorCode::NotUnit, "recovered intertwiner is not a unit");
      GroupElement g(tau, lambda, std::move(mu));
      for (std::size_t i = 0; i < n; ++i) {
        if (apply(g, xs[i]) != x_images[i] || apply(g, ys[i]) != y_images[i])
          throw Error(ErrorCode::NoSolution, "round trip failed");
      }
      return g;
    }
    if (m >= cap) throw Error(ErrorCode::WindowCapExceeded, "no intertwiner within window " + std::to_string(cap));
    m = std::min<std::uint64_t>(2 * m, cap);
  }
}

}  // namespace snw
