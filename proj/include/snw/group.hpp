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

#include <string>
#include <vector>

#include "snw/core.hpp"
#include "snw/units.hpp"

namespace snw {

/// Bijection of {0..n-1}; images[i] = tau(i).
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> images);
  static Permutation identity(std::size_t n);
  static Permutation transposition(std::size_t n, std::size_t i, std::size_t j);

  std::size_t size() const { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::size_t>& images() const { return images_; }
  Permutation inverse() const;
  int sign() const;
  bool is_identity() const;
  /// Cycle notation, 1-based; "e" for the identity.
  std::string to_string() const;

  /// (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.images_ < b.images_; }

 private:
  std::vector<std::size_t> images_;
};

using TorusVector = std::vector<Scalar>;

/// tau(x_i) = x_{tau(i)}.
Element apply_permutation(const Permutation& tau, const Element& a);
/// t_lambda(x_i) = lambda_i x_i, t_lambda(y_i) = lambda_i^{-1} y_i.
Element apply_torus(const TorusVector& lambda, const Element& a);
/// tau(lambda)_j = lambda_{tau^{-1}(j)}.
TorusVector permute_torus(const Permutation& tau, const TorusVector& lambda);

/// sigma = tau o t_lambda o omega_u, omega_u(a) = u a u^{-1}.
class GroupElement {
 public:
  /// Validates lambda and det(u) != 0.
  GroupElement(Permutation tau, TorusVector lambda, MonoidElement u);
  static GroupElement identity(std::size_t n);

  std::size_t dim() const { return tau_.size(); }
  const Permutation& tau() const { return tau_; }
  const TorusVector& lambda() const { return lambda_; }
  const MonoidElement& u() const { return u_; }
  const MonoidElement& u_inverse() const { return u_inv_; }

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.tau_ == b.tau_ && a.lambda_ == b.lambda_ && a.u_ == b.u_;
  }

 private:
  GroupElement(Permutation tau, TorusVector lambda, MonoidElement u, MonoidElement u_inv);
  friend GroupElement compose(const GroupElement&, const GroupElement&);
  friend GroupElement inverse_g(const GroupElement&);

  Permutation tau_;
  TorusVector lambda_;
  MonoidElement u_;
  MonoidElement u_inv_;
};

Element apply(const GroupElement& g, const Element& a);
/// apply(compose(g1, g2), a) = apply(g1, apply(g2, a)).
GroupElement compose(const GroupElement& g1, const GroupElement& g2);
GroupElement inverse_g(const GroupElement& g);
Scalar det_g(const GroupElement& g);

// Generator families.
GroupElement make_transposition(std::size_t n, std::size_t i, std::size_t j);
GroupElement make_torus(std::size_t n, std::size_t i, const Scalar& lambda);
/// omega of 1 + lambda * prod_{i in I} E_{k_i l_i}(i); requires k != l on I.
GroupElement make_elementary(std::size_t n, IndexSet I, const Exponents& k,
                             const Exponents& l, const Scalar& lambda);
/// omega of 1 + lambda * prod_{i in I} E_{00}(i); requires lambda != -1.
GroupElement make_diagonal(std::size_t n, IndexSet I, const Scalar& lambda);
GroupElement make_inner(const MonoidElement& u);

struct RecoverOptions {
  std::size_t window_cap = 64;
};

/// The unique g with apply(g, x_i) = x_images[i] and apply(g, y_i) = y_images[i].
GroupElement recover(const std::vector<Element>& x_images, const std::vector<Element>& y_images,
                     const RecoverOptions& options = {});

}  // namespace snw
