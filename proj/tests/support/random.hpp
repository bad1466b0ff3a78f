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

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "snw/core.hpp"
#include "snw/endo.hpp"
#include "snw/group.hpp"
#include "snw/polynomial.hpp"
#include "snw/units.hpp"

namespace snw::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  bool coin() { return uniform(0, 1) == 1; }

  Scalar scalar(bool nonzero = true) {
    while (true) {
      Scalar q(uniform(-5, 5), uniform(1, 3));
      q.canonicalize();
      if (!nonzero || q != 0) return q;
    }
  }

  Monomial monomial(std::size_t n, int max_exp) {
    Monomial m = Monomial::one(n);
    for (std::size_t i = 0; i < n; ++i) {
      m.alpha[i] = uniform(0, max_exp);
      m.beta[i] = uniform(0, max_exp);
    }
    return m;
  }

  Element element(std::size_t n, int terms, int max_exp) {
    Element e(n);
    for (int t = 0; t < terms; ++t) e.add_term(monomial(n, max_exp), scalar());
    return e;
  }

  Element nonzero_element(std::size_t n, int terms, int max_exp) {
    while (true) {
      Element e = element(n, terms, max_exp);
      if (!e.is_zero()) return e;
    }
  }

  IndexSet nonempty_subset(std::size_t n) {
    return IndexSet(static_cast<std::uint32_t>(uniform(1, (1 << n) - 1)));
  }

  Exponents exponents_on(std::size_t n, IndexSet I, int max) {
    Exponents e(n, 0);
    for (auto i : I.elements()) e[i] = uniform(0, max);
    return e;
  }

  /// 1 + lambda E_{kl}(I) with k != l, or 1 + lambda E_{00}(I) with lambda != -1.
  Element generator_unit(std::size_t n, int max_size) {
    const IndexSet I = nonempty_subset(n);
    const Element one = Element::constant(n, 1);
    if (coin()) {
      while (true) {
        Exponents k = exponents_on(n, I, max_size), l = exponents_on(n, I, max_size);
        if (k == l) continue;
        return one + Element::E(n, I, k, l) * scalar();
      }
    }
    Scalar lambda = scalar();
    while (lambda == -1) lambda = scalar();
    const Exponents z(n, 0);
    return one + Element::E(n, I, z, z) * lambda;
  }

  MonoidElement unit(std::size_t n, int max_size, int factors) {
    Element u = Element::constant(n, 1);
    for (int f = 0; f < factors; ++f) u = u * generator_unit(n, max_size);
    return MonoidElement(u);
  }

  /// 1 + sparse random combination of matrix units; may or may not be a unit.
  MonoidElement monoid_element(std::size_t n, int max_size, int terms) {
    Element u = Element::constant(n, 1);
    for (int t = 0; t < terms; ++t) {
      const IndexSet I = nonempty_subset(n);
      u += Element::E(n, I, exponents_on(n, I, max_size), exponents_on(n, I, max_size)) *
           Scalar(uniform(-2, 2));
    }
    return MonoidElement(u);
  }

  Permutation permutation(std::size_t n) {
    std::vector<std::size_t> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), gen_);
    return Permutation(img);
  }

  GroupElement group(std::size_t n, int max_size, int factors) {
    TorusVector lambda;
    for (std::size_t i = 0; i < n; ++i) lambda.push_back(scalar());
    return GroupElement(permutation(n), lambda, unit(n, max_size, factors));
  }

  Polynomial polynomial(std::size_t n, int terms, int max_deg) {
    Polynomial p(n);
    for (int t = 0; t < terms; ++t) {
      Exponents a(n);
      for (auto& e : a) e = uniform(0, max_deg);
      p.add_term(a, scalar());
    }
    return p;
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

/// Valid tuples: p_i in (x_1...x_n) with p_j = x_j^{-1} x_i p_i, or one
/// variable polynomials p_i in K[x_i].
inline std::vector<Polynomial> random_valid_p(Rng& rng, std::size_t n, int max_deg) {
  std::vector<Polynomial> p(n, Polynomial(n));
  if (n > 1 && rng.coin()) {
    const std::size_t i = rng.uniform(0, static_cast<int>(n) - 1);
    Polynomial base = rng.polynomial(n, rng.uniform(1, 3), max_deg - 1);
    for (std::size_t j = 0; j < n; ++j) base = base.mul_var(j);
    p[i] = base;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) p[j] = base.mul_var(i).divide_var(j);
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      for (int t = 0; t < rng.uniform(0, 2); ++t) {
        Exponents a(n, 0);
        a[i] = rng.uniform(0, max_deg);
        p[i].add_term(a, rng.scalar());
      }
    }
  }
  return p;
}

}  // namespace snw::testing
