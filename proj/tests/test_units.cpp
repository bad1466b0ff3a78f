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

#include <doctest.h>

#include "snw/action.hpp"
#include "snw/decomp.hpp"
#include "snw/errors.hpp"
#include "snw/units.hpp"
#include "support/random.hpp"

using namespace snw;
using snw::testing::Rng;

namespace {

Element one(std::size_t n = 1) { return Element::constant(n, 1); }
Element E(std::uint32_t k, std::uint32_t l, std::size_t i = 0, std::size_t n = 1) {
  return Element::E(n, i, k, l);
}
MonoidElement M(const Element& e) { return MonoidElement(e); }

ErrorCode code_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

Scalar window_det(const MonoidElement& u, std::size_t i) {
  return determinant(matrix_on_window(u.element(), i).matrix);
}

}  // namespace

TEST_CASE("size examples") {
  const SizeReport a = size(M(one() + E(2, 5)));
  CHECK(a.s == 5);
  CHECK(a.deg == 1);
  const SizeReport id = size(MonoidElement::one(2));
  CHECK(id.identity);
  CHECK(id.s == 0);
  CHECK(id.deg == 3);
  const SizeReport b = size(M(one(2) + E(0, 0, 0, 2) * E(0, 0, 1, 2)));
  CHECK(b.s == 0);
  CHECK(b.deg == 2);
}

TEST_CASE("membership in M_n") {
  CHECK(in_monoid(one() + E(0, 1)));
  CHECK_FALSE(in_monoid(Element::x(1, 0)));
  CHECK_FALSE(in_monoid(one() * Scalar(2)));
  // Laurent-like factor on the other index.
  CHECK_FALSE(in_monoid(one(2) + E(0, 0, 0, 2) * Element::x(2, 1)));
  CHECK_THROWS_AS(M(Element::x(1, 0)), Error);
}

TEST_CASE("peel_factorize examples") {
  const std::size_t n = 2;
  const Element f1 = one(n) + E(0, 0, 0, n);
  const Element f2 = one(n) + E(0, 1, 1, n);
  const Element f3 = one(n) + E(0, 0, 0, n) * E(0, 0, 1, n);
  const FactorList fl = peel_factorize(M(f1 * f2 * f3));
  REQUIRE(fl.size() == 3);
  CHECK(fl[0].I == IndexSet(1));
  CHECK(fl[0].u.element() == f1);
  CHECK(fl[1].I == IndexSet(2));
  CHECK(fl[1].u.element() == f2);
  CHECK(fl[2].I == IndexSet(3));
  CHECK(fl[2].u.element() == f3);

  const FactorList single = peel_factorize(M(one() + E(0, 1)));
  REQUIRE(single.size() == 1);
  CHECK(single[0].u.element() == one() + E(0, 1));

  CHECK(code_of([] { peel_factorize(M(one() - E(0, 0))); }) == ErrorCode::SingularFactor);
}

TEST_CASE("det_MI examples") {
  CHECK(det_MI(IndexSet(1), M(one() + E(0, 1))) == 1);
  const std::size_t n = 2;
  const Element diag = one(n) + E(0, 0, 0, n) * E(0, 0, 1, n) * Scalar(3);
  CHECK(det_MI(IndexSet(3), M(diag)) == 4);
  // window determinant at two sizes: the diagonal entry appears once per window
  CHECK(determinant(matrix_on_window(diag, 0).matrix) == 4);
  CHECK(determinant(matrix_on_window(diag, 2).matrix) == 4);
  CHECK(det_MI(IndexSet(1), M(one() - E(0, 0))) == 0);
  CHECK(code_of([&] { det_MI(IndexSet(1), M(one(n) + E(0, 0, 1, n))); }) == ErrorCode::SupportError);
}

TEST_CASE("global_det examples") {
  const Element u = one() + E(0, 1), w = one() + E(1, 0);
  CHECK(global_det(M(u)) == 1);
  CHECK(global_det(M(w)) == 1);
  CHECK(u * w == one() + E(0, 1) + E(1, 0) + E(0, 0));
  CHECK(global_det(M(u * w)) == 1);
  Matrix block(2, 2);
  block(0, 0) = 2; block(0, 1) = 1; block(1, 0) = 1; block(1, 1) = 1;
  CHECK(matrix_on_window(u * w, 1).matrix == block);
  CHECK(global_det(M(one() - E(0, 0))) == 0);
  CHECK(global_det(M(one(2) + E(0, 0, 0, 2) * Scalar(5))) == 6);
  CHECK(global_det(M(one(2) - E(0, 0, 1, 2))) == 0);
}

TEST_CASE("invert examples") {
  CHECK(invert(M(one() + E(0, 1))).element() == one() - E(0, 1));
  CHECK(invert(M(one() + E(0, 0))).element() == one() - E(0, 0) * Scalar(1, 2));
  CHECK(code_of([] { invert(M(one() - E(0, 0))); }) == ErrorCode::NotUnit);
}

TEST_CASE("try_unit_split examples") {
  const UnitSplit s = try_unit_split((one() + E(0, 0)) * Scalar(3));
  CHECK(s.lambda == 3);
  CHECK(s.u.element() == one() + E(0, 0));
  CHECK(code_of([] { try_unit_split(Element::x(1, 0)); }) == ErrorCode::NotRepresentable);
  CHECK(code_of([] { try_unit_split(Element::x(1, 0) * Element::y(1, 0)); }) == ErrorCode::NotUnit);
}

TEST_CASE("property: determinant multiplicativity and factor uniqueness") {
  Rng rng(51);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = rng.uniform(1, 3);
    const MonoidElement u = rng.unit(n, 2, rng.uniform(1, 2));
    const MonoidElement v = rng.unit(n, 2, rng.uniform(1, 2));
    CHECK(global_det(M(u.element() * v.element())) == global_det(u) * global_det(v));
    const FactorList fl = peel_factorize(u);
    CHECK(factor_product(n, fl) == u.element());
    const FactorList again = peel_factorize(M(factor_product(n, fl)));
    REQUIRE(again.size() == fl.size());
    for (std::size_t i = 0; i < fl.size(); ++i) {
      CHECK(again[i].I == fl[i].I);
      CHECK(again[i].u == fl[i].u);
    }
  }
}

TEST_CASE("property: unit criterion, inverse and size") {
  Rng rng(52);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = rng.uniform(1, 2);
    const MonoidElement u = rng.monoid_element(n, 2, rng.uniform(1, 3));
    const Scalar d = global_det(u);
    const SizeReport s = size(u);
    for (std::size_t m = s.s; m <= s.s + 1; ++m) {
      const WindowMatrix w = matrix_on_window(u.element(), m);
      CHECK(w.invariant);
      CHECK((determinant(w.matrix) != 0) == (d != 0));
    }
    if (d != 0) {
      const MonoidElement inv = invert(u);
      CHECK(u.element() * inv.element() == Element::constant(n, 1));
      CHECK(inv.element() * u.element() == Element::constant(n, 1));
      CHECK(size(inv).s == s.s);
    } else {
      CHECK_THROWS_AS(invert(u), Error);
    }
  }
}

TEST_CASE("property: size of a product is bounded by the larger size") {
  Rng rng(53);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = rng.uniform(1, 3);
    const MonoidElement u = rng.monoid_element(n, 3, 2), v = rng.monoid_element(n, 3, 2);
    CHECK(size(M(u.element() * v.element())).s <= std::max(size(u).s, size(v).s));
  }
}

TEST_CASE("property: window determinant power law for n = 2") {
  Rng rng(54);
  for (int trial = 0; trial < 20; ++trial) {
    const MonoidElement u = rng.unit(2, 2, rng.uniform(1, 3));
    const FactorList fl = peel_factorize(u);
    const auto s = size(u).s;
    for (std::size_t i = s; i <= s + 2; ++i) {
      Scalar predicted = 1;
      for (const auto& f : fl) {
        const Scalar d = det_MI(f.I, f.u);
        std::size_t e = 1;
        for (int k = 0; k + f.I.size() < 2; ++k) e *= i + 1;
        for (std::size_t k = 0; k < e; ++k) predicted *= d;
      }
      CHECK(window_det(u, i) == predicted);
    }
  }
}

TEST_CASE("property: products of elementary generators have det 1") {
  Rng rng(55);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = rng.uniform(1, 3);
    Element u = one(n);
    for (int f = 0; f < 3; ++f) {
      const IndexSet I = rng.nonempty_subset(n);
      Exponents k, l;
      do {
        k = rng.exponents_on(n, I, 2);
        l = rng.exponents_on(n, I, 2);
      } while (k == l);
      u = u * (one(n) + Element::E(n, I, k, l) * rng.scalar());
    }
    CHECK(global_det(M(u)) == 1);
  }
}
