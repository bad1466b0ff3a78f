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

#include "snw/decomp.hpp"
#include "snw/errors.hpp"
#include "snw/group.hpp"
#include "support/random.hpp"

using namespace snw;
using snw::testing::Rng;

namespace {

Element one(std::size_t n = 1) { return Element::constant(n, 1); }
Element E(std::uint32_t k, std::uint32_t l, std::size_t i = 0, std::size_t n = 1) {
  return Element::E(n, i, k, l);
}
GroupElement torus(std::vector<Scalar> lambda) {
  const std::size_t n = lambda.size();
  return GroupElement(Permutation::identity(n), lambda, MonoidElement::one(n));
}
GroupElement perm(std::vector<std::size_t> images) {
  const std::size_t n = images.size();
  return GroupElement(Permutation(images), TorusVector(n, 1), MonoidElement::one(n));
}

ErrorCode code_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

std::vector<Element> x_images(const GroupElement& g) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < g.dim(); ++i) out.push_back(apply(g, Element::x(g.dim(), i)));
  return out;
}
std::vector<Element> y_images(const GroupElement& g) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < g.dim(); ++i) out.push_back(apply(g, Element::y(g.dim(), i)));
  return out;
}

}  // namespace

TEST_CASE("permutation basics") {
  const Permutation t = Permutation::transposition(3, 0, 1);
  CHECK(t.sign() == -1);
  CHECK(t.to_string() == "(1 2)");
  CHECK(Permutation::identity(3).to_string() == "e");
  const Permutation c({1, 2, 0});
  CHECK(c.to_string() == "(1 2 3)");
  CHECK(c.sign() == 1);
  CHECK((c * c.inverse()).is_identity());
  CHECK((c * t)(0) == c(t(0)));
  CHECK_THROWS_AS(Permutation({0, 0}), Error);
}

TEST_CASE("apply examples") {
  CHECK(apply(torus({2}), E(2, 0)) == E(2, 0) * Scalar(4));
  const GroupElement w = make_inner(MonoidElement(one() + E(0, 0)));
  CHECK(apply(w, Element::x(1, 0)) == Element::x(1, 0) - E(1, 0) * Scalar(1, 2));
  const Element x1y2 = Element::x(2, 0) * Element::y(2, 1);
  CHECK(apply(make_transposition(2, 0, 1), x1y2) == Element::x(2, 1) * Element::y(2, 0));
  CHECK_THROWS_AS(apply(torus({2}), Element::x(2, 0)), Error);
}

TEST_CASE("compose examples") {
  const GroupElement tau = perm({1, 0});
  const TorusVector lambda{2, 3};
  const GroupElement lhs = compose(tau, torus(lambda));
  const GroupElement rhs = compose(torus(permute_torus(tau.tau(), lambda)), tau);
  CHECK(lhs == rhs);
  CHECK(permute_torus(tau.tau(), lambda) == TorusVector{3, 2});
  for (const Element& a : {Element::x(2, 0), Element::y(2, 1), E(3, 1, 0, 2)})
    CHECK(apply(lhs, a) == apply(rhs, a));

  const MonoidElement u(one() + E(0, 1)), v(one() + E(1, 0));
  const GroupElement uv = compose(make_inner(u), make_inner(v));
  CHECK(uv == make_inner(MonoidElement(u.element() * v.element())));
  for (const Element& a : {Element::x(1, 0), Element::y(1, 0)})
    CHECK(apply(uv, a) == apply(make_inner(u), apply(make_inner(v), a)));
}

TEST_CASE("inverse examples") {
  CHECK(inverse_g(GroupElement::identity(2)) == GroupElement::identity(2));
  CHECK(inverse_g(torus({2})) == torus({Scalar(1, 2)}));
  const GroupElement g(Permutation({1, 0}), TorusVector{1, 1},
                       MonoidElement(one(2) + E(0, 0, 0, 2)));
  CHECK(compose(g, inverse_g(g)) == GroupElement::identity(2));
  CHECK(compose(inverse_g(g), g) == GroupElement::identity(2));
}

TEST_CASE("det_g examples") {
  CHECK(det_g(make_transposition(2, 0, 1)) == -1);
  CHECK(det_g(torus({2, 3})) == 6);
  CHECK(det_g(make_inner(MonoidElement(one() + E(0, 0) * Scalar(3)))) == 4);
}

TEST_CASE("generator constructors") {
  const GroupElement d = make_diagonal(1, IndexSet(1), 5);
  CHECK(d.u().element() == one() + E(0, 0) * Scalar(5));
  CHECK(det_g(d) == 6);
  const GroupElement e = make_elementary(1, IndexSet(1), {0}, {1}, 7);
  CHECK(e.u().element() == one() + E(0, 1) * Scalar(7));
  CHECK(det_g(e) == 1);
  CHECK(code_of([] { make_diagonal(1, IndexSet(1), -1); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { make_elementary(1, IndexSet(1), {1}, {1}, 2); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { make_torus(1, 0, 0); }) == ErrorCode::InvalidArgument);
  CHECK(make_torus(2, 1, 3).lambda() == TorusVector{1, 3});
  CHECK_THROWS_AS(GroupElement(Permutation::identity(1), {1}, MonoidElement(one() - E(0, 0))), Error);
}

TEST_CASE("recover examples") {
  const GroupElement t = recover({Element::x(1, 0) * Scalar(2)}, {Element::y(1, 0) * Scalar(1, 2)});
  CHECK(t == torus({2}));
  const GroupElement w = make_inner(MonoidElement(one() + E(0, 0)));
  CHECK(recover(x_images(w), y_images(w)) == w);

  CHECK(code_of([] { recover({Element::x(1, 0) * Element::x(1, 0)}, {Element::y(1, 0)}); }) ==
        ErrorCode::NotLaurentMonomial);
  CHECK(code_of([] { recover({Element::x(1, 0) + one()}, {Element::y(1, 0)}); }) ==
        ErrorCode::NotLaurentMonomial);
  CHECK(code_of([] {
          recover({Element::x(2, 0) + E(0, 0, 1, 2), Element::x(2, 1)},
                  {Element::y(2, 0), Element::y(2, 1)});
        }) == ErrorCode::NotInIdeal);
  // x and y images that do not come from the same automorphism
  CHECK(code_of([] { recover({Element::x(1, 0) + E(1, 0)}, {Element::y(1, 0)}); }) ==
        ErrorCode::NoSolution);
  CHECK_THROWS_AS(recover({Element::x(1, 0)}, {}), Error);
}

TEST_CASE("property: functoriality, inverses and det homomorphism") {
  Rng rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = rng.uniform(1, 3);
    const GroupElement g1 = rng.group(n, 2, rng.uniform(0, 2));
    const GroupElement g2 = rng.group(n, 2, rng.uniform(0, 2));
    const GroupElement g12 = compose(g1, g2);
    const Element a = rng.element(n, 3, 2), b = rng.element(n, 3, 2);
    CHECK(apply(g12, a) == apply(g1, apply(g2, a)));
    CHECK(apply(g1, a * b) == apply(g1, a) * apply(g1, b));
    CHECK(apply(g1, a + b) == apply(g1, a) + apply(g1, b));
    CHECK(det_g(g12) == det_g(g1) * det_g(g2));
    CHECK(compose(g1, inverse_g(g1)) == GroupElement::identity(n));
    CHECK(apply(inverse_g(g1), apply(g1, a)) == a);
    for (std::size_t i = 0; i < n; ++i)
      CHECK(apply(g1, Element::y(n, i)) * apply(g1, Element::x(n, i)) == one(n));
  }
}

TEST_CASE("property: height-one primes are permuted and the augmentation ideal is invariant") {
  Rng rng(62);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = rng.uniform(1, 3);
    const GroupElement g = rng.group(n, 2, rng.uniform(0, 2));
    const std::size_t i = rng.uniform(0, static_cast<int>(n) - 1);
    const Element p = rng.element(n, 2, 2) * Element::E(n, i, rng.uniform(0, 2), rng.uniform(0, 2));
    CHECK(in_ideal_pI(p, IndexSet::single(i)));
    CHECK(in_ideal_pI(apply(g, p), IndexSet::single(g.tau()(i))));
    const Element a = rng.element(n, 3, 2);
    CHECK(in_an(apply(g, a)) == in_an(a));
  }
}

TEST_CASE("property: recover round trip on n = 2") {
  Rng rng(63);
  for (int trial = 0; trial < 30; ++trial) {
    const GroupElement g = rng.group(2, 2, rng.uniform(0, 2));
    CHECK(recover(x_images(g), y_images(g)) == g);
  }
}

TEST_CASE("property: rigidity") {
  Rng rng(64);
  for (int trial = 0; trial < 30; ++trial) {
    const GroupElement g1 = rng.group(2, 2, 1), g2 = rng.group(2, 2, 1);
    if (g1 == g2) continue;
    CHECK(x_images(g1) != x_images(g2));
  }
}
