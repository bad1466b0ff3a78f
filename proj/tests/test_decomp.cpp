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
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace snw;
using snw::testing::Rng;

namespace {

Element x(std::size_t i = 0, std::size_t n = 1) { return Element::x(n, i); }
Element y(std::size_t i = 0, std::size_t n = 1) { return Element::y(n, i); }
Element one(std::size_t n = 1) { return Element::constant(n, 1); }
Element E(std::size_t k, std::size_t l, std::size_t i = 0, std::size_t n = 1) {
  return Element::E(n, i, static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(l));
}

MixedKey key(IndexSet I, Exponents a, Exponents b, LaurentExponents v) {
  return {I, std::move(a), std::move(b), std::move(v)};
}

}  // namespace

TEST_CASE("to_mixed examples") {
  MixedElement expected(1);
  expected.add_term(key(IndexSet(), {0}, {0}, {-1}), 1);
  expected.add_term(key(IndexSet(1), {0}, {1}, {0}), -1);
  expected.add_term(key(IndexSet(1), {1}, {2}, {0}), -1);
  CHECK(to_mixed(x().pow(2) * y().pow(3)) == expected);

  MixedElement lx(1);
  lx.add_term(key(IndexSet(), {0}, {0}, {1}), 1);
  CHECK(to_mixed(x()) == lx);

  MixedElement xy2(2);
  xy2.add_term(key(IndexSet(), {0, 0}, {0, 0}, {0, 0}), 1);
  xy2.add_term(key(IndexSet(1), {0, 0}, {0, 0}, {0, 0}), -1);
  CHECK(to_mixed(x(0, 2) * y(0, 2)) == xy2);
}

TEST_CASE("from_mixed examples") {
  MixedElement e00(1);
  e00.add_term(key(IndexSet(1), {0}, {0}, {0}), 1);
  CHECK(from_mixed(e00) == one() - x() * y());

  MixedElement v(1);
  v.add_term(key(IndexSet(), {0}, {0}, {-2}), 1);
  CHECK(from_mixed(v) == y().pow(2));

  MixedElement t(2);
  t.add_term(key(IndexSet(1), {1, 0}, {1, 0}, {0, 1}), 1);
  const Element expected = E(1, 1, 0, 2) * x(1, 2);
  CHECK(from_mixed(t) == expected);
  CHECK(expected == x(0, 2) * y(0, 2) * x(1, 2) - x(0, 2).pow(2) * y(0, 2).pow(2) * x(1, 2));
}

TEST_CASE("component examples") {
  PatternF laurent{{true}}, matrix{{false}};
  CHECK(component(x() * y(), laurent) == one());
  CHECK(component(x() * y(), matrix) == -E(0, 0));
  CHECK(component(x(), matrix).is_zero());
  CHECK(component(x().pow(2) * y().pow(3), laurent) == y());
}

TEST_CASE("ideal membership examples") {
  CHECK(in_ideal_pI(E(0, 0, 1, 2), IndexSet::single(1)));
  CHECK_FALSE(in_ideal_pI(x(0, 2), IndexSet::single(0)));
  const Element a = x(0, 2) * y(0, 2) * x(1, 2);
  CHECK(in_ideal_pI(commutator(x(0, 2), a), IndexSet::single(0)));
  CHECK_THROWS_AS(in_ideal_pI(x(), IndexSet()), Error);

  CHECK(in_Fn(E(0, 0, 0, 2) * E(0, 0, 1, 2)));
  CHECK_FALSE(in_Fn(x(0, 2) * E(0, 0, 1, 2)));
  const Element c = one(2) - x(0, 2) * y(0, 2) * x(1, 2) * y(1, 2);
  CHECK(in_Fn(c) == snw::testing::in_Fn_by_action(c));
  CHECK_FALSE(in_Fn(c));
}

TEST_CASE("laurent_image examples") {
  CHECK(laurent_image(x() * y()) == LaurentPoly::monomial({0}));
  CHECK(laurent_image(E(0, 0, 0, 2) * E(1, 0, 1, 2) * x(0, 2)).is_zero());
  CHECK(laurent_image(y(0, 2).pow(2) * x(1, 2)) == LaurentPoly::monomial({-2, 1}));
}

TEST_CASE("index_s1 examples") {
  CHECK(index_s1(x().pow(3)) == -3);
  CHECK(index_s1(y() + E(5, 3)) == 1);
  CHECK(snw::testing::index_by_linear_algebra(y() + E(5, 3)) == 1);
  CHECK(index_s1(one() + E(0, 0)) == 0);
  CHECK_THROWS_AS(index_s1(E(0, 0)), Error);
  CHECK_THROWS_AS(index_s1(x(0, 2)), Error);
}

TEST_CASE("volume examples") {
  CHECK(volume(x().pow(2) * y().pow(3)) == 3);
  CHECK(volume(Element(1)) == 0);
  const Element a = x(0, 2) + E(0, 1, 1, 2);
  CHECK(volume(apply_permutation(Permutation::transposition(2, 0, 1), a)) == volume(a));
}

TEST_CASE("property: round trip and direct sum") {
  Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = rng.uniform(1, 3);
    const Element a = rng.element(n, 4, 4);
    const MixedElement m = to_mixed(a);
    CHECK(from_mixed(m) == a);
    Element sum(n);
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits)
      sum += component(a, PatternF::from_matrix_part(n, IndexSet(bits)));
    CHECK(sum == a);
  }
}

TEST_CASE("property: laurent_image is a ring homomorphism with kernel a_n") {
  Rng rng(32);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = rng.uniform(1, 3);
    const Element a = rng.element(n, 3, 3), b = rng.element(n, 3, 3);
    CHECK(laurent_image(a * b) == laurent_image(a) * laurent_image(b));
    CHECK(laurent_image(a + b) == laurent_image(a) + laurent_image(b));
    CHECK(laurent_image(a).is_zero() == in_an(a));
    const Element c = a - component(a, PatternF::from_matrix_part(n, IndexSet()));
    CHECK(in_an(c));
  }
}

TEST_CASE("property: sums of s p t with p in p_i lie in p_I") {
  Rng rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = rng.uniform(1, 3);
    const IndexSet I = rng.nonempty_subset(n);
    Element sum(n);
    for (auto i : I.elements()) {
      const Element p = Element::E(n, i, rng.uniform(0, 2), rng.uniform(0, 2)) * rng.element(n, 2, 2);
      sum += rng.element(n, 2, 2) * p * rng.element(n, 2, 2);
    }
    CHECK(in_ideal_pI(sum, I));
    CHECK(in_Fn(sum) == snw::testing::in_Fn_by_action(sum));
  }
}

TEST_CASE("property: index additivity and oracle agreement") {
  Rng rng(34);
  int checked = 0;
  while (checked < 60) {
    const Element a = rng.element(1, 3, 3), b = rng.element(1, 3, 3);
    if (in_Fn(a) || in_Fn(b) || in_Fn(a * b)) continue;
    CHECK(index_s1(a * b) == index_s1(a) + index_s1(b));
    CHECK(index_s1(a) == snw::testing::index_by_linear_algebra(a));
    ++checked;
  }
}

TEST_CASE("property: index invariant under G_1'") {
  Rng rng(35);
  for (int trial = 0; trial < 30; ++trial) {
    const Element a = rng.element(1, 3, 3);
    if (in_Fn(a)) continue;
    const GroupElement g = rng.group(1, 2, 2);
    CHECK(index_s1(apply(g, a)) == index_s1(a));
  }
}
