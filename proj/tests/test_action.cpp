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
#include "snw/group.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace snw;
using snw::testing::Rng;

namespace {

Polynomial xp(std::uint32_t k) { return Polynomial::monomial({k}); }

}  // namespace

TEST_CASE("act examples") {
  const Element x = Element::x(1, 0), y = Element::y(1, 0);
  CHECK(act(y, xp(0)).is_zero());
  CHECK(act(Element::E(1, 0, 2, 5), xp(5)) == xp(2));
  CHECK(act(Element::E(1, 0, 2, 5), xp(4)).is_zero());
  for (std::uint32_t k = 1; k < 6; ++k) {
    CHECK(act(x * y, xp(k)) == xp(k));
    CHECK(act(x * y, xp(k)) == act(x, act(y, xp(k))));
  }
  CHECK(act(x * y, xp(0)).is_zero());
}

TEST_CASE("matrix_on_window examples") {
  const WindowMatrix id = matrix_on_window(Element::constant(2, 1), 2);
  CHECK(id.matrix == Matrix::identity(9));
  CHECK(id.invariant);

  const WindowMatrix w = matrix_on_window(Element::constant(1, 1) + Element::E(1, 0, 0, 1), 1);
  Matrix expected(2, 2);
  expected(0, 0) = 1; expected(0, 1) = 1; expected(1, 1) = 1;
  CHECK(w.matrix == expected);
  CHECK(w.invariant);

  const WindowMatrix shift = matrix_on_window(Element::x(1, 0), 1);
  Matrix s(2, 2);
  s(1, 0) = 1;
  CHECK(shift.matrix == s);
  CHECK_FALSE(shift.invariant);
}

TEST_CASE("kernel_on_window examples") {
  auto k1 = kernel_on_window({Element::y(1, 0)}, 3);
  REQUIRE(k1.size() == 1);
  CHECK(k1[0] == Polynomial::constant(1, 1));

  auto k2 = kernel_on_window({Element::y(2, 0), Element::y(2, 1)}, 2);
  REQUIRE(k2.size() == 1);
  CHECK(k2[0] == Polynomial::constant(2, 1));

  // sigma = omega_u for u = 1 + E_01; the kernel of sigma(y) is u(K 1).
  const MonoidElement u(Element::constant(1, 1) + Element::E(1, 0, 0, 1));
  const Element sy = apply(make_inner(u), Element::y(1, 0));
  auto k3 = kernel_on_window({sy}, 4);
  CHECK(k3.size() == 1);
  const WindowMatrix w = matrix_on_window(sy, 4);
  CHECK(nullspace(w.matrix).size() == 1);
}

TEST_CASE("property: action is a homomorphism") {
  Rng rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = rng.uniform(1, 3);
    const Element a = rng.element(n, 3, 3), b = rng.element(n, 3, 3);
    Polynomial p(n);
    for (int t = 0; t < 3; ++t) {
      Exponents e(n);
      for (auto& v : e) v = rng.uniform(0, 5);
      p.add_term(e, rng.scalar());
    }
    CHECK(act(a * b, p) == act(a, act(b, p)));
  }
}

TEST_CASE("property: faithfulness within C_{s+1}") {
  Rng rng(42);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = rng.uniform(1, 3);
    const Element a = rng.nonzero_element(n, 3, 3);
    const auto s = mixed_support_size(a);
    bool nonzero = false;
    for (const auto& alpha : cube_basis(n, s + 1)) {
      if (!act(a, Polynomial::monomial(alpha)).is_zero()) {
        nonzero = true;
        break;
      }
    }
    CHECK(nonzero);
  }
}

TEST_CASE("property: in_Fn agrees with annihilation beyond the size bound") {
  Rng rng(43);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = rng.uniform(1, 2);
    Element a = rng.element(n, 2, 2);
    if (rng.coin()) {
      const Exponents z(n, 0);
      a = a * Element::E(n, IndexSet::full(n), z, z) * rng.element(n, 2, 2);
    }
    CHECK(in_Fn(a) == snw::testing::in_Fn_by_action(a));
  }
}
