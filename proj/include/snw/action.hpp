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

#include <vector>

#include "snw/core.hpp"
#include "snw/linalg.hpp"
#include "snw/polynomial.hpp"

namespace snw {

Polynomial act(const Element& a, const Polynomial& p);

/// Exponents of C_M = [0..M]^n in ExponentOrder.
std::vector<Exponents> cube_basis(std::size_t n, std::size_t M);

struct WindowMatrix {
  std::size_t bound = 0;
  std::vector<Exponents> basis;
  /// entry (row gamma, col alpha) = coefficient of x^gamma in a * x^alpha.
  Matrix matrix;
  /// False when a(C_M) is not contained in C_M; the matrix is then the
  /// projection onto C_M.
  bool invariant = true;
};

WindowMatrix matrix_on_window(const Element& a, std::size_t M);

/// Basis of {p in span C_M : r * p = 0 for every r in rows}.
std::vector<Polynomial> kernel_on_window(const std::vector<Element>& rows, std::size_t M);

}  // namespace snw
