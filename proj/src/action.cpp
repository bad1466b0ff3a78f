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

#include "snw/action.hpp"

#include <algorithm>
#include <map>

#include "snw/errors.hpp"

namespace snw {

Polynomial act(const Element& a, const Polynomial& p) {
  require_same_dim(a.dim(), p.dim(), "act");
  const std::size_t n = a.dim();
  Polynomial r(n);
  for (const auto& [m, c] : a.terms()) {
    for (const auto& [g, d] : p.terms()) {
      Exponents out(n);
      bool zero = false;
      for (std::size_t i = 0; i < n && !zero; ++i) {
        if (g[i] < m.beta[i]) zero = true;
        else out[i] = m.alpha[i] + g[i] - m.beta[i];
      }
      if (!zero) r.add_term(out, c * d);
    }
  }
  return r;
}

std::vector<Exponents> cube_basis(std::size_t n, std::size_t M) {
  std::vector<Exponents> out;
  Exponents e(n, 0);
  while (true) {
    out.push_back(e);
    std::size_t i = 0;
    while (i < n && e[i] == M) e[i++] = 0;
    if (i == n) break;
    ++e[i];
  }
  std::sort(out.begin(), out.end(), ExponentOrder{});
  return out;
}

WindowMatrix matrix_on_window(const Element& a, std::size_t M) {
  WindowMatrix w;
  w.bound = M;
  w.basis = cube_basis(a.dim(), M);
  const std::size_t N = w.basis.size();
  std::map<Exponents, std::size_t> position;
  for (std::size_t i = 0; i < N; ++i) position[w.basis[i]] = i;
  w.matrix = Matrix(N, N);
  for (std::size_t col = 0; col < N; ++col) {
    Polynomial image = act(a, Polynomial::monomial(w.basis[col]));
    for (const auto& [g, c] : image.terms()) {
      auto it = position.find(g);
      if (it == position.end()) {
        w.invariant = false;
        continue;
      }
      w.matrix(it->second, col) = c;
    }
  }
  return w;
}

std::vector<Polynomial> kernel_on_window(const std::vector<Element>& rows, std::size_t M) {
  if (rows.empty()) throw Error(ErrorCode::InvalidArgument, "kernel_on_window needs at least one element");
  const std::size_t n = rows.front().dim();
  for (const auto& r : rows) require_same_dim(r.dim(), n, "kernel_on_window");
  const auto basis = cube_basis(n, M);
  std::map<std::pair<std::size_t, Exponents>, std::size_t> row_index;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> cols(basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    for (std::size_t k = 0; k < rows.size(); ++k) {
      Polynomial image = act(rows[k], Polynomial::monomial(basis[col]));
      for (const auto& [g, c] : image.terms()) {
        auto [it, inserted] = row_index.try_emplace({k, g}, row_index.size());
        cols[col].emplace_back(it->second, c);
      }
    }
  }
  Matrix m(row_index.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col)
    for (const auto& [r, c] : cols[col]) m(r, col) = c;
  std::vector<Polynomial> out;
  if (row_index.empty()) {
    for (const auto& b : basis) out.push_back(Polynomial::monomial(b));
    return out;
  }
  for (const auto& v : nullspace(m)) {
    Polynomial p(n);
    for (std::size_t i = 0; i < basis.size(); ++i) p.add_term(basis[i], v[i]);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace snw
