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

#include "snw/core.hpp"

#include <algorithm>
#include <numeric>

#include "snw/errors.hpp"

namespace snw {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionError: return "DimensionError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InFError: return "InFError";
    case ErrorCode::SupportError: return "SupportError";
    case ErrorCode::SingularFactor: return "SingularFactor";
    case ErrorCode::NotUnit: return "NotUnit";
    case ErrorCode::NotRepresentable: return "NotRepresentable";
    case ErrorCode::NotPolynomial: return "NotPolynomial";
    case ErrorCode::NotLaurentMonomial: return "NotLaurentMonomial";
    case ErrorCode::NotInIdeal: return "NotInIdeal";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::NotOneDimensional: return "NotOneDimensional";
    case ErrorCode::WindowCapExceeded: return "WindowCapExceeded";
    case ErrorCode::InvalidEndo: return "InvalidEndo";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::NotGeneric: return "NotGeneric";
    case ErrorCode::InvalidDescriptor: return "InvalidDescriptor";
    case ErrorCode::NameError: return "NameError";
    case ErrorCode::TypeError: return "TypeError";
  }
  return "Error";
}

Scalar parse_scalar(const std::string& text) {
  Scalar q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw Error(ErrorCode::InvalidArgument, "not a rational literal: " + text);
  }
  if (q.get_den() == 0) {
    throw Error(ErrorCode::InvalidArgument, "zero denominator: " + text);
  }
  q.canonicalize();
  return q;
}

// ---- IndexSet ---------------------------------------------------------------

IndexSet IndexSet::of(const std::vector<std::size_t>& indices) {
  std::uint32_t bits = 0;
  for (std::size_t i : indices) {
    if (i >= kMaxDim) throw Error(ErrorCode::DimensionError, "index out of range");
    bits |= 1u << i;
  }
  return IndexSet(bits);
}

std::vector<std::size_t> IndexSet::elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < kMaxDim; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string IndexSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (std::size_t i : elements()) {
    if (!first) s += ",";
    s += std::to_string(i + 1);
    first = false;
  }
  return s + "}";
}

bool SubsetOrder::operator()(IndexSet a, IndexSet b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  auto ea = a.elements();
  auto eb = b.elements();
  return ea < eb;
}

std::vector<IndexSet> subsets_of_size(std::size_t n, int size) {
  std::vector<IndexSet> out;
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits)
    if (std::popcount(bits) == size) out.emplace_back(bits);
  std::sort(out.begin(), out.end(), SubsetOrder{});
  return out;
}

// ---- Monomial ---------------------------------------------------------------

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (auto a : alpha) d += a;
  for (auto b : beta) d += b;
  return d;
}

bool DegLex::operator()(const Monomial& a, const Monomial& b) const {
  auto da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  if (a.alpha != b.alpha) return a.alpha < b.alpha;
  return a.beta < b.beta;
}

void require_same_dim(std::size_t a, std::size_t b, const char* op) {
  if (a != b) {
    throw Error(ErrorCode::DimensionError,
                std::string(op) + ": dimension mismatch (" + std::to_string(a) +
                    " vs " + std::to_string(b) + ")");
  }
}

Monomial monomial_mul(const Monomial& m1, const Monomial& m2) {
  require_same_dim(m1.dim(), m2.dim(), "monomial_mul");
  const std::size_t n = m1.dim();
  Monomial r{Exponents(n), Exponents(n)};
  for (std::size_t i = 0; i < n; ++i) {
    const auto b = m1.beta[i], c = m2.alpha[i];
    r.alpha[i] = m1.alpha[i] + (c > b ? c - b : 0);
    r.beta[i] = m2.beta[i] + (b > c ? b - c : 0);
  }
  return r;
}

// ---- Element ----------------------------------------------------------------

Element::Element(std::size_t dim) : dim_(dim) {
  if (dim == 0 || dim > kMaxDim) {
    throw Error(ErrorCode::DimensionError,
                "dimension must be in 1.." + std::to_string(kMaxDim));
  }
}

Element Element::constant(std::size_t dim, const Scalar& c) {
  Element e(dim);
  e.add_term(Monomial::one(dim), c);
  return e;
}

Element Element::from_monomial(const Monomial& m, const Scalar& c) {
  Element e(m.dim());
  e.add_term(m, c);
  return e;
}

static void require_index(std::size_t dim, std::size_t i) {
  if (i >= dim) {
    throw Error(ErrorCode::DimensionError, "generator index " + std::to_string(i + 1) +
                                               " exceeds dimension " + std::to_string(dim));
  }
}

Element Element::x(std::size_t dim, std::size_t i) {
  require_index(dim, i);
  Monomial m = Monomial::one(dim);
  m.alpha[i] = 1;
  return from_monomial(m);
}

Element Element::y(std::size_t dim, std::size_t i) {
  require_index(dim, i);
  Monomial m = Monomial::one(dim);
  m.beta[i] = 1;
  return from_monomial(m);
}

Element Element::E(std::size_t dim, std::size_t i, std::uint32_t k, std::uint32_t l) {
  require_index(dim, i);
  Exponents a(dim, 0), b(dim, 0);
  a[i] = k;
  b[i] = l;
  return E(dim, IndexSet::single(i), a, b);
}

Element Element::E(std::size_t dim, IndexSet I, const Exponents& alpha,
                   const Exponents& beta) {
  require_same_dim(alpha.size(), dim, "E");
  require_same_dim(beta.size(), dim, "E");
  if (!I.subset_of(IndexSet::full(dim))) {
    throw Error(ErrorCode::DimensionError, "index set exceeds dimension");
  }
  // Product over i in I of (x^a y^b - x^{a+1} y^{b+1}); the factors commute.
  const auto idx = I.elements();
  Element e(dim);
  for (std::uint32_t choice = 0; choice < (1u << idx.size()); ++choice) {
    Monomial m = Monomial::one(dim);
    int sign = 1;
    for (std::size_t t = 0; t < idx.size(); ++t) {
      const std::size_t i = idx[t];
      const std::uint32_t shift = (choice >> t) & 1u;
      m.alpha[i] = alpha[i] + shift;
      m.beta[i] = beta[i] + shift;
      if (shift) sign = -sign;
    }
    e.add_term(m, sign);
  }
  return e;
}

Scalar Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Element::add_term(const Monomial& m, const Scalar& c) {
  require_same_dim(m.dim(), dim_, "add_term");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Element Element::operator-() const {
  Element r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Element& Element::operator+=(const Element& b) {
  require_same_dim(dim_, b.dim_, "add");
  for (const auto& [m, c] : b.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& b) {
  require_same_dim(dim_, b.dim_, "sub");
  for (const auto& [m, c] : b.terms_) add_term(m, -c);
  return *this;
}

Element& Element::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [m, v] : terms_) v *= c;
  }
  return *this;
}

Element operator*(const Element& a, const Element& b) {
  require_same_dim(a.dim_, b.dim_, "mul");
  Element r(a.dim_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(monomial_mul(ma, mb), ca * cb);
  return r;
}

Element Element::pow(unsigned e) const {
  Element result = constant(dim_, 1);
  Element base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Element involution(const Element& a) {
  Element r(a.dim());
  for (const auto& [m, c] : a.terms()) r.add_term(Monomial{m.beta, m.alpha}, c);
  return r;
}

Element commutator(const Element& a, const Element& b) { return a * b - b * a; }

Element embed(const Element& a, std::size_t new_dim,
              const std::vector<std::size_t>& positions) {
  require_same_dim(positions.size(), a.dim(), "embed");
  Element r(new_dim);
  for (const auto& [m, c] : a.terms()) {
    Monomial t = Monomial::one(new_dim);
    for (std::size_t j = 0; j < positions.size(); ++j) {
      if (positions[j] >= new_dim) throw Error(ErrorCode::DimensionError, "embed position");
      t.alpha[positions[j]] = m.alpha[j];
      t.beta[positions[j]] = m.beta[j];
    }
    r.add_term(t, c);
  }
  return r;
}

}  // namespace snw
