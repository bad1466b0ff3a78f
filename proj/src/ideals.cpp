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

#include "snw/ideals.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "snw/decomp.hpp"
#include "snw/errors.hpp"

namespace snw {

IdealDescriptor::IdealDescriptor(std::size_t dim, std::vector<IndexSet> min_primes)
    : dim_(dim), primes_(std::move(min_primes)) {
  if (dim == 0 || dim > kMaxDim) throw Error(ErrorCode::DimensionError, "bad dimension");
  if (primes_.empty()) throw Error(ErrorCode::InvalidDescriptor, "descriptor needs at least one prime");
  std::sort(primes_.begin(), primes_.end(), SubsetOrder{});
  for (std::size_t a = 0; a < primes_.size(); ++a) {
    if (primes_[a].empty()) throw Error(ErrorCode::InvalidDescriptor, "empty index set");
    if (!primes_[a].subset_of(IndexSet::full(dim)))
      throw Error(ErrorCode::InvalidDescriptor, "index set exceeds dimension");
    for (std::size_t b = 0; b < primes_.size(); ++b) {
      if (a != b && primes_[a].subset_of(primes_[b])) {
        throw Error(ErrorCode::InvalidDescriptor,
                    primes_[a].to_string() + " and " + primes_[b].to_string() + " are comparable");
      }
    }
  }
}

IdealDescriptor IdealDescriptor::b(std::size_t dim, int s) {
  if (s < 1 || s > static_cast<int>(dim)) throw Error(ErrorCode::InvalidDescriptor, "size out of range");
  return IdealDescriptor(dim, subsets_of_size(dim, s));
}

std::string IdealDescriptor::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (i) s += ",";
    s += primes_[i].to_string();
  }
  return s + "}";
}

bool ideal_member(const Element& a, const IdealDescriptor& d) {
  require_same_dim(a.dim(), d.dim(), "ideal_member");
  const MixedElement m = to_mixed(a);
  for (IndexSet I : d.min_primes())
    for (const auto& [k, c] : m.terms())
      if (!k.I.intersects(I)) return false;
  return true;
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

namespace {

IndexSet image_of(const Permutation& p, IndexSet I) {
  std::uint32_t bits = 0;
  for (auto i : I.elements()) bits |= 1u << p(i);
  return IndexSet(bits);
}

}  // namespace

std::vector<Permutation> stabilizer_elements(const IdealDescriptor& d, const StabilizerOptions& o) {
  const std::size_t n = d.dim();
  if (n > o.max_dim)
    throw Error(ErrorCode::BoundExceeded, "stabilizer enumeration is limited to n <= " + std::to_string(o.max_dim));
  std::set<std::uint32_t> target;
  for (IndexSet I : d.min_primes()) target.insert(I.bits());
  std::vector<std::size_t> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = i;
  std::vector<Permutation> out;
  do {
    const Permutation p(img);
    bool keeps = true;
    for (IndexSet I : d.min_primes())
      if (!target.count(image_of(p, I).bits())) {
        keeps = false;
        break;
      }
    if (keeps) out.push_back(p);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

namespace {

std::set<Permutation> closure(const std::vector<Permutation>& gens, std::size_t n) {
  std::set<Permutation> seen{Permutation::identity(n)};
  std::vector<Permutation> frontier{Permutation::identity(n)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& p : frontier)
      for (const auto& g : gens) {
        Permutation q = g * p;
        if (seen.insert(q).second) next.push_back(std::move(q));
      }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

std::uint64_t closure_order(const std::vector<Permutation>& gens, std::size_t n) {
  return closure(gens, n).size();
}

SubgroupReport stabilizer_sym(const IdealDescriptor& d, const StabilizerOptions& o) {
  const auto elements = stabilizer_elements(d, o);
  SubgroupReport r;
  r.order = elements.size();
  std::set<Permutation> generated{Permutation::identity(d.dim())};
  for (const auto& p : elements) {
    if (generated.count(p)) continue;
    r.generators.push_back(p);
    generated = closure(r.generators, d.dim());
  }
  if (generated.size() != r.order) throw Error(ErrorCode::InvalidArgument, "generator closure mismatch");
  return r;
}

GenericStructure generic_structure(const IdealDescriptor& d) {
  IndexSet covered;
  std::map<std::size_t, std::size_t> by_height;
  for (IndexSet I : d.min_primes()) {
    if (I.intersects(covered)) throw Error(ErrorCode::NotGeneric, "minimal primes have overlapping supports");
    covered = IndexSet(covered.bits() | I.bits());
    ++by_height[I.size()];
  }
  GenericStructure g;
  g.m = d.dim() - covered.size();
  g.predicted_order = factorial(g.m);
  for (const auto& [h, count] : by_height) {
    g.blocks.emplace_back(h, count);
    for (std::size_t k = 0; k < count; ++k) g.predicted_order *= factorial(h);
    g.predicted_order *= factorial(count);
  }
  return g;
}

std::uint64_t stabilizer_index(const IdealDescriptor& d, const StabilizerOptions& o) {
  return factorial(d.dim()) / stabilizer_elements(d, o).size();
}

}  // namespace snw
