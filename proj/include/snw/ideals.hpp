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

#include <cstdint>
#include <utility>
#include <vector>

#include "snw/core.hpp"
#include "snw/group.hpp"

namespace snw {

/// Idempotent ideal given by its minimal primes p_I, an antichain of
/// nonempty subsets.
class IdealDescriptor {
 public:
  /// Throws InvalidDescriptor unless the sets form a nonempty antichain of
  /// nonempty subsets of {0..n-1}.
  IdealDescriptor(std::size_t dim, std::vector<IndexSet> min_primes);
  /// b_s: all subsets of size s.
  static IdealDescriptor b(std::size_t dim, int s);

  std::size_t dim() const { return dim_; }
  /// Sorted in SubsetOrder.
  const std::vector<IndexSet>& min_primes() const { return primes_; }
  std::string to_string() const;

  friend bool operator==(const IdealDescriptor&, const IdealDescriptor&) = default;

 private:
  std::size_t dim_;
  std::vector<IndexSet> primes_;
};

bool ideal_member(const Element& a, const IdealDescriptor& d);

struct SubgroupReport {
  std::uint64_t order = 0;
  std::vector<Permutation> generators;
};

struct StabilizerOptions {
  std::size_t max_dim = 8;
};

/// Permutations of {0..n-1} mapping the set of minimal primes to itself.
std::vector<Permutation> stabilizer_elements(const IdealDescriptor& d, const StabilizerOptions& o = {});
SubgroupReport stabilizer_sym(const IdealDescriptor& d, const StabilizerOptions& o = {});
/// Order of the group generated by gens (breadth-first closure).
std::uint64_t closure_order(const std::vector<Permutation>& gens, std::size_t n);

struct GenericStructure {
  std::size_t m = 0;
  /// (h_i, n_i), h_i increasing.
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  std::uint64_t predicted_order = 0;
};

/// Throws NotGeneric when two minimal primes share an index.
GenericStructure generic_structure(const IdealDescriptor& d);
std::uint64_t stabilizer_index(const IdealDescriptor& d, const StabilizerOptions& o = {});

std::uint64_t factorial(std::size_t n);

}  // namespace snw
