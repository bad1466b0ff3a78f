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

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace snw {

constexpr std::size_t kMaxDim = 32;

/// Subset of {0..n-1} as a bit mask. Indices are 0-based in the API and
/// printed 1-based.
class IndexSet {
 public:
  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint32_t bits) : bits_(bits) {}

  static IndexSet full(std::size_t n) {
    return IndexSet(n >= 32 ? ~0u : ((1u << n) - 1u));
  }
  static IndexSet single(std::size_t i) { return IndexSet(1u << i); }
  static IndexSet of(const std::vector<std::size_t>& indices);

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }
  bool subset_of(IndexSet o) const { return (bits_ & ~o.bits_) == 0; }
  bool intersects(IndexSet o) const { return (bits_ & o.bits_) != 0; }
  IndexSet complement(std::size_t n) const {
    return IndexSet(full(n).bits_ & ~bits_);
  }
  IndexSet with(std::size_t i) const { return IndexSet(bits_ | (1u << i)); }

  std::vector<std::size_t> elements() const;
  /// "{1,3}" (1-based).
  std::string to_string() const;

  friend constexpr bool operator==(IndexSet a, IndexSet b) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// Order by size, then lexicographically on the sorted element list.
struct SubsetOrder {
  bool operator()(IndexSet a, IndexSet b) const;
};

/// All subsets of {0..n-1} of the given size, in SubsetOrder.
std::vector<IndexSet> subsets_of_size(std::size_t n, int size);

}  // namespace snw
