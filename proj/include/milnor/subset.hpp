// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MILNOR_SUBSET_HPP_
#define MILNOR_SUBSET_HPP_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace milnor {

// Subsets of the ground set {1..n} as bitmasks; element i lives in bit i-1.
using Subset = std::uint32_t;

inline constexpr int kMaxGroundSet = 20;

constexpr Subset element_bit(int element) { return Subset{1} << (element - 1); }

constexpr bool contains(Subset s, int element) {
  return (s & element_bit(element)) != 0;
}

constexpr int cardinality(Subset s) { return std::popcount(s); }

constexpr Subset full_set(int n) {
  return n >= 32 ? ~Subset{0} : (Subset{1} << n) - 1;
}

Subset subset_of(std::initializer_list<int> elements);
Subset subset_from_elements(const std::vector<int>& elements);

// Ascending 1-based element list.
std::vector<int> elements_of(Subset s);

// Lexicographic comparison of the ascending element lists.
bool subset_lex_less(Subset a, Subset b);

// "{1,2,3}"
std::string format_subset(Subset s);

}  // namespace milnor

#endif  // MILNOR_SUBSET_HPP_
