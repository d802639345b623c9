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

#include "milnor/subset.hpp"

#include <algorithm>

namespace milnor {

Subset subset_of(std::initializer_list<int> elements) {
  Subset s = 0;
  for (int e : elements) s |= element_bit(e);
  return s;
}

Subset subset_from_elements(const std::vector<int>& elements) {
  Subset s = 0;
  for (int e : elements) s |= element_bit(e);
  return s;
}

std::vector<int> elements_of(Subset s) {
  std::vector<int> out;
  out.reserve(cardinality(s));
  while (s != 0) {
    out.push_back(std::countr_zero(s) + 1);
    s &= s - 1;
  }
  return out;
}

bool subset_lex_less(Subset a, Subset b) {
  const auto ea = elements_of(a);
  const auto eb = elements_of(b);
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

std::string format_subset(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int e : elements_of(s)) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

}  // namespace milnor
