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

// Integer lattice utilities for cones in Z^n.

#ifndef MILNOR_LATTICE_HPP_
#define MILNOR_LATTICE_HPP_

#include <optional>
#include <vector>

#include "milnor/exact.hpp"

namespace milnor {

using IntVector = std::vector<Integer>;

Integer dot(const IntVector& a, const IntVector& b);

// Z-basis of {x in Z^n : r . x = 0 for every row r}.  Computed by unimodular
// column operations, so the result is a saturated lattice.
std::vector<IntVector> integer_kernel(const std::vector<IntVector>& rows, int n);

struct LatticeSplit {
  std::vector<IntVector> span_basis;  // saturation of span(rays) in Z^n
  std::vector<IntVector> perp_basis;  // {u in Z^n : u . r = 0 for all rays}
  Integer index;                      // [Z^n : span_basis + perp_basis]
};

LatticeSplit lattice_complement(const std::vector<IntVector>& rays, int n);

// Integer coordinates of v in the given basis, if v lies in its Z-span.
std::optional<IntVector> lattice_coordinates(const std::vector<IntVector>& basis,
                                             const IntVector& v);

// v divided by the gcd of its entries.
IntVector primitive(const IntVector& v);

// Index of the lattice spanned by the primitive generators of the rays inside
// the saturation of their span; 1 means the cone is unimodular.
Integer cone_lattice_index(const std::vector<IntVector>& rays, int n);

}  // namespace milnor

#endif  // MILNOR_LATTICE_HPP_
