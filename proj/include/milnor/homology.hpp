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


// Order complex of the proper nonempty flats and its rational homology.

#ifndef MILNOR_HOMOLOGY_HPP_
#define MILNOR_HOMOLOGY_HPP_

#include <optional>
#include <vector>

#include "milnor/matroid.hpp"

namespace milnor {

// Simplices are ascending lists of vertex indices.
using Simplex = std::vector<int>;

struct SimplicialComplex {
  std::vector<Subset> vertices;                 // one flat per vertex
  std::vector<std::vector<Simplex>> simplices;  // simplices[k]: k-dimensional, sorted
  std::vector<Simplex> facets;

  // -1 for the empty complex.
  int dimension() const { return static_cast<int>(simplices.size()) - 1; }
  std::size_t face_count(int k) const;
};

// Chains of proper nonempty flats, vertices ordered as in flats().
// Throws kHasLoop.
SimplicialComplex order_complex(const Matroid& m);

struct BettiNumbers {
  // reduced[k + 1] is the reduced Betti number in degree k, k >= -1.
  std::vector<long long> reduced;

  long long operator[](int k) const;
  // Sum of (-1)^k b_k.
  long long euler_characteristic() const;
};

// Exact ranks of the boundary maps over the rationals.
BettiNumbers betti(const SimplicialComplex& k);

struct WedgeReport {
  BettiNumbers betti;
  long long mobius = 0;
  int sphere_dimension = 0;  // d - 2
  bool passed = false;
};

// Throws kHasLoop, kParallelPairPresent.
WedgeReport wedge_check(const Matroid& m);

// An element attaining max w whose parallel class in M_w is a singleton.
// Throws kHypothesisViolation if M has loops or parallel pairs, or w is not
// in Trop(M) with coordinate sum 0.
std::optional<int> irreducibility_witness(const Matroid& m, const WeightVector& w);

}  // namespace milnor

#endif  // MILNOR_HOMOLOGY_HPP_
