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


// The fine fan on Trop(M) ∩ (1,..,1)^perp: one cone per flag of proper
// nonempty flats, plus the cone-local algebra (monomial shifts, face
// restrictions, orbit coordinates).

#ifndef MILNOR_FAN_HPP_
#define MILNOR_FAN_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "milnor/lattice.hpp"
#include "milnor/laurent.hpp"
#include "milnor/matroid.hpp"

namespace milnor {

struct FlagCone {
  int n = 0;
  std::vector<Subset> flag;     // F_1 ⊂ F_2 ⊂ ... (strict)
  std::vector<IntVector> rays;  // n e_F - |F| (1,..,1) per flat

  int dim() const { return static_cast<int>(flag.size()); }
  bool operator==(const FlagCone& o) const { return n == o.n && flag == o.flag; }
};

FlagCone make_cone(int n, std::vector<Subset> flag);
IntVector flat_ray(int n, Subset flat);

struct BergmanFan {
  Matroid matroid;
  std::vector<FlagCone> cones;  // by dimension, then lexicographic flag
  int dimension = 0;            // d - 1
};

// Throws kHasLoop.
BergmanFan fine_fan(const Matroid& m);

// Sum of the rays.
WeightVector interior_point(const FlagCone& cone);

// All subflags, the zero cone and the cone itself included.
std::vector<FlagCone> faces(const FlagCone& cone);

// Greedy extension of an independent set through F_1, F_2, ..., then the
// ground set.  The result is checked against M_w at the interior points of
// the cone and of all faces; kNoCommonBasis if that fails.
Subset cone_basis(const Matroid& m, const FlagCone& cone);

// Initial forms of every form and of x_1...x_n - 1 agree at w_sigma and at
// `samples` random positive combinations of the rays.
bool relint_constancy_check(const FlagCone& cone, const std::vector<LaurentPoly>& forms,
                            std::uint64_t seed, int samples = 3);

// u = -v for the lexicographically least exponent v of init_{w_sigma} f.
Exponent monomial_shift(const LaurentPoly& f, const FlagCone& cone);

// Terms of x^u f pairing to zero with every ray of the cone.
LaurentPoly face_projection(const LaurentPoly& shifted, const FlagCone& cone);

// Every exponent of x^u f pairs >= 0 with the rays of tau, and the terms
// pairing to zero form x^u init_{w_tau} f.
bool face_restriction_check(const LaurentPoly& f, const Exponent& u, const FlagCone& tau);

// Generators of the stratum on the orbit of sigma, written in the
// coordinates of a Z-basis of sigma^perp ∩ Z^n.
std::vector<LaurentPoly> orbit_generators(const std::vector<LaurentPoly>& gens, const FlagCone& cone);

// The cone whose relative interior contains w, or nothing when w is outside
// the support.  Requires coordinate sum 0.
std::optional<FlagCone> locate_cone(const Matroid& m, const WeightVector& w);

// Index of the primitive ray generators in the saturated span; 1 iff the
// cone is unimodular.
Integer unimodularity_index(const FlagCone& cone);

}  // namespace milnor

#endif  // MILNOR_FAN_HPP_
