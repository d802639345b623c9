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

#ifndef MILNOR_PLUCKER_HPP_
#define MILNOR_PLUCKER_HPP_

#include <map>
#include <vector>

#include "milnor/exact.hpp"
#include "milnor/matrix.hpp"
#include "milnor/subset.hpp"

namespace milnor {

// Plücker coordinates p_I of a rank d matrix with n columns, I ranging over
// all d-subsets.  p_I is the determinant of the columns of I in ascending
// order.
class PluckerVector {
 public:
  PluckerVector() = default;
  PluckerVector(int n, int d, std::map<Subset, Rational> coords)
      : n_(n), d_(d), coords_(std::move(coords)) {}

  int size() const { return n_; }
  int rank() const { return d_; }

  // Zero for d-subsets that were not stored.
  const Rational& operator[](Subset s) const;
  const std::map<Subset, Rational>& coordinates() const { return coords_; }

  // Subsets with nonzero coordinate.
  std::vector<Subset> support() const;

  // Same point of projective space.
  bool proportional_to(const PluckerVector& other) const;

 private:
  int n_ = 0;
  int d_ = 0;
  std::map<Subset, Rational> coords_;
};

// Throws kRankDeficient if the matrix does not have full row rank.
PluckerVector plucker(const Matrix<Rational>& m);

// Sign of the permutation sorting `sequence` (distinct entries).
int sorting_sign(std::vector<int> sequence);

// Rebuilds a d x n matrix from Plücker coordinates: identity in the columns
// of `chart` (a subset with nonzero coordinate), Cramer ratios elsewhere.
Matrix<Rational> matrix_from_plucker(const PluckerVector& coords, Subset chart);

}  // namespace milnor

#endif  // MILNOR_PLUCKER_HPP_
