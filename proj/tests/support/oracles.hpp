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


// Independent reference implementations used as test oracles, and seeded
// generators of random realizations.  Nothing here calls the library routine
// it is meant to check.

#ifndef MILNOR_TESTS_SUPPORT_ORACLES_HPP_
#define MILNOR_TESTS_SUPPORT_ORACLES_HPP_

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "milnor/arrangement.hpp"
#include "milnor/laurent.hpp"
#include "milnor/matroid.hpp"

namespace oracle {

using milnor::Subset;

// max |B ∩ S| over the bases.
int rank(const std::vector<Subset>& bases, Subset s);

bool exchange_axiom_holds(const std::vector<Subset>& bases);

std::set<Subset> circuits(int n, const std::vector<Subset>& bases);

// The unique circuit inside B ∪ {i}, by searching minimal dependent subsets.
Subset circuit_in(int n, const std::vector<Subset>& bases, Subset basis, int i);

// Whitney sum; coefficients indexed by power.
std::vector<long long> characteristic(int n, int d, const std::vector<Subset>& bases);

std::set<Subset> flats(int n, const std::vector<Subset>& bases);

// Bases by direct determinant test of every d-subset of columns.
std::vector<Subset> column_bases(const std::vector<std::vector<long long>>& columns, int d);

// Direct modular evaluation of a Laurent polynomial with modular inverses
// for negative exponents, after clearing denominators.
std::uint64_t evaluate_mod(const milnor::LaurentPoly& f, const std::vector<std::uint64_t>& x, std::uint64_t p);

// Torus points in (F_p^*)^n where every generator vanishes, by nested loops
// over x directly (no discrete logarithms).
std::vector<std::vector<std::uint32_t>> torus_solutions(const std::vector<milnor::LaurentPoly>& gens,
                                                         std::uint64_t p, int n);

// Milnor fiber points from the matrix alone: x is in the row space of A mod
// p iff rank [A; x] = d, and x_1...x_n = 1.  A must be integral.
std::uint64_t milnor_points_by_rank(const std::vector<std::vector<long long>>& rows, std::uint64_t p,
                                    bool require_product_one = true);

struct RandomRealization {
  std::vector<std::vector<long long>> rows;
  milnor::Realization realization;
};

// Full-rank d x n integer matrix with entries in [-3, 3].  Some columns are
// copied (possibly rescaled) from earlier ones or set to unit vectors so that
// parallel classes and special position show up.  No zero columns.
RandomRealization random_realization(std::mt19937_64& rng, int d, int n);

// Random (d, n) with 1 <= d <= n, 2 <= n <= max_n.
RandomRealization random_realization(std::mt19937_64& rng, int max_n);

}  // namespace oracle

#endif  // MILNOR_TESTS_SUPPORT_ORACLES_HPP_
