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


// Point counts over prime fields: brute-force torus enumeration, Milnor
// fiber and complement counts, stratum tables and the mu_n check.

#ifndef MILNOR_COUNTING_HPP_
#define MILNOR_COUNTING_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "milnor/arrangement.hpp"
#include "milnor/fan.hpp"
#include "milnor/laurent.hpp"
#include "milnor/matrix.hpp"

namespace milnor {

struct CountConfig {
  std::uint64_t budget = 100'000'000;  // maximal number of torus points visited
  int threads = 0;                     // 0: hardware concurrency
  bool allow_bad_characteristic = false;
};

// Points of (F_p^*)^rank, each coordinate in [1, p).
using TorusPoint = std::vector<std::uint32_t>;

// Number of points of (F_p^*)^rank where all generators vanish.  Generators
// are scaled to primitive integral form before reduction mod p.
// Throws kBadPrime, kBudgetExceeded.
std::uint64_t count_solutions(const std::vector<LaurentPoly>& gens, std::uint64_t p, int rank,
                              const CountConfig& config = {});

// The solutions themselves, sorted.
std::vector<TorusPoint> solution_set(const std::vector<LaurentPoly>& gens, std::uint64_t p, int rank,
                                     const CountConfig& config = {});

enum class CountMethod { kAuto, kNaive, kEliminated };

// |F_A(F_p)|.  The eliminated method enumerates (F_p^*)^d through a basis
// whose Plücker coordinate is a p-unit; it needs a good prime.
// Throws kBadPrime, kBadCharacteristic (p | n, unless allowed), kBudgetExceeded.
std::uint64_t milnor_count(const Realization& a, std::uint64_t p, const CountConfig& config = {},
                           CountMethod method = CountMethod::kAuto,
                           std::optional<Subset> basis = std::nullopt);

// Same count for a matrix over F_p, eliminating through its pivot columns.
std::uint64_t milnor_count_mod_p(const Matrix<Zp>& a, const CountConfig& config = {});

// Solutions of the Milnor fiber in (F_p^*)^n.
std::vector<TorusPoint> milnor_points(const Realization& a, std::uint64_t p, const CountConfig& config = {});

struct ComplementCount {
  std::uint64_t count = 0;
  Integer chi_value;
  bool good_prime = true;
  bool verdict = false;  // count == chi_M(p)
};

ComplementCount complement_count(const Realization& a, std::uint64_t p, const CountConfig& config = {});

struct StratumRow {
  FlagCone cone;
  WeightVector w;
  Subset basis = 0;
  std::uint64_t raw = 0;       // |F_{A_w}(F_p)|
  bool divisible = false;      // (p-1)^dim | raw
  std::uint64_t divided = 0;   // raw / (p-1)^dim
  std::uint64_t orbit = 0;     // count of the orbit generators
  bool cross_check = false;    // divided == orbit
};

struct PointCountReport {
  std::uint64_t p = 0;
  std::uint64_t total = 0;  // Milnor count
  bool good_prime = true;
  std::vector<StratumRow> strata;
  Integer compactification_total;  // sum of divided counts
  bool divisibility_ok = false;
  bool cross_check_ok = false;
  bool identity_ok = false;

  bool passed() const { return divisibility_ok && cross_check_ok && identity_ok; }
};

// Builds the table without judging it.
PointCountReport build_stratum_table(const Realization& a, const BergmanFan& fan, std::uint64_t p,
                                     const CountConfig& config = {});

// As above; throws kDivisibilityFailed or kCrossCheckFailed naming the cone.
PointCountReport stratum_table(const Realization& a, const BergmanFan& fan, std::uint64_t p,
                               const CountConfig& config = {});

struct MuDivisibility {
  std::uint64_t count = 0;
  int n = 0;
  bool divisible = false;
  bool free_orbits = false;  // every mu_n orbit on the solutions has n points
  std::uint64_t orbits = 0;
  bool passed() const { return divisible && free_orbits; }
};

// Throws kWrongResidue unless p = 1 mod n.
MuDivisibility mu_action_divisibility(const Realization& a, std::uint64_t p, const CountConfig& config = {});

struct InitialDegenerationCheck {
  Subset basis = 0;
  bool in_tropical_variety = false;  // w in Trop(M) with coordinate sum 0
  std::size_t initial_solutions = 0;   // init_w of the Milnor generators for B
  std::size_t circuit_solutions = 0;   // init_w of all circuit forms and the torus equation
  std::size_t degenerate_solutions = 0;  // Milnor generators of A_w
  bool sets_equal = false;
  // In Trop(M) ∩ 1^perp the three sets coincide; outside it the circuit
  // side and the A_w side may be compared only for emptiness.
  bool passed = false;
};

// Compares solution sets over (F_p^*)^n of the initial Milnor generators and
// of the generators of A_w, with B = greedy_basis(M, w).
InitialDegenerationCheck initial_degeneration_check(const Realization& a, const WeightVector& w,
                                                    std::uint64_t p, const CountConfig& config = {});

}  // namespace milnor

#endif  // MILNOR_COUNTING_HPP_
