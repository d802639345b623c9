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

// Matroids on {1..n} given by their bases, and the combinatorics built on
// them: circuits, weight matroids, Bergman fan membership, flats, the
// characteristic polynomial.

#ifndef MILNOR_MATROID_HPP_
#define MILNOR_MATROID_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "milnor/exact.hpp"
#include "milnor/subset.hpp"

namespace milnor {

class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<Rational> w) : w_(std::move(w)) {}
  static WeightVector zero(int n) { return WeightVector(std::vector<Rational>(n, Rational(0))); }
  static WeightVector from_integers(const std::vector<long>& w);

  int size() const { return static_cast<int>(w_.size()); }
  // 1-based.
  const Rational& operator[](int element) const { return w_[element - 1]; }
  std::span<const Rational> values() const { return w_; }

  Rational weight_of(Subset s) const;
  Rational total() const;
  // Membership in (1,...,1)^perp.
  bool sums_to_zero() const { return total().is_zero(); }
  Rational max() const;

  WeightVector shifted(const Rational& c) const;
  bool operator==(const WeightVector& o) const { return w_ == o.w_; }

 private:
  std::vector<Rational> w_;
};

std::string to_string(const WeightVector& w);

class Matroid {
 public:
  // Validates cardinalities and the basis exchange axiom.  Throws
  // kWrongCardinality or kExchangeAxiomViolation (with a witness).
  static Matroid from_bases(int n, int d, std::vector<Subset> bases);

  static Matroid uniform(int d, int n);

  int size() const { return n_; }
  int rank() const { return d_; }

  // Sorted lexicographically by element list.
  const std::vector<Subset>& bases() const { return bases_; }
  bool is_basis(Subset s) const;
  bool is_independent(Subset s) const;
  int rank_of(Subset s) const { return rank_table_[s]; }
  Subset ground_set() const { return full_set(n_); }
  Subset closure(Subset s) const;
  bool is_flat(Subset s) const { return closure(s) == s; }

  Subset loops() const;
  bool has_loop() const { return loops() != 0; }

  bool operator==(const Matroid& o) const { return n_ == o.n_ && d_ == o.d_ && bases_ == o.bases_; }

 private:
  Matroid(int n, int d, std::vector<Subset> bases);

  int n_ = 0;
  int d_ = 0;
  std::vector<Subset> bases_;
  std::vector<std::uint8_t> rank_table_;
  std::vector<bool> basis_table_;
};

std::string format_bases(const Matroid& m);

// Inclusion-minimal dependent sets, sorted lexicographically.
std::vector<Subset> circuits(const Matroid& m);

// The unique circuit inside basis ∪ {element}, by the exchange formula
// {element} ∪ {j in basis : basis - j + element is a basis}.
// Throws kNotABasis / kElementInBasis.
Subset fundamental_circuit(const Matroid& m, int element, Subset basis);

// Bases of maximal w-weight.
Matroid weight_matroid(const Matroid& m, const WeightVector& w);

// Matroid greedy algorithm: heaviest elements first, ties to smaller index.
Subset greedy_basis(const Matroid& m, const WeightVector& w);

// w in Trop(M), i.e. M_w is loop-free.
bool in_bergman(const Matroid& m, const WeightVector& w);

struct CharacteristicPolynomial {
  std::vector<long long> coefficients;  // coefficients[k] multiplies t^k
  bool has_loop = false;

  long long evaluate(long long t) const;
  Integer evaluate(const Integer& t) const;
};

std::string to_string(const CharacteristicPolynomial& chi);

// Whitney rank sum over all subsets of the ground set.  A matroid with a loop
// has chi = 0, flagged by has_loop.
CharacteristicPolynomial characteristic_polynomial(const Matroid& m);

// |chi(0)|.
long long mobius_number(const Matroid& m);

struct ParallelClasses {
  std::vector<Subset> classes;  // ordered by smallest element
  long gcd = 0;                 // gcd of the class sizes
};

// Throws kHasLoop.
ParallelClasses parallel_classes(const Matroid& m);
bool has_parallel_pair(const Matroid& m);

struct FlatLattice {
  std::vector<Subset> flats;  // by rank, then lexicographic
  std::vector<int> ranks;
  std::vector<std::pair<std::size_t, std::size_t>> covers;  // (lower, upper) indices
};

// Throws kHasLoop.
FlatLattice flats(const Matroid& m);

}  // namespace milnor

#endif  // MILNOR_MATROID_HPP_
