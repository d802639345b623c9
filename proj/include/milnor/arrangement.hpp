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


// Realized arrangements: a full-rank rational d x n matrix, its column
// matroid and Plücker vector, circuit forms, initial degenerations, and the
// generator sets of the Milnor fiber ideal.

#ifndef MILNOR_ARRANGEMENT_HPP_
#define MILNOR_ARRANGEMENT_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "milnor/exact.hpp"
#include "milnor/laurent.hpp"
#include "milnor/matrix.hpp"
#include "milnor/matroid.hpp"
#include "milnor/plucker.hpp"

namespace milnor {

class Realization {
 public:
  // Throws kRankDeficient.
  static Realization from_matrix(Matrix<Rational> matrix);

  int size() const { return matroid_.size(); }
  int rank() const { return matroid_.rank(); }
  const Matrix<Rational>& matrix() const { return matrix_; }
  const Matroid& matroid() const { return matroid_; }
  const PluckerVector& plucker_vector() const { return plucker_; }

 private:
  Realization(Matrix<Rational> matrix, PluckerVector plucker, Matroid matroid)
      : matrix_(std::move(matrix)), plucker_(std::move(plucker)), matroid_(std::move(matroid)) {}

  Matrix<Rational> matrix_;
  PluckerVector plucker_;
  Matroid matroid_;
};

// Bases of the column matroid are the subsets with nonzero Plücker coordinate.
Matroid matroid_from_plucker(const PluckerVector& p);

// The form vanishing on the row space with support exactly C, scaled so the
// coefficient of the smallest element of C is 1.  Throws kNotACircuit.
LinearForm circuit_form(const Realization& a, Subset circuit);

// The same form built from Plücker ratios for C = C(M, j, B):
// a_{i_l} = (-1)^l p_{(B+j)-i_l} / p_B over the sorted elements of B+j.
LinearForm circuit_form_plucker(const Realization& a, Subset basis, int j);

// Normalized circuit form of the fundamental circuit C(M, i, B) with the
// coefficient of x_i equal to 1.
LinearForm normalized_circuit_form(const Realization& a, int i, Subset basis);

struct InitialRealizationReport {
  Realization result;               // route 1: truncated Plücker vector
  Matrix<Rational> kernel_route;    // route 2: zero set of initial circuit forms
  Subset chart = 0;                 // basis of M_w used by both routes
  Matroid expected_matroid;         // route 3 reference: M_w
  bool row_spaces_agree = false;
  bool matroid_agrees = false;
  bool plucker_agrees = false;

  bool passed() const { return row_spaces_agree && matroid_agrees && plucker_agrees; }
};

InitialRealizationReport initial_realization_routes(const Realization& a, const WeightVector& w);

// A_w; throws kRouteMismatch if the routes disagree.
Realization initial_realization(const Realization& a, const WeightVector& w);

// Circuit forms of C(M, i, B) for i outside B, then x_1...x_n - 1.
// Throws kNotABasis.
std::vector<LaurentPoly> milnor_generators(const Realization& a, Subset basis);

// x_B * prod_{i not in B} (x_i - L_{C(M,i,B),i}).  Throws kHasLoop, kNotABasis.
LaurentPoly g_polynomial(const Realization& a, Subset basis);

// Compares g_B with its alternating expansion over subsets I of the
// complement of B.
bool expansion_identity_check(const Realization& a, Subset basis);

struct GroebnerCertificate {
  std::vector<Rational> v;                 // weight on x0..xn, all entries <= 0
  std::vector<int> variable_priority;      // tie-break order of x0..xn
  std::vector<LaurentPoly> generators;     // in k[x0..xn]
  std::vector<Exponent> initial_terms;
  bool linear_initials_ok = false;
  bool g_initial_ok = false;
  bool pairwise_coprime = false;

  bool passed() const { return linear_initials_ok && g_initial_ok && pairwise_coprime; }
};

// Initial terms of {L_{C(M,i,B)}} and g_B - x0^n under the weight
// v = (0,w) + lambda(1,..,1) refined by a graded order whose lexicographic
// tie-break ranks non-basis variables first, then x0, then B.
// Throws kNotABasis unless B is a basis of M_w, kCertificateFailed on failure.
GroebnerCertificate groebner_certificate(const Realization& a, const WeightVector& w, Subset basis);

struct InitialGReport {
  bool identity = false;    // init_w(g_B^A - 1) == g_B^{A_w} - 1
  bool factorwise = false;  // init_w(x_i - L_{C,i}) == x_i - L^{A_w}_{C(M_w,i,B),i}
  bool passed() const { return identity && factorwise; }
};

// Requires w in Trop(M) with coordinate sum 0 and B a basis of M_w
// (kHypothesisViolation otherwise).
InitialGReport initial_g_check(const Realization& a, const WeightVector& w, Subset basis);

// p is good for A when no nonzero coordinate of the primitive integral
// Plücker vector vanishes mod p, so the column matroid survives reduction.
bool is_good_prime(const Realization& a, std::uint64_t p);

}  // namespace milnor

#endif  // MILNOR_ARRANGEMENT_HPP_
