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


// Sparse multivariate Laurent polynomials with exact rational coefficients,
// initial forms with respect to a weight, and linear forms.

#ifndef MILNOR_LAURENT_HPP_
#define MILNOR_LAURENT_HPP_

#include <map>
#include <span>
#include <string>
#include <vector>

#include "milnor/exact.hpp"
#include "milnor/matroid.hpp"
#include "milnor/subset.hpp"

namespace milnor {

// Exponent vectors; entry k belongs to variable k of the ring.
using Exponent = std::vector<int>;

class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(int num_vars) : num_vars_(num_vars) {}

  static LaurentPoly monomial(Exponent exponent, const Rational& coefficient = Rational(1));
  static LaurentPoly constant(int num_vars, const Rational& value);
  // Variable with position `index` (0-based).
  static LaurentPoly variable(int num_vars, int index);

  int num_vars() const { return num_vars_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Exponent& e) const;

  // Adds c * x^e, dropping the term if it cancels.
  void add_term(const Exponent& e, const Rational& c);

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator*(const Rational& c) const;
  bool operator==(const LaurentPoly& o) const {
    return num_vars_ == o.num_vars_ && terms_ == o.terms_;
  }

  // x^u * f.
  LaurentPoly shifted(const Exponent& u) const;

  // Common total degree of all terms, or -1 if not homogeneous (or zero).
  int homogeneous_degree() const;
  // Variables with a nonzero exponent in some term.
  std::vector<int> variables_used() const;

 private:
  int num_vars_ = 0;
  std::map<Exponent, Rational> terms_;
};

// Variables are printed as x<k + first_index>.
std::string to_string(const LaurentPoly& f, int first_index = 1);

Rational pairing(const Exponent& e, std::span<const Rational> w);

// Terms whose exponents pair minimally with w.  Throws kZeroPolynomial.
LaurentPoly initial_form(const LaurentPoly& f, std::span<const Rational> w);
LaurentPoly initial_form(const LaurentPoly& f, const WeightVector& w);

// a == c * b for some nonzero rational c.
bool is_scalar_multiple(const LaurentPoly& a, const LaurentPoly& b);

// x_1 * ... * x_n - 1.
LaurentPoly torus_equation(int n);

// x_S for a subset of {1..n}.
LaurentPoly subset_monomial(int n, Subset s);

class LinearForm {
 public:
  LinearForm() = default;
  explicit LinearForm(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) {}

  int size() const { return static_cast<int>(coefficients_.size()); }
  // 1-based.
  const Rational& operator[](int i) const { return coefficients_[i - 1]; }
  const std::vector<Rational>& coefficients() const { return coefficients_; }
  Subset support() const;

  // The multiple whose coefficient at i is 1.  Throws kInvalidArgument if
  // i is outside the support.
  LinearForm normalized_at(int i) const;

  LaurentPoly to_poly() const;
  bool operator==(const LinearForm& o) const { return coefficients_ == o.coefficients_; }

 private:
  std::vector<Rational> coefficients_;
};

bool is_scalar_multiple(const LinearForm& a, const LinearForm& b);

}  // namespace milnor

#endif  // MILNOR_LAURENT_HPP_
