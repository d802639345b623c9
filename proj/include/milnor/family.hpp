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


// One-parameter families of realizations evaluated over F_p, the
// constancy harness for Milnor counts, and polynomial interpolation of
// counts across primes.

#ifndef MILNOR_FAMILY_HPP_
#define MILNOR_FAMILY_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "milnor/counting.hpp"
#include "milnor/exact.hpp"
#include "milnor/matroid.hpp"

namespace milnor {

// Rational expression in the parameter t: integers, t, + - * / ^ (nonnegative
// integer exponent) and parentheses.
class Expression {
 public:
  // Throws kParseError with the offending column.
  static Expression parse(std::string_view text);

  // Nothing when a denominator vanishes mod p.
  std::optional<Zp> evaluate(const Zp& t) const;
  const std::string& text() const { return text_; }

  struct Node;

 private:
  std::string text_;
  std::shared_ptr<const Node> root_;
};

struct FamilySpec {
  std::string name;
  std::vector<std::vector<Expression>> matrix;  // d rows of n entries
  std::optional<std::vector<long long>> parameters;  // nothing: every t in F_p
  std::optional<Matroid> expected;
};

// Bases are the d-subsets of columns with nonzero determinant mod p.
// Nothing when the matrix has rank < d.
std::optional<Matroid> column_matroid(const Matrix<Zp>& a);

struct FamilySample {
  std::uint64_t p = 0;
  long long t = 0;
  bool excluded = false;
  std::string reason;  // why a sample was excluded
  std::uint64_t count = 0;
};

struct PrimeSummary {
  std::uint64_t p = 0;
  std::optional<std::uint64_t> common_value;  // set when all valid samples agree
  std::size_t valid_samples = 0;
  bool constant = true;
};

struct InvarianceReport {
  std::vector<FamilySample> samples;
  std::vector<PrimeSummary> primes;
  bool passed() const;
};

// Never throws on non-constant counts; see invariance_harness.
InvarianceReport run_invariance(const FamilySpec& family, const std::vector<std::uint64_t>& primes,
                                const CountConfig& config = {});

// Throws kInvarianceFailed naming two samples with different counts.
InvarianceReport invariance_harness(const FamilySpec& family, const std::vector<std::uint64_t>& primes,
                                    const CountConfig& config = {});

// prime,parameter,count,status lines with a header.
std::string to_csv(const InvarianceReport& report);

struct EPolynomial {
  std::optional<std::vector<Integer>> coefficients;  // index = power of q
  std::string note;
};

// Least-degree integer polynomial through all (prime, count) pairs, up to
// degree_bound; needs at least degree_bound + 2 data points.  Cross-prime
// agreement is a heuristic signal only.
EPolynomial epoly_interpolate(const std::map<std::uint64_t, Integer>& counts, int degree_bound);

std::string to_string(const std::vector<Integer>& polynomial, char variable = 'q');

}  // namespace milnor

#endif  // MILNOR_FAMILY_HPP_
