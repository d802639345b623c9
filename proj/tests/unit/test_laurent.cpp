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

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "helpers.hpp"
#include "milnor/error.hpp"
#include "milnor/laurent.hpp"

using namespace milnor;
using testing_support::thrown_code;

namespace {

LaurentPoly x(int n, int i) { return LaurentPoly::variable(n, i - 1); }

std::vector<Rational> weights(std::initializer_list<long> w) {
  std::vector<Rational> out;
  for (long v : w) out.emplace_back(v);
  return out;
}

}  // namespace

TEST_CASE("Laurent polynomial arithmetic keeps only nonzero terms") {
  const LaurentPoly f = x(3, 1) + x(3, 2) - x(3, 3);
  CHECK(f.size() == 3);
  CHECK((f - f).is_zero());
  CHECK(f.homogeneous_degree() == 1);
  CHECK(to_string(f) == "x1 + x2 - x3");

  const LaurentPoly g = x(3, 1) * x(3, 2) * x(3, 3) - LaurentPoly::constant(3, 1);
  CHECK(g == torus_equation(3));
  CHECK(g.homogeneous_degree() == -1);
  CHECK(g.variables_used() == std::vector<int>{0, 1, 2});

  const LaurentPoly h = LaurentPoly::monomial({1, -2, 0}, Rational(3, 2));
  CHECK(h.coefficient({1, -2, 0}) == Rational(3, 2));
  CHECK(h.shifted({-1, 2, 1}) == LaurentPoly::monomial({0, 0, 1}, Rational(3, 2)));
  CHECK((h * Rational(0)).is_zero());
  CHECK(subset_monomial(3, subset_of({1, 3})) == x(3, 1) * x(3, 3));
}

TEST_CASE("initial forms keep the terms of minimal pairing") {
  const LaurentPoly f = x(3, 1) + x(3, 2) - x(3, 3);
  CHECK(initial_form(f, WeightVector::from_integers({2, -1, -1})) == x(3, 2) - x(3, 3));
  const LaurentPoly g = torus_equation(3);
  CHECK(initial_form(g, WeightVector::from_integers({2, -1, -1})) == g);
  CHECK(initial_form(g, WeightVector::from_integers({5, -7, 2})) == g);
  CHECK(initial_form(f, WeightVector::zero(3)) == f);
  // Off the hyperplane the monomial side wins or loses outright.
  CHECK(initial_form(g, WeightVector::from_integers({1, 1, 1})) == LaurentPoly::constant(3, -1));
  CHECK(initial_form(g, WeightVector::from_integers({-1, 0, 0})) == x(3, 1) * x(3, 2) * x(3, 3));
  CHECK(pairing({1, -2, 0}, weights({3, 1, 9})) == 1);
  CHECK(thrown_code([] { initial_form(LaurentPoly(2), WeightVector::zero(2)); }) ==
        ErrorCode::kZeroPolynomial);
}

TEST_CASE("initial forms are multiplicative and stable under refinement") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> coef(-3, 3), ex(-2, 2), wt(-4, 4);
  auto random_poly = [&](int n) {
    LaurentPoly f(n);
    while (f.is_zero())
      for (int t = 0; t < 4; ++t) {
        Exponent e(n);
        for (auto& v : e) v = ex(rng);
        f.add_term(e, Rational(coef(rng)));
      }
    return f;
  };
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 3;
    const LaurentPoly f = random_poly(n), g = random_poly(n);
    std::vector<long> raw(n);
    for (auto& v : raw) v = wt(rng);
    const auto w = WeightVector::from_integers(raw);
    CHECK(initial_form(f * g, w) == initial_form(f, w) * initial_form(g, w));
    const LaurentPoly in = initial_form(f, w);
    CHECK(initial_form(in, w) == in);
    // All terms of the initial form share one pairing.
    std::set<Rational> values;
    for (const auto& [e, c] : in.terms()) values.insert(pairing(e, w.values()));
    CHECK(values.size() == 1);
  }
}

TEST_CASE("scalar multiple tests") {
  const LaurentPoly f = x(3, 1) - x(3, 3);
  CHECK(is_scalar_multiple(f, f * Rational(-5, 3)));
  CHECK_FALSE(is_scalar_multiple(f, x(3, 1) + x(3, 3)));
  CHECK_FALSE(is_scalar_multiple(f, LaurentPoly(3)));

  const LinearForm l(weights({0, 2, -4}));
  CHECK(l.support() == subset_of({2, 3}));
  CHECK(l.normalized_at(3) == LinearForm({Rational(0), Rational(-1, 2), Rational(1)}));
  CHECK(thrown_code([&] { l.normalized_at(1); }) == ErrorCode::kInvalidArgument);
  CHECK(is_scalar_multiple(l, l.normalized_at(2)));
  CHECK(l.to_poly() == x(3, 2) * Rational(2) - x(3, 3) * Rational(4));
}
