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

#include "milnor/error.hpp"
#include "milnor/exact.hpp"
#include "milnor/lattice.hpp"
#include "milnor/matrix.hpp"
#include "milnor/plucker.hpp"
#include "helpers.hpp"

using namespace milnor;

namespace {

const auto mat = testing_support::rational_matrix;

Matrix<Rational> random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> entry(-4, 4);
  Matrix<Rational> m(rows, cols, Rational(0));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Rational(entry(rng), 1 + (entry(rng) + 4) % 3);
  return m;
}

}  // namespace

TEST_CASE("rationals parse and print in lowest terms") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational(" -7 ") == Rational(-7));
  CHECK(to_string(Rational(-3, 6)) == "-1/2");
  CHECK(to_string(Rational(4)) == "4");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("prime field arithmetic") {
  const Zp a(3, 7), b(5, 7);
  CHECK((a + b).value() == 1);
  CHECK((a - b).value() == 5);
  CHECK((a * b).value() == 1);
  CHECK((a / b * b) == a);
  CHECK(Zp(-1, 7).value() == 6);
  CHECK(a.pow(6).value() == 1);
  CHECK(primitive_root(7) == 3);
  CHECK(primitive_root(13) == 2);
  CHECK(reduce_mod(Rational(1, 2), 7).value() == 4);
  CHECK_THROWS_AS(reduce_mod(Rational(1, 7), 7), Error);
  CHECK(is_prime(2));
  CHECK(is_prime(101));
  CHECK_FALSE(is_prime(91));
  CHECK_FALSE(is_prime(1));
}

TEST_CASE("rank, rref and kernel of small matrices") {
  const auto a = mat({{1, 0, 1}, {0, 1, 1}});
  CHECK(rank(a) == 2);
  const auto kernel = kernel_basis(a);
  REQUIRE(kernel.size() == 1);
  const std::vector<Rational> expected = {Rational(-1), Rational(-1), Rational(1)};
  CHECK(kernel[0] == expected);

  const auto id = mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(rref(id).reduced == id);
  CHECK(determinant(mat({{2, 1}, {7, 4}})) == 1);
  CHECK(same_row_space(a, mat({{1, 1, 2}, {1, -1, 0}})));
  CHECK_FALSE(same_row_space(a, mat({{1, 0, 0}, {0, 1, 0}})));
}

TEST_CASE("rref is idempotent and rank plus nullity equals the column count") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + trial % 4, cols = 1 + (trial / 4) % 6;
    const auto m = random_matrix(rng, rows, cols);
    const auto once = rref(m);
    CHECK(rref(once.reduced).reduced == once.reduced);
    const auto kernel = kernel_basis(m);
    CHECK(rank(m) + kernel.size() == cols);
    for (const auto& v : kernel)
      for (std::size_t r = 0; r < rows; ++r) {
        Rational acc = 0;
        for (std::size_t c = 0; c < cols; ++c) acc += m(r, c) * v[c];
        CHECK(acc == 0);
      }
  }
}

TEST_CASE("matrices over a prime field eliminate like rational ones") {
  Matrix<Zp> m(2, 3, Zp(0, 5));
  m(0, 0) = Zp(1, 5); m(0, 1) = Zp(2, 5); m(0, 2) = Zp(3, 5);
  m(1, 0) = Zp(2, 5); m(1, 1) = Zp(4, 5); m(1, 2) = Zp(2, 5);
  CHECK(rank(m) == 2);
  CHECK(rref(m).pivots == std::vector<std::size_t>{0, 2});
  const auto kernel = kernel_basis(m, Zp(0, 5));
  REQUIRE(kernel.size() == 1);
  CHECK(kernel[0][1].value() == 1);
}

TEST_CASE("Plücker coordinates of small matrices") {
  const auto p = plucker(mat({{1, 0, 1}, {0, 1, 1}}));
  CHECK(p[subset_of({1, 2})] == 1);
  CHECK(p[subset_of({1, 3})] == 1);
  CHECK(p[subset_of({2, 3})] == -1);

  const auto padded = plucker(mat({{1, 0, 0, 0}, {0, 1, 0, 0}}));
  CHECK(padded[subset_of({1, 2})] == 1);
  CHECK(padded.support() == std::vector<Subset>{subset_of({1, 2})});

  CHECK_THROWS_AS(plucker(mat({{1, 2, 3}, {2, 4, 6}})), Error);
  CHECK(testing_support::thrown_code([] { plucker(mat({{1, 2}, {2, 4}})); }) ==
        ErrorCode::kRankDeficient);
}

TEST_CASE("random 2x4 matrices satisfy the three-term Plücker relation") {
  std::mt19937_64 rng(11);
  int tested = 0;
  while (tested < 100) {
    const auto m = random_matrix(rng, 2, 4);
    if (rank(m) < 2) continue;
    const auto p = plucker(m);
    auto q = [&](int a, int b) { return p[subset_of({a, b})]; };
    CHECK(q(1, 2) * q(3, 4) - q(1, 3) * q(2, 4) + q(1, 4) * q(2, 3) == 0);
    ++tested;
  }
}

TEST_CASE("matrices rebuilt from Plücker coordinates have the same row space") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const auto m = random_matrix(rng, 2 + trial % 2, 5);
    if (rank(m) < m.rows()) continue;
    const auto p = plucker(m);
    for (Subset chart : p.support()) {
      const auto rebuilt = matrix_from_plucker(p, chart);
      CHECK(same_row_space(rebuilt, m));
      CHECK(plucker(rebuilt).proportional_to(p));
    }
  }
  CHECK(sorting_sign({2, 1, 3}) == -1);
  CHECK(sorting_sign({1, 2, 3}) == 1);
  CHECK(sorting_sign({3, 1, 2}) == 1);
}

TEST_CASE("lattice complement of a single ray") {
  const LatticeSplit split = lattice_complement({{2, -1, -1}}, 3);
  REQUIRE(split.perp_basis.size() == 2);
  for (const auto& u : split.perp_basis) CHECK(dot(u, {2, -1, -1}) == 0);
  // (1,1,1) and (0,1,-1) generate the same perp lattice.
  CHECK(lattice_coordinates(split.perp_basis, {1, 1, 1}).has_value());
  CHECK(lattice_coordinates(split.perp_basis, {0, 1, -1}).has_value());
  CHECK_FALSE(lattice_coordinates(split.perp_basis, {1, 0, 0}).has_value());
  REQUIRE(split.span_basis.size() == 1);
  CHECK(split.index == 6);
}

TEST_CASE("lattice complement edge cases") {
  const LatticeSplit none = lattice_complement({}, 3);
  CHECK(none.perp_basis.size() == 3);
  CHECK(none.span_basis.empty());
  CHECK(none.index == 1);

  const LatticeSplit all = lattice_complement({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3);
  CHECK(all.perp_basis.empty());
  CHECK(all.span_basis.size() == 3);
  CHECK(all.index == 1);
}

TEST_CASE("lattice complement output pairs to zero and ranks add up") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 4;
    const int k = trial % n;
    std::vector<IntVector> rays(k, IntVector(n));
    for (auto& r : rays)
      for (auto& x : r) x = entry(rng);
    const LatticeSplit split = lattice_complement(rays, n);
    for (const auto& u : split.perp_basis)
      for (const auto& r : rays) CHECK(dot(u, r) == 0);
    CHECK(split.span_basis.size() + split.perp_basis.size() == static_cast<std::size_t>(n));
    CHECK(split.index >= 1);
    for (const auto& r : rays) CHECK(lattice_coordinates(split.span_basis, r).has_value());
  }
}

TEST_CASE("cone lattice index detects non-unimodular cones") {
  CHECK(cone_lattice_index({{1, 0}, {0, 1}}, 2) == 1);
  CHECK(cone_lattice_index({{1, 1}, {1, -1}}, 2) == 2);
  CHECK(primitive({4, -6, 2}) == IntVector{2, -3, 1});
}
