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

#include "helpers.hpp"
#include "milnor/arrangement.hpp"
#include "milnor/counting.hpp"
#include "milnor/error.hpp"
#include "milnor/fan.hpp"
#include "milnor/io.hpp"
#include "oracles.hpp"

using namespace milnor;
using testing_support::rational_matrix;
using testing_support::thrown_code;

namespace {

Subset S(std::initializer_list<int> e) { return subset_of(e); }
LaurentPoly x(int n, int i) { return LaurentPoly::variable(n, i - 1); }

Realization u23() { return Realization::from_matrix(rational_matrix({{1, 0, 1}, {0, 1, 1}})); }
Realization boolean3() { return Realization::from_matrix(rational_matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})); }
Realization u24() { return Realization::from_matrix(rational_matrix({{1, 0, 1, 1}, {0, 1, 1, 2}})); }

CountConfig lenient() {
  CountConfig c;
  c.allow_bad_characteristic = true;
  return c;
}

std::vector<Realization> shipped_realizations() {
  std::vector<Realization> out;
  for (const char* name : {"u23.json", "u23_parallel.json", "boolean3.json", "u24.json", "u34.json", "k4.json"})
    out.push_back(realization_from_json(read_json_file(testing_support::data_path(name))));
  return out;
}

}  // namespace

TEST_CASE("brute-force solution counts") {
  CHECK(count_solutions({torus_equation(3)}, 5, 3) == 16);
  CHECK(count_solutions(milnor_generators(u23(), S({1, 2})), 5, 3) == 3);
  const auto sols = solution_set({x(2, 1) * x(2, 2) * (x(2, 1) + x(2, 2)) - LaurentPoly::constant(2, 1)}, 5, 2);
  CHECK(sols == std::vector<TorusPoint>{{1, 2}, {2, 1}, {2, 2}});
  // A lone monomial has no torus zeros.
  CHECK(count_solutions({x(2, 1)}, 7, 2) == 0);
  CHECK(count_solutions({}, 5, 2) == 16);
  CHECK(thrown_code([] { count_solutions({torus_equation(3)}, 5, 3, CountConfig{10, 1, false}); }) ==
        ErrorCode::kBudgetExceeded);
  // Scaled to x1 + 5, which has no zeros in the torus mod 5.
  CHECK(count_solutions({LaurentPoly::monomial({1, 0}, Rational(1, 5)) + LaurentPoly::constant(2, 1)}, 5, 2) == 0);
  CHECK(thrown_code([] { count_solutions({torus_equation(2)}, 4, 2); }) == ErrorCode::kBadPrime);
}

TEST_CASE("solution sets agree with direct evaluation") {
  std::mt19937_64 rng(131);
  for (int trial = 0; trial < 40; ++trial) {
    const auto r = oracle::random_realization(rng, 4).realization;
    if (r.matroid().has_loop()) continue;
    const auto gens = milnor_generators(r, r.matroid().bases().front());
    for (std::uint64_t p : {5, 7}) {
      std::vector<TorusPoint> expected;
      for (const auto& s : oracle::torus_solutions(gens, p, r.size())) expected.emplace_back(s.begin(), s.end());
      CHECK(solution_set(gens, p, r.size(), lenient()) == expected);
    }
  }
}

TEST_CASE("Milnor fiber counts of small arrangements") {
  CHECK(milnor_count(boolean3(), 5) == 16);
  CHECK(milnor_count(u23(), 5) == 3);
  CHECK(milnor_count(u23(), 5, {}, CountMethod::kNaive) == 3);
  CHECK(milnor_count(u23(), 5, {}, CountMethod::kEliminated) == 3);
  CHECK(thrown_code([] { milnor_count(u23(), 3); }) == ErrorCode::kBadCharacteristic);
  CHECK(milnor_count(u23(), 3, lenient()) == oracle::milnor_points_by_rank({{1, 0, 1}, {0, 1, 1}}, 3));
  CHECK(milnor_points(u23(), 5).size() == 3);
}

TEST_CASE("Milnor counts do not depend on the basis, method or thread count") {
  std::mt19937_64 rng(141);
  int tested = 0;
  while (tested < 40) {
    const auto rr = oracle::random_realization(rng, 5);
    const Realization& r = rr.realization;
    if (r.matroid().has_loop()) continue;
    for (std::uint64_t p : {5, 7, 11}) {
      // The oracle reads the integer rows directly, so they must keep rank d mod p.
      if (!is_good_prime(r, p) || r.size() % p == 0 || rank(reduce_mod(r.matrix(), p)) < r.matrix().rows())
        continue;
      const std::uint64_t reference = oracle::milnor_points_by_rank(rr.rows, p);
      CHECK(milnor_count(r, p, {}, CountMethod::kEliminated) == reference);
      for (Subset b : r.matroid().bases())
        CHECK(milnor_count(r, p, {}, CountMethod::kNaive, b) == reference);
      CountConfig threaded;
      threaded.threads = 3;
      CHECK(milnor_count(r, p, threaded, CountMethod::kNaive) == reference);
      Matrix<Zp> mod_p = reduce_mod(r.matrix(), p);
      CHECK(milnor_count_mod_p(mod_p) == reference);
    }
    ++tested;
  }
}

TEST_CASE("complement counts follow the characteristic polynomial") {
  const auto c = complement_count(u23(), 5);
  CHECK(c.count == 12);
  CHECK(c.chi_value == 12);
  CHECK(c.verdict);
  CHECK(complement_count(boolean3(), 5).count == 64);
  const auto d = complement_count(u24(), 7);
  CHECK(d.chi_value == 24);
  CHECK(d.verdict);

  for (const Realization& r : shipped_realizations())
    for (std::uint64_t p : {5, 7, 11, 13}) {
      const auto report = complement_count(r, p);
      CHECK(report.good_prime);
      CHECK(report.verdict);
    }
}

TEST_CASE("complement counts match a rank oracle at good primes") {
  std::mt19937_64 rng(151);
  for (int trial = 0; trial < 40; ++trial) {
    const auto rr = oracle::random_realization(rng, 4);
    for (std::uint64_t p : {5, 7}) {
      const auto& a = rr.realization.matrix();
      if (!is_good_prime(rr.realization, p) || rank(reduce_mod(a, p)) < a.rows()) continue;
      const auto report = complement_count(rr.realization, p);
      CHECK(report.count == oracle::milnor_points_by_rank(rr.rows, p, false));
      CHECK(report.verdict);
    }
  }
}

TEST_CASE("stratum table of the U23 line at p = 5") {
  const Realization r = u23();
  const auto report = stratum_table(r, fine_fan(r.matroid()), 5);
  REQUIRE(report.strata.size() == 4);
  CHECK(report.strata[0].raw == 3);
  CHECK(report.strata[0].divided == 3);
  for (std::size_t i = 1; i < 4; ++i) {
    CHECK(report.strata[i].raw == 4);
    CHECK(report.strata[i].divided == 1);
    CHECK(report.strata[i].orbit == 1);
  }
  CHECK(report.total == 3);
  CHECK(report.compactification_total == 6);
  CHECK(report.passed());
}

TEST_CASE("stratum tables pass on every shipped realization") {
  for (const Realization& r : shipped_realizations())
    for (std::uint64_t p : {5, 7}) {
      if (r.matroid().has_loop()) continue;
      const auto report = build_stratum_table(r, fine_fan(r.matroid()), p);
      CHECK(report.divisibility_ok);
      CHECK(report.cross_check_ok);
      CHECK(report.identity_ok);
    }
  const Realization point = Realization::from_matrix(rational_matrix({{3}}));
  const auto single = stratum_table(point, fine_fan(point.matroid()), 5);
  CHECK(single.strata.size() == 1);
  CHECK(single.compactification_total == milnor_count(point, 5));
}

TEST_CASE("mu_n acts freely on Milnor fiber points") {
  const auto b = mu_action_divisibility(boolean3(), 7);
  CHECK(b.count == 36);
  CHECK(b.passed());
  CHECK(mu_action_divisibility(u23(), 7).passed());
  CHECK(mu_action_divisibility(u23(), 13).passed());
  CHECK(mu_action_divisibility(u24(), 13).passed());
  CHECK(thrown_code([] { mu_action_divisibility(u23(), 5); }) == ErrorCode::kWrongResidue);
}

TEST_CASE("initial degenerations match the degenerate arrangement on every fine cone") {
  for (const Realization& r : shipped_realizations()) {
    if (r.matroid().has_loop() || r.size() > 4) continue;
    for (const auto& cone : fine_fan(r.matroid()).cones)
      for (std::uint64_t p : {5, 7}) {
        const auto check = initial_degeneration_check(r, interior_point(cone), p, lenient());
        CHECK(check.in_tropical_variety);
        CHECK(check.sets_equal);
        CHECK(check.passed);
      }
  }
}

TEST_CASE("initial degenerations on random realizations up to n = 5") {
  std::mt19937_64 rng(161);
  int tested = 0;
  while (tested < 25) {
    const auto r = oracle::random_realization(rng, 5).realization;
    if (r.matroid().has_loop()) continue;
    const auto fan = fine_fan(r.matroid());
    const auto& cone = fan.cones[tested % fan.cones.size()];
    const auto check = initial_degeneration_check(r, interior_point(cone), 5, lenient());
    CHECK(check.passed);
    CHECK(check.sets_equal);
    ++tested;
  }
}

TEST_CASE("tropical membership agrees with solvability of the initial system") {
  for (const Realization& r : shipped_realizations()) {
    if (r.size() > 4) continue;
    const int n = r.size();
    std::vector<long> raw(n, -1);
    for (;;) {
      const auto w = WeightVector::from_integers(raw);
      const bool expected = w.sums_to_zero() && in_bergman(r.matroid(), w);
      bool solvable = false;
      for (std::uint64_t p : {5, 7, 11}) {
        const auto check = initial_degeneration_check(r, w, p, lenient());
        CHECK(check.passed);
        solvable |= check.circuit_solutions > 0;
      }
      INFO("w = " << to_string(w));
      CHECK(solvable == expected);
      int k = n - 1;
      while (k >= 0 && raw[k] == 1) raw[k--] = -1;
      if (k < 0) break;
      ++raw[k];
    }
  }
}
