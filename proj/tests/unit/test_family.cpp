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

#include <map>
#include <set>

#include "helpers.hpp"
#include "milnor/error.hpp"
#include "milnor/family.hpp"
#include "milnor/io.hpp"
#include "oracles.hpp"

using namespace milnor;
using testing_support::thrown_code;

namespace {

Subset S(std::initializer_list<int> e) { return subset_of(e); }

FamilySpec family(const std::vector<std::vector<std::string>>& entries,
                  std::optional<Matroid> expected = std::nullopt) {
  FamilySpec f;
  f.name = "test";
  for (const auto& row : entries) {
    f.matrix.emplace_back();
    for (const auto& e : row) f.matrix.back().push_back(Expression::parse(e));
  }
  f.expected = std::move(expected);
  return f;
}

FamilySpec shipped_u24_family() {
  return family_from_json(read_json_file(testing_support::data_path("u24_family.json")));
}

}  // namespace

TEST_CASE("expressions in the parameter") {
  const Zp t(3, 7);
  CHECK(Expression::parse("1 + 2*t").evaluate(t)->value() == 0);
  CHECK(Expression::parse("t^3").evaluate(t)->value() == 6);
  CHECK(Expression::parse("-(t+1)").evaluate(t)->value() == 3);
  CHECK(Expression::parse("(t - 1)/2").evaluate(t)->value() == 1);
  CHECK(Expression::parse("t^0").evaluate(t)->value() == 1);
  CHECK(thrown_code([] { Expression::parse("t^-1"); }) == ErrorCode::kParseError);
  CHECK_FALSE(Expression::parse("1/(t-3)").evaluate(t).has_value());
  CHECK(Expression::parse("12").evaluate(t)->value() == 5);
  for (const char* bad : {"1+", "t**", "(1", "x", "", "2t)"})
    CHECK(thrown_code([&] { Expression::parse(bad); }) == ErrorCode::kParseError);
}

TEST_CASE("column matroids over prime fields") {
  Matrix<Zp> a(2, 4, Zp(0, 5));
  const long entries[2][4] = {{1, 0, 1, 1}, {0, 1, 1, 2}};
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 4; ++c) a(r, c) = Zp(entries[r][c], 5);
  CHECK(column_matroid(a) == Matroid::uniform(2, 4));
  a(1, 3) = Zp(1, 5);
  CHECK(column_matroid(a)->bases().size() == 5);
  Matrix<Zp> flat(2, 2, Zp(1, 5));
  CHECK_FALSE(column_matroid(flat).has_value());
}

TEST_CASE("the U24 family reports brute-force counts for each parameter") {
  const FamilySpec f = shipped_u24_family();
  const std::vector<std::uint64_t> primes = {5, 7, 13};
  const auto report = run_invariance(f, primes);
  for (const auto& s : report.samples) {
    INFO("p=" << s.p << " t=" << s.t);
    const long long t = s.t;
    const bool degenerate = t % static_cast<long long>(s.p) == 0 || t % static_cast<long long>(s.p) == 1;
    CHECK(s.excluded == degenerate);
    if (!s.excluded) CHECK(s.count == oracle::milnor_points_by_rank({{1, 0, 1, 1}, {0, 1, 1, t}}, s.p));
  }
  for (const auto& summary : report.primes) CHECK(summary.valid_samples == summary.p - 2);

  // The harness must agree with the brute-force verdict on constancy.
  bool oracle_constant = true;
  for (std::uint64_t p : primes) {
    std::set<std::uint64_t> values;
    for (long long t = 2; t < static_cast<long long>(p); ++t)
      values.insert(oracle::milnor_points_by_rank({{1, 0, 1, 1}, {0, 1, 1, t}}, p));
    oracle_constant &= values.size() == 1;
  }
  CHECK(report.passed() == oracle_constant);
  if (oracle_constant)
    CHECK_NOTHROW(invariance_harness(f, primes));
  else
    CHECK(thrown_code([&] { invariance_harness(f, primes); }) == ErrorCode::kInvarianceFailed);
}

TEST_CASE("constant and degenerating families") {
  const auto constant = run_invariance(family({{"1", "0", "1"}, {"0", "1", "1"}}, Matroid::uniform(2, 3)), {5, 7});
  CHECK(constant.passed());
  REQUIRE(constant.primes.size() == 2);
  CHECK(constant.primes[0].common_value == 3u);
  CHECK(constant.primes[1].common_value == 6u);

  // The third column collapses onto the first at t = 0.  Elsewhere the fiber
  // is x y (x + y) = t up to rescaling, and cubing is onto at p = 5 and 11.
  FamilySpec degenerating = family({{"1", "0", "1"}, {"0", "1", "t"}}, Matroid::uniform(2, 3));
  const auto report = run_invariance(degenerating, {5, 11});
  std::size_t excluded = 0;
  for (const auto& s : report.samples)
    if (s.excluded) {
      ++excluded;
      CHECK(s.t == 0);
      CHECK_FALSE(s.reason.empty());
    }
  CHECK(excluded == 2);
  CHECK(report.passed());
  CHECK(to_csv(report).find("excluded") != std::string::npos);

  FamilySpec pole = family({{"1", "0", "1"}, {"0", "1", "1/(t-2)"}});
  pole.parameters = std::vector<long long>{2, 3};
  const auto poled = run_invariance(pole, {5});
  REQUIRE(poled.samples.size() == 2);
  CHECK(poled.samples[0].excluded);
  CHECK(poled.samples[0].reason.find("division by zero") != std::string::npos);
}

TEST_CASE("interpolation of counts across primes") {
  const auto boolean = epoly_interpolate({{5, 16}, {7, 36}, {11, 100}, {13, 144}}, 2);
  REQUIRE(boolean.coefficients.has_value());
  CHECK(*boolean.coefficients == std::vector<Integer>{1, -2, 1});
  CHECK(boolean.note.find("heuristic") != std::string::npos);
  CHECK(to_string(*boolean.coefficients) == "q^2 - 2q + 1");

  const auto chi = epoly_interpolate({{5, 12}, {7, 30}, {11, 90}, {13, 132}}, 2);
  REQUIRE(chi.coefficients.has_value());
  CHECK(*chi.coefficients == std::vector<Integer>{2, -3, 1});

  const auto junk = epoly_interpolate({{5, 3}, {7, 6}, {11, 9}, {13, 6}}, 2);
  CHECK_FALSE(junk.coefficients.has_value());
  CHECK(junk.note.find("NOT_POLYNOMIAL") != std::string::npos);

  CHECK_FALSE(epoly_interpolate({{5, 16}, {7, 36}}, 2).coefficients.has_value());
}
