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
#include "milnor/error.hpp"
#include "milnor/fan.hpp"
#include "milnor/homology.hpp"
#include "oracles.hpp"

using namespace milnor;
using testing_support::thrown_code;

namespace {

Subset S(std::initializer_list<int> e) { return subset_of(e); }

long long alternating_face_sum(const SimplicialComplex& k) {
  long long sum = -1;  // the empty face
  for (int j = 0; j <= k.dimension(); ++j) sum += (j % 2 == 0 ? 1 : -1) * static_cast<long long>(k.face_count(j));
  return sum;
}

}  // namespace

TEST_CASE("order complexes of small matroids") {
  const auto u23 = order_complex(Matroid::uniform(2, 3));
  CHECK(u23.vertices == std::vector<Subset>{S({1}), S({2}), S({3})});
  CHECK(u23.dimension() == 0);
  CHECK(u23.facets.size() == 3);

  const auto hexagon = order_complex(Matroid::uniform(3, 3));
  CHECK(hexagon.face_count(0) == 6);
  CHECK(hexagon.face_count(1) == 6);
  CHECK(hexagon.dimension() == 1);

  const auto u22 = order_complex(Matroid::uniform(2, 2));
  CHECK(u22.face_count(0) == 2);
  CHECK(u22.dimension() == 0);

  const auto u34 = order_complex(Matroid::uniform(3, 4));
  CHECK(u34.face_count(0) == 10);
  CHECK(u34.face_count(1) == 12);
  CHECK(u34.facets.size() == 12);

  const Matroid looped = weight_matroid(Matroid::uniform(2, 3), WeightVector::from_integers({-2, 1, 1}));
  CHECK(thrown_code([&] { order_complex(looped); }) == ErrorCode::kHasLoop);
}

TEST_CASE("reduced Betti numbers") {
  const auto points = betti(order_complex(Matroid::uniform(2, 3)));
  CHECK(points[0] == 2);
  CHECK(points[-1] == 0);

  const auto hexagon = betti(order_complex(Matroid::uniform(3, 3)));
  CHECK(hexagon[0] == 0);
  CHECK(hexagon[1] == 1);

  SimplicialComplex triangle;
  triangle.vertices = {S({1}), S({2}), S({3})};
  triangle.simplices = {{{0}, {1}, {2}}, {{0, 1}, {0, 2}, {1, 2}}, {{0, 1, 2}}};
  triangle.facets = {{0, 1, 2}};
  const auto solid = betti(triangle);
  for (long long b : solid.reduced) CHECK(b == 0);

  SimplicialComplex empty;
  CHECK(betti(empty)[-1] == 1);
}

TEST_CASE("wedge of spheres on uniform matroids") {
  struct Case { int d, n; long long mu; };
  for (const Case c : {Case{2, 3, 2}, Case{2, 5, 4}, Case{3, 3, 1}, Case{3, 4, 3}, Case{4, 4, 1}, Case{3, 5, 6}}) {
    INFO("U_{" << c.d << "," << c.n << "}");
    const auto report = wedge_check(Matroid::uniform(c.d, c.n));
    CHECK(report.passed);
    CHECK(report.mobius == c.mu);
    CHECK(report.sphere_dimension == c.d - 2);
    CHECK(report.betti[c.d - 2] == c.mu);
  }
  const Matroid parallel = Matroid::from_bases(3, 2, {S({1, 2}), S({1, 3})});
  CHECK(thrown_code([&] { wedge_check(parallel); }) == ErrorCode::kParallelPairPresent);
}

TEST_CASE("Euler characteristic matches faces and the Möbius function") {
  std::mt19937_64 rng(111);
  int tested = 0;
  while (tested < 80) {
    const Matroid m = oracle::random_realization(rng, 6).realization.matroid();
    if (m.has_loop()) continue;
    const auto k = order_complex(m);
    const auto b = betti(k);
    CHECK(b.euler_characteristic() == alternating_face_sum(k));
    // Hall's theorem: the reduced Euler characteristic of the proper part is mu(0, E).
    CHECK(b.euler_characteristic() == oracle::characteristic(m.size(), m.rank(), m.bases()).front());
    CHECK(k.dimension() == m.rank() - 2);
    if (!has_parallel_pair(m)) CHECK(wedge_check(m).passed);
    ++tested;
  }
}

TEST_CASE("irreducibility witnesses") {
  const Matroid u23 = Matroid::uniform(2, 3);
  CHECK(irreducibility_witness(u23, WeightVector::from_integers({2, -1, -1})) == 1);
  CHECK(irreducibility_witness(u23, WeightVector::zero(3)).has_value());
  for (const auto& cone : fine_fan(Matroid::uniform(3, 4)).cones)
    CHECK(irreducibility_witness(Matroid::uniform(3, 4), interior_point(cone)).has_value());
  CHECK(thrown_code([&] { irreducibility_witness(u23, WeightVector::from_integers({-2, 1, 1})); }) ==
        ErrorCode::kHypothesisViolation);
}

TEST_CASE("parallel pairs in M_w through a maximal element were already parallel") {
  std::mt19937_64 rng(121);
  std::uniform_int_distribution<long> entry(-4, 4);
  int hits = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const Matroid m = oracle::random_realization(rng, 6).realization.matroid();
    if (m.has_loop()) continue;
    std::vector<long> raw(m.size());
    for (auto& v : raw) v = entry(rng);
    const auto w = WeightVector::from_integers(raw);
    if (!in_bergman(m, w)) continue;
    const auto mw_classes = parallel_classes(weight_matroid(m, w)).classes;
    const auto m_classes = parallel_classes(m).classes;
    for (int i = 1; i <= m.size(); ++i) {
      if (w[i] != w.max()) continue;
      for (Subset cls : mw_classes) {
        if (!contains(cls, i)) continue;
        for (int j : elements_of(cls)) {
          bool together = false;
          for (Subset c : m_classes) together |= contains(c, i) && contains(c, j);
          CHECK(together);
        }
      }
    }
    ++hits;
  }
  CHECK(hits > 50);
}
