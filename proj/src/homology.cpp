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

#include "milnor/homology.hpp"

#include <algorithm>
#include <map>

#include "milnor/error.hpp"
#include "milnor/matrix.hpp"

namespace milnor {

std::size_t SimplicialComplex::face_count(int k) const {
  if (k == -1) return 1;
  if (k < 0 || k > dimension()) return 0;
  return simplices[k].size();
}

namespace {

bool comparable(Subset a, Subset b) { return (a & ~b) == 0 || (b & ~a) == 0; }

void extend(const std::vector<Subset>& vertices, Simplex& chain, SimplicialComplex& out) {
  const int k = static_cast<int>(chain.size()) - 1;
  if (k >= 0) {
    if (static_cast<int>(out.simplices.size()) <= k) out.simplices.resize(k + 1);
    out.simplices[k].push_back(chain);
  }
  for (int v = chain.empty() ? 0 : chain.back() + 1; v < static_cast<int>(vertices.size()); ++v) {
    if (!chain.empty()) {
      const Subset top = vertices[chain.back()];
      if (top == vertices[v] || (top & ~vertices[v]) != 0) continue;
    }
    chain.push_back(v);
    extend(vertices, chain, out);
    chain.pop_back();
  }
}

// No vertex outside the chain is comparable with all of its members.
bool is_maximal(const std::vector<Subset>& vertices, const Simplex& chain) {
  for (int v = 0; v < static_cast<int>(vertices.size()); ++v) {
    if (std::binary_search(chain.begin(), chain.end(), v)) continue;
    bool fits = true;
    for (int u : chain) fits = fits && comparable(vertices[u], vertices[v]);
    if (fits) return false;
  }
  return true;
}

}  // namespace

SimplicialComplex order_complex(const Matroid& m) {
  const FlatLattice lattice = flats(m);
  SimplicialComplex k;
  for (Subset f : lattice.flats)
    if (f != 0 && f != m.ground_set()) k.vertices.push_back(f);
  // Flats are sorted by rank, so any chain is increasing in vertex index.
  Simplex chain;
  extend(k.vertices, chain, k);
  for (auto& layer : k.simplices) std::sort(layer.begin(), layer.end());
  for (const auto& layer : k.simplices)
    for (const Simplex& s : layer)
      if (is_maximal(k.vertices, s)) k.facets.push_back(s);
  return k;
}

long long BettiNumbers::operator[](int k) const {
  const int idx = k + 1;
  return idx >= 0 && idx < static_cast<int>(reduced.size()) ? reduced[idx] : 0;
}

long long BettiNumbers::euler_characteristic() const {
  long long chi = 0;
  for (std::size_t i = 0; i < reduced.size(); ++i)
    chi += (i % 2 == 1 ? 1 : -1) * reduced[i];  // index i is degree i-1
  return chi;
}

BettiNumbers betti(const SimplicialComplex& k) {
  const int dim = k.dimension();
  // rank of the boundary from degree j to j-1, for j = 0..dim; the augmentation
  // to degree -1 has rank 1 when there is a vertex.
  std::vector<long long> boundary_rank(dim + 2, 0);
  if (dim >= 0) boundary_rank[0] = 1;
  for (int j = 1; j <= dim; ++j) {
    std::map<Simplex, std::size_t> index;
    for (std::size_t r = 0; r < k.simplices[j - 1].size(); ++r) index.emplace(k.simplices[j - 1][r], r);
    Matrix<Rational> d(k.simplices[j].size(), k.simplices[j - 1].size(), Rational(0));
    for (std::size_t c = 0; c < k.simplices[j].size(); ++c) {
      const Simplex& s = k.simplices[j][c];
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Simplex face = s;
        face.erase(face.begin() + static_cast<long>(drop));
        d(c, index.at(face)) = drop % 2 == 0 ? 1 : -1;
      }
    }
    boundary_rank[j] = static_cast<long long>(rank(d));
  }
  BettiNumbers b;
  // Degree -1 has one generator (the empty simplex).
  for (int j = -1; j <= std::max(dim, -1); ++j) {
    const long long faces = static_cast<long long>(k.face_count(j));
    const long long out_rank = j >= 0 ? boundary_rank[j] : 0;
    const long long in_rank = j + 1 <= dim ? boundary_rank[j + 1] : 0;
    b.reduced.push_back(faces - out_rank - in_rank);
  }
  return b;
}

WedgeReport wedge_check(const Matroid& m) {
  if (m.has_loop()) throw Error(ErrorCode::kHasLoop, "loops " + format_subset(m.loops()));
  if (has_parallel_pair(m))
    throw Error(ErrorCode::kParallelPairPresent, "parallel classes violate the simple hypothesis");
  WedgeReport report;
  report.betti = betti(order_complex(m));
  report.mobius = mobius_number(m);
  report.sphere_dimension = m.rank() - 2;
  report.passed = true;
  for (int j = -1; j < static_cast<int>(report.betti.reduced.size()) - 1; ++j) {
    const long long expected = j == report.sphere_dimension ? report.mobius : 0;
    if (report.betti[j] != expected) report.passed = false;
  }
  if (report.sphere_dimension + 1 >= static_cast<int>(report.betti.reduced.size()) && report.mobius != 0)
    report.passed = false;
  return report;
}

std::optional<int> irreducibility_witness(const Matroid& m, const WeightVector& w) {
  if (m.has_loop() || has_parallel_pair(m))
    throw Error(ErrorCode::kHypothesisViolation, "M must be loop-free without parallel pairs");
  if (!w.sums_to_zero() || !in_bergman(m, w))
    throw Error(ErrorCode::kHypothesisViolation, "w=" + to_string(w) + " is not in Trop(M) with sum 0");
  const Matroid mw = weight_matroid(m, w);
  const ParallelClasses classes = parallel_classes(mw);
  const Rational top = w.max();
  for (int i = 1; i <= m.size(); ++i) {
    if (w[i] != top) continue;
    for (Subset cls : classes.classes)
      if (contains(cls, i) && cardinality(cls) == 1) return i;
  }
  return std::nullopt;
}

}  // namespace milnor
