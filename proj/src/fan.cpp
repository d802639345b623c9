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

#include "milnor/fan.hpp"

#include <algorithm>
#include <random>

#include "milnor/error.hpp"

namespace milnor {

IntVector flat_ray(int n, Subset flat) {
  IntVector ray(n);
  const int size = cardinality(flat);
  for (int i = 1; i <= n; ++i) ray[i - 1] = (contains(flat, i) ? n : 0) - size;
  return ray;
}

FlagCone make_cone(int n, std::vector<Subset> flag) {
  FlagCone cone{.n = n, .flag = std::move(flag), .rays = {}};
  for (Subset f : cone.flag) cone.rays.push_back(flat_ray(n, f));
  return cone;
}

namespace {

void extend_chains(const std::vector<Subset>& proper, std::vector<Subset>& chain, int n,
                   std::vector<FlagCone>& out) {
  out.push_back(make_cone(n, chain));
  for (Subset f : proper) {
    if (!chain.empty() && (f == chain.back() || (chain.back() & ~f) != 0)) continue;
    chain.push_back(f);
    extend_chains(proper, chain, n, out);
    chain.pop_back();
  }
}

bool flag_less(const FlagCone& a, const FlagCone& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  return std::lexicographical_compare(a.flag.begin(), a.flag.end(), b.flag.begin(), b.flag.end(),
                                      subset_lex_less);
}

}  // namespace

BergmanFan fine_fan(const Matroid& m) {
  const FlatLattice lattice = flats(m);
  std::vector<Subset> proper;
  for (Subset f : lattice.flats)
    if (f != 0 && f != m.ground_set()) proper.push_back(f);
  std::vector<FlagCone> cones;
  std::vector<Subset> chain;
  extend_chains(proper, chain, m.size(), cones);
  std::sort(cones.begin(), cones.end(), flag_less);
  return BergmanFan{.matroid = m, .cones = std::move(cones), .dimension = m.rank() - 1};
}

WeightVector interior_point(const FlagCone& cone) {
  std::vector<Rational> w(cone.n, Rational(0));
  for (const auto& ray : cone.rays)
    for (int i = 0; i < cone.n; ++i) w[i] += Rational(ray[i]);
  return WeightVector(std::move(w));
}

std::vector<FlagCone> faces(const FlagCone& cone) {
  std::vector<FlagCone> out;
  const std::size_t k = cone.flag.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::vector<Subset> sub;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (std::size_t{1} << i)) sub.push_back(cone.flag[i]);
    out.push_back(make_cone(cone.n, std::move(sub)));
  }
  std::sort(out.begin(), out.end(), flag_less);
  return out;
}

Subset cone_basis(const Matroid& m, const FlagCone& cone) {
  Subset basis = 0;
  std::vector<Subset> stages = cone.flag;
  stages.push_back(m.ground_set());
  for (Subset stage : stages)
    for (int e : elements_of(stage))
      if (!contains(basis, e) && m.is_independent(basis | element_bit(e))) basis |= element_bit(e);
  for (const FlagCone& face : faces(cone)) {
    if (!weight_matroid(m, interior_point(face)).is_basis(basis))
      throw Error(ErrorCode::kNoCommonBasis,
                  format_subset(basis) + " is not w-maximal on the face of dimension " +
                      std::to_string(face.dim()));
  }
  return basis;
}

bool relint_constancy_check(const FlagCone& cone, const std::vector<LaurentPoly>& forms,
                            std::uint64_t seed, int samples) {
  std::vector<LaurentPoly> all = forms;
  all.push_back(torus_equation(cone.n));
  const WeightVector center = interior_point(cone);
  std::vector<LaurentPoly> reference;
  for (const auto& f : all) reference.push_back(initial_form(f, center));
  if (cone.dim() == 0) return true;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coefficient(1, 9);
  for (int s = 0; s < samples; ++s) {
    std::vector<Rational> w(cone.n, Rational(0));
    for (const auto& ray : cone.rays) {
      const Rational c(coefficient(rng), coefficient(rng));
      for (int i = 0; i < cone.n; ++i) w[i] += c * Rational(ray[i]);
    }
    for (std::size_t k = 0; k < all.size(); ++k)
      if (!(initial_form(all[k], w) == reference[k])) return false;
  }
  return true;
}

Exponent monomial_shift(const LaurentPoly& f, const FlagCone& cone) {
  const LaurentPoly init = initial_form(f, interior_point(cone));
  Exponent u = init.terms().begin()->first;
  for (int& x : u) x = -x;
  return u;
}

LaurentPoly face_projection(const LaurentPoly& shifted, const FlagCone& cone) {
  LaurentPoly out(shifted.num_vars());
  for (const auto& [e, c] : shifted.terms()) {
    bool on_face = true;
    for (const auto& ray : cone.rays) {
      Integer p = 0;
      for (std::size_t i = 0; i < e.size(); ++i) p += e[i] * ray[i];
      if (p != 0) on_face = false;
    }
    if (on_face) out.add_term(e, c);
  }
  return out;
}

bool face_restriction_check(const LaurentPoly& f, const Exponent& u, const FlagCone& tau) {
  const LaurentPoly shifted = f.shifted(u);
  for (const auto& [e, c] : shifted.terms()) {
    for (const auto& ray : tau.rays) {
      Integer p = 0;
      for (std::size_t i = 0; i < e.size(); ++i) p += e[i] * ray[i];
      if (p < 0) return false;
    }
  }
  return face_projection(shifted, tau) == initial_form(f, interior_point(tau)).shifted(u);
}

std::vector<LaurentPoly> orbit_generators(const std::vector<LaurentPoly>& gens, const FlagCone& cone) {
  // No rays: the orbit is the whole torus and no shift is needed.
  if (cone.dim() == 0) return gens;
  const LatticeSplit split = lattice_complement(cone.rays, cone.n);
  const int m = static_cast<int>(split.perp_basis.size());
  std::vector<LaurentPoly> out;
  for (const auto& g : gens) {
    const LaurentPoly image = face_projection(g.shifted(monomial_shift(g, cone)), cone);
    LaurentPoly rewritten(m);
    for (const auto& [e, c] : image.terms()) {
      const IntVector v(e.begin(), e.end());
      const auto coords = lattice_coordinates(split.perp_basis, v);
      if (!coords)
        throw Error(ErrorCode::kInvalidArgument, "exponent outside sigma^perp after projection");
      Exponent small(m);
      for (int k = 0; k < m; ++k) small[k] = static_cast<int>((*coords)[k]);
      rewritten.add_term(small, c);
    }
    out.push_back(std::move(rewritten));
  }
  return out;
}

std::optional<FlagCone> locate_cone(const Matroid& m, const WeightVector& w) {
  if (!w.sums_to_zero())
    throw Error(ErrorCode::kInvalidArgument, "w=" + to_string(w) + " does not sum to zero");
  std::vector<Rational> levels(w.values().begin(), w.values().end());
  std::sort(levels.begin(), levels.end(), std::greater<>());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  std::vector<Subset> flag;
  for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
    Subset upper = 0;
    for (int i = 1; i <= w.size(); ++i)
      if (w[i] >= levels[k]) upper |= element_bit(i);
    if (!m.is_flat(upper)) return std::nullopt;
    flag.push_back(upper);
  }
  if (m.has_loop()) return std::nullopt;
  return make_cone(m.size(), std::move(flag));
}

Integer unimodularity_index(const FlagCone& cone) {
  return cone_lattice_index(cone.rays, cone.n);
}

}  // namespace milnor
