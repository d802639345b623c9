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

#include "milnor/lattice.hpp"

#include <utility>

#include "milnor/error.hpp"
#include "milnor/matrix.hpp"

namespace milnor {
namespace {

struct Bezout {
  Integer g, s, t;  // g = s*a + t*b, g >= 0
};

Bezout extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const Integer q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
    old_t -= q * t;
    std::swap(old_t, t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

using IntMatrix = std::vector<IntVector>;  // row-major

void column_combine(IntMatrix& m, std::size_t i, std::size_t j, const Integer& a, const Integer& b,
                    const Integer& c, const Integer& d) {
  // col_i <- a col_i + b col_j ; col_j <- c col_i + d col_j
  for (auto& row : m) {
    const Integer xi = row[i], xj = row[j];
    row[i] = a * xi + b * xj;
    row[j] = c * xi + d * xj;
  }
}

void column_swap(IntMatrix& m, std::size_t i, std::size_t j) {
  for (auto& row : m) std::swap(row[i], row[j]);
}

Matrix<Rational> to_rational_columns(const std::vector<IntVector>& cols, int n) {
  Matrix<Rational> m(static_cast<std::size_t>(n), cols.size(), Rational(0));
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (int r = 0; r < n; ++r) m(r, c) = Rational(cols[c][r]);
  return m;
}

}  // namespace

Integer dot(const IntVector& a, const IntVector& b) {
  Integer acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

std::vector<IntVector> integer_kernel(const std::vector<IntVector>& rows, int n) {
  const auto un = static_cast<std::size_t>(n);
  IntMatrix a = rows;
  IntMatrix u(un, IntVector(un, Integer(0)));
  for (std::size_t i = 0; i < un; ++i) u[i][i] = 1;

  std::size_t lead = 0;
  for (std::size_t r = 0; r < a.size() && lead < un; ++r) {
    if (a[r].size() != un) throw Error(ErrorCode::kInvalidArgument, "ray of wrong length");
    for (std::size_t c = lead + 1; c < un; ++c) {
      if (a[r][c] == 0) continue;
      if (a[r][lead] == 0) {
        column_swap(a, lead, c);
        column_swap(u, lead, c);
        continue;
      }
      const Integer x = a[r][lead], y = a[r][c];
      const Bezout bz = extended_gcd(x, y);
      const Integer cx = -y / bz.g, cy = x / bz.g;
      column_combine(a, lead, c, bz.s, bz.t, cx, cy);
      column_combine(u, lead, c, bz.s, bz.t, cx, cy);
    }
    if (a[r][lead] != 0) ++lead;
  }

  std::vector<IntVector> kernel;
  for (std::size_t c = lead; c < un; ++c) {
    IntVector v(un);
    for (std::size_t r = 0; r < un; ++r) v[r] = u[r][c];
    kernel.push_back(std::move(v));
  }
  return kernel;
}

LatticeSplit lattice_complement(const std::vector<IntVector>& rays, int n) {
  LatticeSplit split;
  split.perp_basis = integer_kernel(rays, n);
  split.span_basis = integer_kernel(split.perp_basis, n);
  std::vector<IntVector> all = split.span_basis;
  all.insert(all.end(), split.perp_basis.begin(), split.perp_basis.end());
  const Rational det = determinant(to_rational_columns(all, n));
  split.index = abs(numerator(det));
  return split;
}

std::optional<IntVector> lattice_coordinates(const std::vector<IntVector>& basis, const IntVector& v) {
  const int n = static_cast<int>(v.size());
  if (basis.empty()) {
    for (const auto& x : v)
      if (x != 0) return std::nullopt;
    return IntVector{};
  }
  std::vector<IntVector> cols = basis;
  cols.push_back(v);
  const auto [reduced, pivots] = rref(to_rational_columns(cols, n));
  if (!pivots.empty() && pivots.back() == basis.size()) return std::nullopt;
  IntVector coords(basis.size(), Integer(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const Rational& q = reduced(i, basis.size());
    if (denominator(q) != 1) return std::nullopt;
    coords[pivots[i]] = numerator(q);
  }
  if (pivots.size() != basis.size())
    throw Error(ErrorCode::kInvalidArgument, "lattice basis is linearly dependent");
  return coords;
}

IntVector primitive(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
  if (g <= 1) return v;
  IntVector out = v;
  for (auto& x : out) x /= g;
  return out;
}

Integer cone_lattice_index(const std::vector<IntVector>& rays, int n) {
  if (rays.empty()) return 1;
  const auto split = lattice_complement(rays, n);
  const std::size_t k = split.span_basis.size();
  if (k != rays.size()) throw Error(ErrorCode::kInvalidArgument, "cone rays are linearly dependent");
  Matrix<Rational> coords(k, k, Rational(0));
  for (std::size_t i = 0; i < k; ++i) {
    const auto c = lattice_coordinates(split.span_basis, primitive(rays[i]));
    if (!c) throw Error(ErrorCode::kInvalidArgument, "ray outside its own saturated span");
    for (std::size_t j = 0; j < k; ++j) coords(i, j) = Rational((*c)[j]);
  }
  return abs(numerator(determinant(coords)));
}

}  // namespace milnor
