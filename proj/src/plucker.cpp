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

#include "milnor/plucker.hpp"

#include <algorithm>

#include "milnor/error.hpp"

namespace milnor {
namespace {

const Rational kZero(0);

// Next bitmask with the same popcount (Gosper).
Subset next_same_popcount(Subset s) {
  const Subset c = s & (~s + 1);
  const Subset r = s + c;
  return (((r ^ s) >> 2) / c) | r;
}

}  // namespace

const Rational& PluckerVector::operator[](Subset s) const {
  const auto it = coords_.find(s);
  return it == coords_.end() ? kZero : it->second;
}

std::vector<Subset> PluckerVector::support() const {
  std::vector<Subset> out;
  for (const auto& [s, v] : coords_)
    if (!v.is_zero()) out.push_back(s);
  return out;
}

bool PluckerVector::proportional_to(const PluckerVector& other) const {
  if (n_ != other.n_ || d_ != other.d_) return false;
  Rational ratio;
  bool have_ratio = false;
  for (const auto& [s, v] : coords_) {
    const Rational& w = other[s];
    if (v.is_zero() != w.is_zero()) return false;
    if (v.is_zero()) continue;
    if (!have_ratio) {
      ratio = w / v;
      have_ratio = true;
    } else if (w != ratio * v) {
      return false;
    }
  }
  for (const auto& [s, w] : other.coords_)
    if (!w.is_zero() && (*this)[s].is_zero()) return false;
  return have_ratio;
}

PluckerVector plucker(const Matrix<Rational>& m) {
  const int d = static_cast<int>(m.rows());
  const int n = static_cast<int>(m.cols());
  if (n > kMaxGroundSet) throw Error(ErrorCode::kInvalidArgument, "too many columns");
  if (d == 0 || static_cast<int>(rank(m)) < d)
    throw Error(ErrorCode::kRankDeficient, "matrix of size " + std::to_string(d) + "x" +
                                               std::to_string(n) + " does not have rank " +
                                               std::to_string(d));
  std::map<Subset, Rational> coords;
  for (Subset s = full_set(d); s <= full_set(n); s = next_same_popcount(s)) {
    std::vector<std::size_t> cols;
    for (int e : elements_of(s)) cols.push_back(static_cast<std::size_t>(e - 1));
    coords.emplace(s, determinant(m.select_columns(cols)));
    if (s == full_set(n)) break;
  }
  return PluckerVector(n, d, std::move(coords));
}

int sorting_sign(std::vector<int> sequence) {
  int sign = 1;
  for (std::size_t i = 0; i < sequence.size(); ++i)
    for (std::size_t j = i + 1; j < sequence.size(); ++j)
      if (sequence[i] > sequence[j]) sign = -sign;
  return sign;
}

Matrix<Rational> matrix_from_plucker(const PluckerVector& coords, Subset chart) {
  const Rational& pivot = coords[chart];
  if (pivot.is_zero())
    throw Error(ErrorCode::kInvalidArgument, "chart " + format_subset(chart) + " has zero coordinate");
  const int n = coords.size();
  const auto chart_elems = elements_of(chart);
  const auto d = chart_elems.size();
  Matrix<Rational> out(d, static_cast<std::size_t>(n), Rational(0));
  for (std::size_t l = 0; l < d; ++l) {
    for (int j = 1; j <= n; ++j) {
      if (contains(chart, j)) {
        if (chart_elems[l] == j) out(l, j - 1) = 1;
        continue;
      }
      std::vector<int> seq = chart_elems;
      seq[l] = j;
      const Subset replaced = (chart & ~element_bit(chart_elems[l])) | element_bit(j);
      const Rational& value = coords[replaced];
      if (!value.is_zero()) out(l, j - 1) = sorting_sign(seq) * value / pivot;
    }
  }
  return out;
}

}  // namespace milnor
