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

#include "milnor/matroid.hpp"

#include <algorithm>
#include <numeric>

#include "milnor/error.hpp"

namespace milnor {

WeightVector WeightVector::from_integers(const std::vector<long>& w) {
  std::vector<Rational> q;
  q.reserve(w.size());
  for (long x : w) q.emplace_back(x);
  return WeightVector(std::move(q));
}

Rational WeightVector::weight_of(Subset s) const {
  Rational acc = 0;
  for (int e : elements_of(s)) acc += w_[e - 1];
  return acc;
}

Rational WeightVector::total() const {
  Rational acc = 0;
  for (const auto& x : w_) acc += x;
  return acc;
}

Rational WeightVector::max() const {
  Rational best = w_.empty() ? Rational(0) : w_.front();
  for (const auto& x : w_) best = std::max(best, x);
  return best;
}

WeightVector WeightVector::shifted(const Rational& c) const {
  std::vector<Rational> out = w_;
  for (auto& x : out) x += c;
  return WeightVector(std::move(out));
}

std::string to_string(const WeightVector& w) {
  std::string out = "(";
  for (int i = 1; i <= w.size(); ++i) {
    if (i > 1) out += ",";
    out += to_string(w[i]);
  }
  return out + ")";
}

Matroid::Matroid(int n, int d, std::vector<Subset> bases)
    : n_(n), d_(d), bases_(std::move(bases)) {
  std::sort(bases_.begin(), bases_.end(), subset_lex_less);
  bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());

  const std::size_t total = std::size_t{1} << n_;
  basis_table_.assign(total, false);
  for (Subset b : bases_) basis_table_[b] = true;

  // Independent sets are the subsets of bases; sweep from large to small.
  std::vector<bool> independent(total, false);
  for (std::size_t s = total; s-- > 0;) {
    if (basis_table_[s]) {
      independent[s] = true;
      continue;
    }
    if (cardinality(static_cast<Subset>(s)) >= d_) continue;
    for (int e = 1; e <= n_; ++e) {
      if (!contains(static_cast<Subset>(s), e) && independent[s | element_bit(e)]) {
        independent[s] = true;
        break;
      }
    }
  }
  rank_table_.assign(total, 0);
  for (std::size_t s = 1; s < total; ++s) {
    if (independent[s]) {
      rank_table_[s] = static_cast<std::uint8_t>(cardinality(static_cast<Subset>(s)));
      continue;
    }
    std::uint8_t best = 0;
    for (Subset rest = static_cast<Subset>(s); rest != 0; rest &= rest - 1) {
      const Subset without = static_cast<Subset>(s) & ~(rest & (~rest + 1));
      best = std::max(best, rank_table_[without]);
    }
    rank_table_[s] = best;
  }
}

Matroid Matroid::from_bases(int n, int d, std::vector<Subset> bases) {
  if (n < 1 || n > kMaxGroundSet)
    throw Error(ErrorCode::kInvalidArgument, "ground set size must lie in [1, " +
                                                 std::to_string(kMaxGroundSet) + "]");
  if (d < 1 || d > n) throw Error(ErrorCode::kInvalidArgument, "rank must lie in [1, n]");
  if (bases.empty()) throw Error(ErrorCode::kInvalidArgument, "a matroid needs at least one basis");
  for (Subset b : bases) {
    if ((b & ~full_set(n)) != 0)
      throw Error(ErrorCode::kInvalidArgument, format_subset(b) + " is not a subset of the ground set");
    if (cardinality(b) != d)
      throw Error(ErrorCode::kWrongCardinality,
                  format_subset(b) + " has " + std::to_string(cardinality(b)) + " elements, expected " +
                      std::to_string(d));
  }
  std::sort(bases.begin(), bases.end(), subset_lex_less);
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());

  std::vector<bool> is_base(std::size_t{1} << n, false);
  for (Subset b : bases) is_base[b] = true;
  for (Subset b1 : bases) {
    for (Subset b2 : bases) {
      const Subset only1 = b1 & ~b2;
      const Subset only2 = b2 & ~b1;
      for (int x : elements_of(only1)) {
        bool found = false;
        for (int y : elements_of(only2)) {
          if (is_base[(b1 & ~element_bit(x)) | element_bit(y)]) {
            found = true;
            break;
          }
        }
        if (!found)
          throw Error(ErrorCode::kExchangeAxiomViolation,
                      "B1=" + format_subset(b1) + ", B2=" + format_subset(b2) + ", x=" + std::to_string(x) +
                          " has no exchange partner");
      }
    }
  }
  return Matroid(n, d, std::move(bases));
}

Matroid Matroid::uniform(int d, int n) {
  std::vector<Subset> bases;
  for (Subset s = 0; s <= full_set(n); ++s) {
    if (cardinality(s) == d) bases.push_back(s);
    if (s == full_set(n)) break;
  }
  return from_bases(n, d, std::move(bases));
}

bool Matroid::is_basis(Subset s) const { return s < basis_table_.size() && basis_table_[s]; }

bool Matroid::is_independent(Subset s) const { return rank_table_[s] == cardinality(s); }

Subset Matroid::closure(Subset s) const {
  const int r = rank_of(s);
  Subset out = s;
  for (int e = 1; e <= n_; ++e)
    if (!contains(s, e) && rank_of(s | element_bit(e)) == r) out |= element_bit(e);
  return out;
}

Subset Matroid::loops() const {
  Subset out = 0;
  for (int e = 1; e <= n_; ++e)
    if (rank_of(element_bit(e)) == 0) out |= element_bit(e);
  return out;
}

std::string format_bases(const Matroid& m) {
  std::string out;
  for (Subset b : m.bases()) {
    if (!out.empty()) out += " ";
    out += format_subset(b);
  }
  return out;
}

std::vector<Subset> circuits(const Matroid& m) {
  std::vector<Subset> out;
  const Subset ground = m.ground_set();
  for (Subset s = 1; s <= ground; ++s) {
    if (m.is_independent(s)) {
      if (s == ground) break;
      continue;
    }
    // Dependent with every proper subset independent: removing any single
    // element must restore independence.
    bool minimal = true;
    for (int e : elements_of(s)) {
      if (!m.is_independent(s & ~element_bit(e))) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(s);
    if (s == ground) break;
  }
  std::sort(out.begin(), out.end(), subset_lex_less);
  return out;
}

Subset fundamental_circuit(const Matroid& m, int element, Subset basis) {
  if (!m.is_basis(basis)) throw Error(ErrorCode::kNotABasis, format_subset(basis));
  if (element < 1 || element > m.size())
    throw Error(ErrorCode::kInvalidArgument, "element " + std::to_string(element) + " out of range");
  if (contains(basis, element))
    throw Error(ErrorCode::kElementInBasis, std::to_string(element) + " in " + format_subset(basis));
  Subset circuit = element_bit(element);
  for (int j : elements_of(basis))
    if (m.is_basis((basis & ~element_bit(j)) | element_bit(element))) circuit |= element_bit(j);
  return circuit;
}

Matroid weight_matroid(const Matroid& m, const WeightVector& w) {
  if (w.size() != m.size()) throw Error(ErrorCode::kInvalidArgument, "weight vector has wrong length");
  std::vector<Rational> weights;
  weights.reserve(m.bases().size());
  for (Subset b : m.bases()) weights.push_back(w.weight_of(b));
  const Rational best = *std::max_element(weights.begin(), weights.end());
  std::vector<Subset> kept;
  for (std::size_t i = 0; i < weights.size(); ++i)
    if (weights[i] == best) kept.push_back(m.bases()[i]);
  return Matroid::from_bases(m.size(), m.rank(), std::move(kept));
}

Subset greedy_basis(const Matroid& m, const WeightVector& w) {
  if (w.size() != m.size()) throw Error(ErrorCode::kInvalidArgument, "weight vector has wrong length");
  std::vector<int> order(m.size());
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return w[a] > w[b]; });
  Subset basis = 0;
  for (int e : order)
    if (m.is_independent(basis | element_bit(e))) basis |= element_bit(e);
  return basis;
}

bool in_bergman(const Matroid& m, const WeightVector& w) { return !weight_matroid(m, w).has_loop(); }

long long CharacteristicPolynomial::evaluate(long long t) const {
  long long acc = 0;
  for (std::size_t k = coefficients.size(); k-- > 0;) acc = acc * t + coefficients[k];
  return acc;
}

Integer CharacteristicPolynomial::evaluate(const Integer& t) const {
  Integer acc = 0;
  for (std::size_t k = coefficients.size(); k-- > 0;) acc = acc * t + coefficients[k];
  return acc;
}

std::string to_string(const CharacteristicPolynomial& chi) {
  std::string out;
  for (std::size_t k = chi.coefficients.size(); k-- > 0;) {
    const long long c = chi.coefficients[k];
    if (c == 0) continue;
    const long long mag = c < 0 ? -c : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (mag != 1 || k == 0) out += std::to_string(mag);
    if (k >= 1) out += "t";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

CharacteristicPolynomial characteristic_polynomial(const Matroid& m) {
  CharacteristicPolynomial chi;
  chi.coefficients.assign(static_cast<std::size_t>(m.rank()) + 1, 0);
  chi.has_loop = m.has_loop();
  const Subset ground = m.ground_set();
  for (Subset s = 0;; ++s) {
    const int power = m.rank() - m.rank_of(s);
    chi.coefficients[power] += (cardinality(s) % 2 == 0) ? 1 : -1;
    if (s == ground) break;
  }
  return chi;
}

long long mobius_number(const Matroid& m) {
  const long long c0 = characteristic_polynomial(m).coefficients.front();
  return c0 < 0 ? -c0 : c0;
}

ParallelClasses parallel_classes(const Matroid& m) {
  if (m.has_loop()) throw Error(ErrorCode::kHasLoop, "loops " + format_subset(m.loops()));
  ParallelClasses out;
  Subset assigned = 0;
  for (int i = 1; i <= m.size(); ++i) {
    if (contains(assigned, i)) continue;
    Subset cls = element_bit(i);
    for (int j = i + 1; j <= m.size(); ++j)
      if (m.rank_of(element_bit(i) | element_bit(j)) == 1) cls |= element_bit(j);
    assigned |= cls;
    out.classes.push_back(cls);
    out.gcd = std::gcd(out.gcd, static_cast<long>(cardinality(cls)));
  }
  return out;
}

bool has_parallel_pair(const Matroid& m) {
  for (Subset cls : parallel_classes(m).classes)
    if (cardinality(cls) > 1) return true;
  return false;
}

FlatLattice flats(const Matroid& m) {
  if (m.has_loop()) throw Error(ErrorCode::kHasLoop, "loops " + format_subset(m.loops()));
  FlatLattice lattice;
  const Subset ground = m.ground_set();
  for (Subset s = 0;; ++s) {
    if (m.is_flat(s)) lattice.flats.push_back(s);
    if (s == ground) break;
  }
  std::sort(lattice.flats.begin(), lattice.flats.end(), [&](Subset a, Subset b) {
    if (m.rank_of(a) != m.rank_of(b)) return m.rank_of(a) < m.rank_of(b);
    return subset_lex_less(a, b);
  });
  for (Subset f : lattice.flats) lattice.ranks.push_back(m.rank_of(f));
  for (std::size_t i = 0; i < lattice.flats.size(); ++i)
    for (std::size_t j = 0; j < lattice.flats.size(); ++j)
      if (lattice.ranks[j] == lattice.ranks[i] + 1 && (lattice.flats[i] & ~lattice.flats[j]) == 0)
        lattice.covers.emplace_back(i, j);
  return lattice;
}

}  // namespace milnor
