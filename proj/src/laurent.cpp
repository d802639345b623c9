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

#include "milnor/laurent.hpp"

#include <algorithm>
#include <set>

#include "milnor/error.hpp"

namespace milnor {

LaurentPoly LaurentPoly::monomial(Exponent exponent, const Rational& coefficient) {
  LaurentPoly f(static_cast<int>(exponent.size()));
  f.add_term(exponent, coefficient);
  return f;
}

LaurentPoly LaurentPoly::constant(int num_vars, const Rational& value) {
  return monomial(Exponent(num_vars, 0), value);
}

LaurentPoly LaurentPoly::variable(int num_vars, int index) {
  Exponent e(num_vars, 0);
  e.at(index) = 1;
  return monomial(std::move(e));
}

Rational LaurentPoly::coefficient(const Exponent& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(const Exponent& e, const Rational& c) {
  if (static_cast<int>(e.size()) != num_vars_)
    throw Error(ErrorCode::kInvalidArgument, "exponent length does not match the ring");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (num_vars_ != o.num_vars_) throw Error(ErrorCode::kInvalidArgument, "ring mismatch");
  LaurentPoly out(num_vars_);
  Exponent e(num_vars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (int k = 0; k < num_vars_; ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

LaurentPoly LaurentPoly::operator*(const Rational& c) const {
  LaurentPoly out(num_vars_);
  if (c.is_zero()) return out;
  out.terms_ = terms_;
  for (auto& [e, v] : out.terms_) v *= c;
  return out;
}

LaurentPoly LaurentPoly::shifted(const Exponent& u) const {
  return *this * monomial(u);
}

int LaurentPoly::homogeneous_degree() const {
  int degree = -1;
  for (const auto& [e, c] : terms_) {
    int total = 0;
    for (int x : e) total += x;
    if (degree == -1) {
      degree = total;
    } else if (degree != total) {
      return -1;
    }
  }
  return degree;
}

std::vector<int> LaurentPoly::variables_used() const {
  std::set<int> used;
  for (const auto& [e, c] : terms_)
    for (int k = 0; k < num_vars_; ++k)
      if (e[k] != 0) used.insert(k);
  return {used.begin(), used.end()};
}

std::string to_string(const LaurentPoly& f, int first_index) {
  if (f.is_zero()) return "0";
  std::string out;
  // Print higher total degree first for readability.
  std::vector<std::pair<Exponent, Rational>> terms(f.terms().begin(), f.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    int da = 0, db = 0;
    for (int x : a.first) da += x;
    for (int x : b.first) db += x;
    if (da != db) return da > db;
    return a.first > b.first;
  });
  for (const auto& [e, c] : terms) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(static_cast<int>(k) + first_index);
      if (e[k] != 1) mono += "^" + std::to_string(e[k]);
    }
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

Rational pairing(const Exponent& e, std::span<const Rational> w) {
  if (e.size() != w.size()) throw Error(ErrorCode::kInvalidArgument, "weight length mismatch");
  Rational acc = 0;
  for (std::size_t k = 0; k < e.size(); ++k)
    if (e[k] != 0) acc += e[k] * w[k];
  return acc;
}

LaurentPoly initial_form(const LaurentPoly& f, std::span<const Rational> w) {
  if (f.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "initial form of the zero polynomial");
  Rational best;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    Rational value = pairing(e, w);
    if (first || value < best) best = std::move(value);
    first = false;
  }
  LaurentPoly out(f.num_vars());
  for (const auto& [e, c] : f.terms())
    if (pairing(e, w) == best) out.add_term(e, c);
  return out;
}

LaurentPoly initial_form(const LaurentPoly& f, const WeightVector& w) {
  return initial_form(f, w.values());
}

bool is_scalar_multiple(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.num_vars() != b.num_vars() || a.size() != b.size() || a.is_zero()) return false;
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  const Rational ratio = ia->second / ib->second;
  for (; ia != a.terms().end(); ++ia, ++ib) {
    if (ia->first != ib->first || ia->second != ratio * ib->second) return false;
  }
  return true;
}

LaurentPoly torus_equation(int n) {
  LaurentPoly f = LaurentPoly::monomial(Exponent(n, 1));
  f.add_term(Exponent(n, 0), Rational(-1));
  return f;
}

LaurentPoly subset_monomial(int n, Subset s) {
  Exponent e(n, 0);
  for (int i : elements_of(s)) e[i - 1] = 1;
  return LaurentPoly::monomial(std::move(e));
}

Subset LinearForm::support() const {
  Subset s = 0;
  for (int i = 1; i <= size(); ++i)
    if (!(*this)[i].is_zero()) s |= element_bit(i);
  return s;
}

LinearForm LinearForm::normalized_at(int i) const {
  if (i < 1 || i > size() || (*this)[i].is_zero())
    throw Error(ErrorCode::kInvalidArgument, "x" + std::to_string(i) + " is not in the support");
  const Rational scale = (*this)[i];
  std::vector<Rational> out = coefficients_;
  for (auto& c : out) c /= scale;
  return LinearForm(std::move(out));
}

LaurentPoly LinearForm::to_poly() const {
  LaurentPoly f(size());
  for (int i = 1; i <= size(); ++i) {
    Exponent e(size(), 0);
    e[i - 1] = 1;
    f.add_term(e, (*this)[i]);
  }
  return f;
}

bool is_scalar_multiple(const LinearForm& a, const LinearForm& b) {
  return is_scalar_multiple(a.to_poly(), b.to_poly());
}

}  // namespace milnor
