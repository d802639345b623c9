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

// Exact scalars: arbitrary precision integers and rationals, and elements of
// prime fields.

#ifndef MILNOR_EXACT_HPP_
#define MILNOR_EXACT_HPP_

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace milnor {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Accepts "a", "-a", "a/b" with optional surrounding whitespace.
Rational parse_rational(std::string_view text);

// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return q.is_zero(); }

inline Rational scalar_like(const Rational&, long value) { return Rational(value); }

// Lowest common denominator times q, as a vector of coprime integers.  The
// zero vector maps to itself.
std::vector<Integer> primitive_integer_vector(const std::vector<Rational>& v);

bool is_prime(std::uint64_t p);

// Element of Z/pZ.  The modulus travels with the value so that generic
// linear algebra can run over any prime field without global state.
class Zp {
 public:
  Zp() = default;
  Zp(std::int64_t value, std::uint64_t p);

  std::uint64_t value() const { return value_; }
  std::uint64_t modulus() const { return p_; }

  Zp operator+(const Zp& o) const { return Zp(raw(value_ + o.value_ >= p_ ? value_ + o.value_ - p_ : value_ + o.value_)); }
  Zp operator-(const Zp& o) const { return Zp(raw(value_ >= o.value_ ? value_ - o.value_ : value_ + p_ - o.value_)); }
  Zp operator-() const { return Zp(raw(value_ == 0 ? 0 : p_ - value_)); }
  Zp operator*(const Zp& o) const { return Zp(raw(static_cast<std::uint64_t>(static_cast<unsigned __int128>(value_) * o.value_ % p_))); }
  Zp operator/(const Zp& o) const { return *this * o.inverse(); }
  Zp& operator+=(const Zp& o) { return *this = *this + o; }
  Zp& operator-=(const Zp& o) { return *this = *this - o; }
  Zp& operator*=(const Zp& o) { return *this = *this * o; }
  Zp& operator/=(const Zp& o) { return *this = *this / o; }
  bool operator==(const Zp& o) const { return value_ == o.value_ && p_ == o.p_; }

  Zp inverse() const;
  Zp pow(std::uint64_t e) const;

 private:
  struct Raw { std::uint64_t v; std::uint64_t p; };
  explicit Zp(Raw r) : value_(r.v), p_(r.p) {}
  Raw raw(std::uint64_t v) const { return {v, p_}; }

  std::uint64_t value_ = 0;
  std::uint64_t p_ = 2;
};

inline bool is_zero(const Zp& x) { return x.value() == 0; }
inline Zp scalar_like(const Zp& like, long value) { return Zp(value, like.modulus()); }

// Reduction of an exact rational; throws kBadPrime if p divides the
// denominator.
Zp reduce_mod(const Rational& q, std::uint64_t p);
std::uint64_t reduce_mod(const Integer& z, std::uint64_t p);

// Smallest generator of the multiplicative group of F_p.
std::uint64_t primitive_root(std::uint64_t p);

}  // namespace milnor

#endif  // MILNOR_EXACT_HPP_
