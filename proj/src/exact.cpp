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

#include "milnor/exact.hpp"

#include <cctype>
#include <string>

#include "milnor/error.hpp"

namespace milnor {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  s = trim(s);
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) throw Error(ErrorCode::kParseError, "bad rational '" + std::string(whole) + "'");
  for (std::size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      throw Error(ErrorCode::kParseError, "bad rational '" + std::string(whole) + "'");
  return Integer(std::string(s[0] == '+' ? s.substr(1) : s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  const Integer num = parse_integer(text.substr(0, slash), text);
  const Integer den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw Error(ErrorCode::kParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

std::vector<Integer> primitive_integer_vector(const std::vector<Rational>& v) {
  Integer lcm_den = 1;
  for (const auto& q : v) lcm_den = boost::multiprecision::lcm(lcm_den, Integer(denominator(q)));
  std::vector<Integer> out;
  out.reserve(v.size());
  Integer g = 0;
  for (const auto& q : v) {
    out.push_back(Integer(numerator(q)) * (lcm_den / Integer(denominator(q))));
    g = boost::multiprecision::gcd(g, out.back());
  }
  if (g > 1)
    for (auto& z : out) z /= g;
  return out;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t f = 2; f * f <= p; ++f)
    if (p % f == 0) return false;
  return true;
}

Zp::Zp(std::int64_t value, std::uint64_t p) : p_(p) {
  const auto sp = static_cast<std::int64_t>(p);
  std::int64_t r = value % sp;
  if (r < 0) r += sp;
  value_ = static_cast<std::uint64_t>(r);
}

Zp Zp::pow(std::uint64_t e) const {
  Zp base = *this;
  Zp acc(1, p_);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Zp Zp::inverse() const {
  if (value_ == 0) throw Error(ErrorCode::kInvalidArgument, "division by zero in F_" + std::to_string(p_));
  return pow(p_ - 2);
}

std::uint64_t reduce_mod(const Integer& z, std::uint64_t p) {
  Integer r = z % Integer(p);
  if (r < 0) r += p;
  return r.convert_to<std::uint64_t>();
}

Zp reduce_mod(const Rational& q, std::uint64_t p) {
  const std::uint64_t den = reduce_mod(Integer(denominator(q)), p);
  if (den == 0)
    throw Error(ErrorCode::kBadPrime, to_string(q) + " has no reduction mod " + std::to_string(p));
  const std::uint64_t num = reduce_mod(Integer(numerator(q)), p);
  return Zp(static_cast<std::int64_t>(num), p) / Zp(static_cast<std::int64_t>(den), p);
}

std::uint64_t primitive_root(std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::kInvalidArgument, std::to_string(p) + " is not prime");
  if (p == 2) return 1;
  std::vector<std::uint64_t> factors;
  std::uint64_t m = p - 1;
  for (std::uint64_t f = 2; f * f <= m; ++f) {
    if (m % f != 0) continue;
    factors.push_back(f);
    while (m % f == 0) m /= f;
  }
  if (m > 1) factors.push_back(m);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool generator = true;
    for (auto f : factors) {
      if (Zp(static_cast<std::int64_t>(g), p).pow((p - 1) / f).value() == 1) {
        generator = false;
        break;
      }
    }
    if (generator) return g;
  }
  return 1;
}

}  // namespace milnor
