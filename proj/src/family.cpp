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

#include "milnor/family.hpp"

#include <cctype>
#include <sstream>

#include "milnor/error.hpp"
#include "milnor/matrix.hpp"

namespace milnor {

struct Expression::Node {
  enum class Kind { kConstant, kParameter, kAdd, kSub, kMul, kDiv, kNeg, kPow };
  Kind kind = Kind::kConstant;
  Integer value;  // constant, or exponent for kPow
  std::shared_ptr<const Node> left;
  std::shared_ptr<const Node> right;
};

namespace {

using Node = Expression::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make(Node::Kind kind, NodePtr left = nullptr, NodePtr right = nullptr, Integer value = 0) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->left = std::move(left);
  node->right = std::move(right);
  node->value = std::move(value);
  return node;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse() {
    NodePtr root = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::kParseError,
                what + " at column " + std::to_string(pos_ + 1) + " of \"" + std::string(text_) + "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr expression() {
    NodePtr left = term();
    for (;;) {
      if (accept('+')) {
        left = make(Node::Kind::kAdd, left, term());
      } else if (accept('-')) {
        left = make(Node::Kind::kSub, left, term());
      } else {
        return left;
      }
    }
  }

  NodePtr term() {
    NodePtr left = power();
    for (;;) {
      if (accept('*')) {
        left = make(Node::Kind::kMul, left, power());
      } else if (accept('/')) {
        left = make(Node::Kind::kDiv, left, power());
      } else {
        return left;
      }
    }
  }

  NodePtr power() {
    NodePtr base = unary();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a nonnegative integer exponent");
    return make(Node::Kind::kPow, base, nullptr, Integer(std::string(text_.substr(start, pos_ - start))));
  }

  NodePtr unary() {
    if (accept('-')) return make(Node::Kind::kNeg, unary());
    return primary();
  }

  NodePtr primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    if (accept('(')) {
      NodePtr inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (text_[pos_] == 't') {
      ++pos_;
      return make(Node::Kind::kParameter);
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number, t or '('");
    return make(Node::Kind::kConstant, nullptr, nullptr, Integer(std::string(text_.substr(start, pos_ - start))));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::optional<Zp> evaluate_node(const Node& node, const Zp& t) {
  const std::uint64_t p = t.modulus();
  switch (node.kind) {
    case Node::Kind::kConstant:
      return Zp(static_cast<std::int64_t>(reduce_mod(node.value, p)), p);
    case Node::Kind::kParameter:
      return t;
    case Node::Kind::kNeg: {
      auto x = evaluate_node(*node.left, t);
      if (!x) return std::nullopt;
      return -*x;
    }
    case Node::Kind::kPow: {
      auto x = evaluate_node(*node.left, t);
      if (!x) return std::nullopt;
      return x->pow(static_cast<std::uint64_t>(node.value));
    }
    default:
      break;
  }
  auto a = evaluate_node(*node.left, t);
  auto b = evaluate_node(*node.right, t);
  if (!a || !b) return std::nullopt;
  switch (node.kind) {
    case Node::Kind::kAdd:
      return *a + *b;
    case Node::Kind::kSub:
      return *a - *b;
    case Node::Kind::kMul:
      return *a * *b;
    case Node::Kind::kDiv:
      if (is_zero(*b)) return std::nullopt;
      return *a / *b;
    default:
      return std::nullopt;
  }
}

}  // namespace

Expression Expression::parse(std::string_view text) {
  Expression e;
  e.text_ = std::string(text);
  e.root_ = Parser(text).parse();
  return e;
}

std::optional<Zp> Expression::evaluate(const Zp& t) const { return evaluate_node(*root_, t); }

std::optional<Matroid> column_matroid(const Matrix<Zp>& a) {
  const int d = static_cast<int>(a.rows());
  const int n = static_cast<int>(a.cols());
  if (d == 0 || n > kMaxGroundSet) throw Error(ErrorCode::kInvalidArgument, "matrix shape out of range");
  std::vector<Subset> bases;
  for (Subset s = 0; s <= full_set(n); ++s) {
    if (cardinality(s) == d) {
      std::vector<std::size_t> cols;
      for (int e : elements_of(s)) cols.push_back(static_cast<std::size_t>(e - 1));
      if (rank(a.select_columns(cols)) == static_cast<std::size_t>(d)) bases.push_back(s);
    }
    if (s == full_set(n)) break;
  }
  if (bases.empty()) return std::nullopt;
  return Matroid::from_bases(n, d, std::move(bases));
}

bool InvarianceReport::passed() const {
  for (const auto& summary : primes)
    if (!summary.constant || summary.valid_samples == 0) return false;
  return !primes.empty();
}

InvarianceReport run_invariance(const FamilySpec& family, const std::vector<std::uint64_t>& primes,
                                const CountConfig& config) {
  if (family.matrix.empty() || family.matrix.front().empty())
    throw Error(ErrorCode::kInvalidArgument, "family has an empty matrix");
  const std::size_t d = family.matrix.size();
  const std::size_t n = family.matrix.front().size();
  InvarianceReport report;
  for (std::uint64_t p : primes) {
    if (!is_prime(p)) throw Error(ErrorCode::kBadPrime, std::to_string(p) + " is not prime");
    PrimeSummary summary;
    summary.p = p;
    std::vector<long long> values;
    if (family.parameters) {
      values = *family.parameters;
    } else {
      for (std::uint64_t t = 0; t < p; ++t) values.push_back(static_cast<long long>(t));
    }
    for (long long t : values) {
      FamilySample sample;
      sample.p = p;
      sample.t = t;
      const Zp tp(t, p);
      Matrix<Zp> a(d, n, Zp(0, p));
      for (std::size_t r = 0; r < d && sample.reason.empty(); ++r) {
        for (std::size_t c = 0; c < n; ++c) {
          auto value = family.matrix[r][c].evaluate(tp);
          if (!value) {
            sample.reason = "division by zero in entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")";
            break;
          }
          a(r, c) = *value;
        }
      }
      if (sample.reason.empty()) {
        const auto m = column_matroid(a);
        if (!m || m->rank() != static_cast<int>(d)) {
          sample.reason = "rank deficient";
        } else if (family.expected && !(*m == *family.expected)) {
          sample.reason = "matroid degenerates to " + format_bases(*m);
        }
      }
      if (!sample.reason.empty()) {
        sample.excluded = true;
      } else {
        sample.count = milnor_count_mod_p(a, config);
        ++summary.valid_samples;
        if (!summary.common_value) {
          summary.common_value = sample.count;
        } else if (*summary.common_value != sample.count) {
          summary.constant = false;
        }
      }
      report.samples.push_back(std::move(sample));
    }
    if (!summary.constant) summary.common_value.reset();
    report.primes.push_back(summary);
  }
  return report;
}

InvarianceReport invariance_harness(const FamilySpec& family, const std::vector<std::uint64_t>& primes,
                                    const CountConfig& config) {
  InvarianceReport report = run_invariance(family, primes, config);
  for (const auto& summary : report.primes) {
    if (summary.constant) continue;
    const FamilySample* first = nullptr;
    for (const auto& s : report.samples) {
      if (s.p != summary.p || s.excluded) continue;
      if (first == nullptr) {
        first = &s;
      } else if (s.count != first->count) {
        throw Error(ErrorCode::kInvarianceFailed,
                    "p=" + std::to_string(summary.p) + ": t=" + std::to_string(first->t) + " gives " +
                        std::to_string(first->count) + ", t=" + std::to_string(s.t) + " gives " +
                        std::to_string(s.count));
      }
    }
  }
  return report;
}

std::string to_csv(const InvarianceReport& report) {
  std::ostringstream out;
  out << "prime,parameter,count,status\n";
  for (const auto& s : report.samples) {
    out << s.p << ',' << s.t << ',';
    if (s.excluded) {
      out << ",excluded: " << s.reason << '\n';
    } else {
      out << s.count << ",ok\n";
    }
  }
  return out.str();
}

EPolynomial epoly_interpolate(const std::map<std::uint64_t, Integer>& counts, int degree_bound) {
  EPolynomial out;
  if (degree_bound < 0 || counts.size() < static_cast<std::size_t>(degree_bound) + 2) {
    out.note = "NOT_POLYNOMIAL: need at least degree_bound + 2 primes";
    return out;
  }
  std::vector<std::pair<Integer, Integer>> points;
  for (const auto& [p, c] : counts) points.emplace_back(Integer(p), c);
  for (int degree = 0; degree <= degree_bound; ++degree) {
    // Vandermonde system on the first degree + 1 points.
    std::vector<std::vector<Rational>> rows;
    for (int r = 0; r <= degree; ++r) {
      std::vector<Rational> row;
      Integer power = 1;
      for (int k = 0; k <= degree; ++k) {
        row.emplace_back(power);
        power *= points[r].first;
      }
      row.emplace_back(points[r].second);
      rows.push_back(std::move(row));
    }
    const auto [reduced, pivots] = rref(Matrix<Rational>::from_rows(rows));
    std::vector<Integer> coefficients;
    bool integral = true;
    for (int k = 0; k <= degree; ++k) {
      const Rational& c = reduced(k, degree + 1);
      if (denominator(c) != 1) integral = false;
      coefficients.push_back(numerator(c));
    }
    if (!integral) continue;
    bool fits = true;
    for (const auto& [x, y] : points) {
      Integer value = 0;
      for (std::size_t k = coefficients.size(); k-- > 0;) value = value * x + coefficients[k];
      if (value != y) fits = false;
    }
    if (fits) {
      while (coefficients.size() > 1 && coefficients.back() == 0) coefficients.pop_back();
      out.coefficients = std::move(coefficients);
      out.note = "heuristic: agreement at finitely many primes";
      return out;
    }
  }
  out.note = "NOT_POLYNOMIAL";
  return out;
}

std::string to_string(const std::vector<Integer>& polynomial, char variable) {
  std::string out;
  for (std::size_t k = polynomial.size(); k-- > 0;) {
    const Integer& c = polynomial[k];
    if (c == 0) continue;
    const Integer mag = c < 0 ? Integer(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || k == 0) out += mag.str();
    if (k >= 1) out += variable;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

}  // namespace milnor
