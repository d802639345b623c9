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

#include "milnor/arrangement.hpp"

#include <algorithm>
#include <numeric>

#include "milnor/error.hpp"

namespace milnor {
namespace {

void require_basis(const Matroid& m, Subset basis) {
  if (!m.is_basis(basis)) throw Error(ErrorCode::kNotABasis, format_subset(basis));
}

bool is_circuit(const Matroid& m, Subset s) {
  if (s == 0 || m.is_independent(s)) return false;
  for (int e : elements_of(s))
    if (!m.is_independent(s & ~element_bit(e))) return false;
  return true;
}

LinearForm linear_form_of(const LaurentPoly& f) {
  std::vector<Rational> coefficients(f.num_vars(), Rational(0));
  for (const auto& [e, c] : f.terms()) {
    const auto it = std::find(e.begin(), e.end(), 1);
    if (f.homogeneous_degree() != 1 || it == e.end())
      throw Error(ErrorCode::kInvalidArgument, "not a linear form: " + to_string(f));
    coefficients[it - e.begin()] = c;
  }
  return LinearForm(std::move(coefficients));
}

// Prepends an x0 slot to every exponent.
LaurentPoly homogenized_ring(const LaurentPoly& f) {
  LaurentPoly out(f.num_vars() + 1);
  for (const auto& [e, c] : f.terms()) {
    Exponent lifted(1, 0);
    lifted.insert(lifted.end(), e.begin(), e.end());
    out.add_term(lifted, c);
  }
  return out;
}

}  // namespace

Matroid matroid_from_plucker(const PluckerVector& p) {
  return Matroid::from_bases(p.size(), p.rank(), p.support());
}

Realization Realization::from_matrix(Matrix<Rational> matrix) {
  PluckerVector p = plucker(matrix);
  Matroid m = matroid_from_plucker(p);
  return Realization(std::move(matrix), std::move(p), std::move(m));
}

LinearForm circuit_form(const Realization& a, Subset circuit) {
  if (!is_circuit(a.matroid(), circuit))
    throw Error(ErrorCode::kNotACircuit, format_subset(circuit));
  const auto elems = elements_of(circuit);
  std::vector<std::size_t> cols;
  for (int e : elems) cols.push_back(static_cast<std::size_t>(e - 1));
  const auto kernel = kernel_basis(a.matrix().select_columns(cols));
  if (kernel.size() != 1)
    throw Error(ErrorCode::kNotACircuit, format_subset(circuit) + " has a kernel of dimension " +
                                             std::to_string(kernel.size()));
  std::vector<Rational> coefficients(a.size(), Rational(0));
  const Rational lead = kernel.front().front();
  for (std::size_t k = 0; k < elems.size(); ++k) coefficients[elems[k] - 1] = kernel.front()[k] / lead;
  return LinearForm(std::move(coefficients));
}

LinearForm circuit_form_plucker(const Realization& a, Subset basis, int j) {
  require_basis(a.matroid(), basis);
  if (contains(basis, j))
    throw Error(ErrorCode::kElementInBasis, std::to_string(j) + " in " + format_subset(basis));
  const PluckerVector& p = a.plucker_vector();
  const Subset extended = basis | element_bit(j);
  const auto seq = elements_of(extended);
  std::vector<Rational> coefficients(a.size(), Rational(0));
  for (std::size_t l = 0; l < seq.size(); ++l) {
    const Rational& minor = p[extended & ~element_bit(seq[l])];
    // l is 0-based here, so the sign (-1)^(l+1).
    coefficients[seq[l] - 1] = (l % 2 == 0 ? -minor : minor) / p[basis];
  }
  return LinearForm(std::move(coefficients));
}

LinearForm normalized_circuit_form(const Realization& a, int i, Subset basis) {
  return circuit_form(a, fundamental_circuit(a.matroid(), i, basis)).normalized_at(i);
}

InitialRealizationReport initial_realization_routes(const Realization& a, const WeightVector& w) {
  const Matroid mw = weight_matroid(a.matroid(), w);
  const Subset chart = mw.bases().front();

  std::map<Subset, Rational> truncated;
  for (const auto& [s, value] : a.plucker_vector().coordinates())
    if (mw.is_basis(s)) truncated.emplace(s, value);
  const PluckerVector truncated_vector(a.size(), a.rank(), std::move(truncated));
  Realization result = Realization::from_matrix(matrix_from_plucker(truncated_vector, chart));

  std::vector<std::vector<Rational>> rows;
  for (int i = 1; i <= a.size(); ++i) {
    if (contains(chart, i)) continue;
    const LaurentPoly form = circuit_form(a, fundamental_circuit(a.matroid(), i, chart)).to_poly();
    rows.push_back(linear_form_of(initial_form(form, w)).coefficients());
  }
  Matrix<Rational> kernel_route;
  if (rows.empty()) {
    kernel_route = a.matrix();
  } else {
    kernel_route = Matrix<Rational>::from_rows(kernel_basis(Matrix<Rational>::from_rows(rows)));
  }

  InitialRealizationReport report{.result = result,
                                  .kernel_route = kernel_route,
                                  .chart = chart,
                                  .expected_matroid = mw};
  report.row_spaces_agree = same_row_space(result.matrix(), kernel_route);
  report.matroid_agrees = result.matroid() == mw;
  report.plucker_agrees = result.plucker_vector().proportional_to(truncated_vector);
  return report;
}

Realization initial_realization(const Realization& a, const WeightVector& w) {
  InitialRealizationReport report = initial_realization_routes(a, w);
  if (!report.passed())
    throw Error(ErrorCode::kRouteMismatch,
                "w=" + to_string(w) + " rows=" + std::to_string(report.row_spaces_agree) +
                    " matroid=" + std::to_string(report.matroid_agrees) +
                    " plucker=" + std::to_string(report.plucker_agrees));
  return std::move(report.result);
}

std::vector<LaurentPoly> milnor_generators(const Realization& a, Subset basis) {
  require_basis(a.matroid(), basis);
  std::vector<LaurentPoly> gens;
  for (int i = 1; i <= a.size(); ++i)
    if (!contains(basis, i))
      gens.push_back(circuit_form(a, fundamental_circuit(a.matroid(), i, basis)).to_poly());
  gens.push_back(torus_equation(a.size()));
  return gens;
}

LaurentPoly g_polynomial(const Realization& a, Subset basis) {
  if (a.matroid().has_loop())
    throw Error(ErrorCode::kHasLoop, "loops " + format_subset(a.matroid().loops()));
  require_basis(a.matroid(), basis);
  const int n = a.size();
  LaurentPoly g = subset_monomial(n, basis);
  for (int i = 1; i <= n; ++i) {
    if (contains(basis, i)) continue;
    g = g * (LaurentPoly::variable(n, i - 1) - normalized_circuit_form(a, i, basis).to_poly());
  }
  return g;
}

bool expansion_identity_check(const Realization& a, Subset basis) {
  const LaurentPoly g = g_polynomial(a, basis);
  const int n = a.size();
  const Subset outside = a.matroid().ground_set() & ~basis;
  std::vector<LaurentPoly> forms(n + 1);
  for (int i : elements_of(outside)) forms[i] = normalized_circuit_form(a, i, basis).to_poly();

  LaurentPoly sum(n);
  // Enumerate subsets I of `outside` (including the empty set).
  for (Subset sub = outside;; sub = (sub - 1) & outside) {
    LaurentPoly term = subset_monomial(n, a.matroid().ground_set() & ~sub);
    for (int i : elements_of(sub)) term = term * forms[i];
    sum = cardinality(sub) % 2 == 0 ? sum + term : sum - term;
    if (sub == 0) break;
  }
  return sum == g;
}

namespace {

// a is strictly below b in the refined order: smaller v-pairing first, then
// higher total degree, then the larger exponent at the first variable of
// `priority` where they differ.
bool order_less(const Exponent& a, const Exponent& b, const std::vector<Rational>& v,
                const std::vector<int>& priority) {
  const Rational pa = pairing(a, v);
  const Rational pb = pairing(b, v);
  if (pa != pb) return pa < pb;
  const int da = std::accumulate(a.begin(), a.end(), 0);
  const int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  for (int k : priority)
    if (a[k] != b[k]) return a[k] > b[k];
  return false;
}

Exponent initial_term(const LaurentPoly& f, const std::vector<Rational>& v,
                      const std::vector<int>& priority) {
  const Exponent* best = nullptr;
  for (const auto& [e, c] : f.terms())
    if (best == nullptr || order_less(e, *best, v, priority)) best = &e;
  return *best;
}

bool coprime(const Exponent& a, const Exponent& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != 0 && b[k] != 0) return false;
  return true;
}

}  // namespace

GroebnerCertificate groebner_certificate(const Realization& a, const WeightVector& w, Subset basis) {
  const int n = a.size();
  const Matroid mw = weight_matroid(a.matroid(), w);
  if (!mw.is_basis(basis))
    throw Error(ErrorCode::kNotABasis, format_subset(basis) + " is not a basis of M_w");

  GroebnerCertificate cert;
  const Rational lambda = -std::max(Rational(0), w.max());
  cert.v.push_back(lambda);
  for (int i = 1; i <= n; ++i) cert.v.push_back(w[i] + lambda);
  for (int i = 1; i <= n; ++i)
    if (!contains(basis, i)) cert.variable_priority.push_back(i);
  cert.variable_priority.push_back(0);
  for (int i : elements_of(basis)) cert.variable_priority.push_back(i);

  cert.linear_initials_ok = true;
  std::string failure;
  for (int i = 1; i <= n; ++i) {
    if (contains(basis, i)) continue;
    LaurentPoly form = homogenized_ring(circuit_form(a, fundamental_circuit(a.matroid(), i, basis)).to_poly());
    Exponent lead = initial_term(form, cert.v, cert.variable_priority);
    Exponent expected(n + 1, 0);
    expected[i] = 1;
    if (lead != expected) {
      cert.linear_initials_ok = false;
      failure = "initial term of the circuit form for x" + std::to_string(i) + " is not x" + std::to_string(i);
    }
    cert.generators.push_back(std::move(form));
    cert.initial_terms.push_back(std::move(lead));
  }

  LaurentPoly g = homogenized_ring(g_polynomial(a, basis));
  Exponent x0n(n + 1, 0);
  x0n[0] = n;
  g.add_term(x0n, Rational(-1));
  Exponent g_lead = initial_term(g, cert.v, cert.variable_priority);
  cert.g_initial_ok = true;
  for (int k = 1; k <= n; ++k)
    if (g_lead[k] != 0 && !contains(basis, k)) cert.g_initial_ok = false;
  if (!cert.g_initial_ok && failure.empty()) failure = "initial term of g_B - x0^n leaves {x0} + B";
  cert.generators.push_back(std::move(g));
  cert.initial_terms.push_back(std::move(g_lead));

  cert.pairwise_coprime = true;
  for (std::size_t s = 0; s < cert.initial_terms.size() && cert.pairwise_coprime; ++s) {
    for (std::size_t t = s + 1; t < cert.initial_terms.size(); ++t) {
      if (!coprime(cert.initial_terms[s], cert.initial_terms[t])) {
        cert.pairwise_coprime = false;
        if (failure.empty())
          failure = "initial terms of generators " + std::to_string(s) + " and " + std::to_string(t) +
                    " share a variable";
        break;
      }
    }
  }
  if (!cert.passed())
    throw Error(ErrorCode::kCertificateFailed, failure + " (w=" + to_string(w) + ", B=" + format_subset(basis) + ")");
  return cert;
}

InitialGReport initial_g_check(const Realization& a, const WeightVector& w, Subset basis) {
  if (!w.sums_to_zero() || !in_bergman(a.matroid(), w))
    throw Error(ErrorCode::kHypothesisViolation, "w=" + to_string(w) + " is not in Trop(M) with sum 0");
  const Realization aw = initial_realization(a, w);
  if (!aw.matroid().is_basis(basis))
    throw Error(ErrorCode::kHypothesisViolation, format_subset(basis) + " is not a basis of M_w");
  const int n = a.size();

  InitialGReport report;
  const LaurentPoly one = LaurentPoly::constant(n, Rational(1));
  report.identity = initial_form(g_polynomial(a, basis) - one, w) == g_polynomial(aw, basis) - one;

  report.factorwise = true;
  for (int i = 1; i <= n; ++i) {
    if (contains(basis, i)) continue;
    const LaurentPoly xi = LaurentPoly::variable(n, i - 1);
    const LaurentPoly lhs = initial_form(xi - normalized_circuit_form(a, i, basis).to_poly(), w);
    const LaurentPoly rhs = xi - normalized_circuit_form(aw, i, basis).to_poly();
    if (!(lhs == rhs)) report.factorwise = false;
  }
  return report;
}

bool is_good_prime(const Realization& a, std::uint64_t p) {
  std::vector<Rational> values;
  for (const auto& [s, value] : a.plucker_vector().coordinates()) values.push_back(value);
  for (const Integer& z : primitive_integer_vector(values))
    if (z != 0 && reduce_mod(z, p) == 0) return false;
  return true;
}

}  // namespace milnor
