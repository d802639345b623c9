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

#include "milnor/counting.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <thread>

#include "milnor/error.hpp"

namespace milnor {
namespace {

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::kBadPrime, std::to_string(p) + " is not prime");
  if (p > (std::uint64_t{1} << 31)) throw Error(ErrorCode::kBadPrime, "primes above 2^31 are not supported");
}

void require_budget(std::uint64_t p, int rank, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (int k = 0; k < rank; ++k) {
    if (total > budget / (p - 1))
      throw Error(ErrorCode::kBudgetExceeded, "(" + std::to_string(p - 1) + ")^" + std::to_string(rank) +
                                                  " exceeds the budget " + std::to_string(budget));
    total *= p - 1;
  }
}

void require_characteristic(std::uint64_t p, int n, const CountConfig& config) {
  if (!config.allow_bad_characteristic && n % static_cast<long long>(p) == 0)
    throw Error(ErrorCode::kBadCharacteristic, "p=" + std::to_string(p) + " divides n=" + std::to_string(n));
}

std::vector<std::uint64_t> power_table(std::uint64_t p) {
  const std::uint64_t g = primitive_root(p);
  std::vector<std::uint64_t> table(p - 1);
  std::uint64_t x = 1;
  for (auto& t : table) {
    t = x;
    x = x * g % p;
  }
  return table;
}

// Runs work(begin, end, chunk) over a split of [0, q) and returns the chunks
// in order.
template <class Result, class Work>
std::vector<Result> run_chunks(std::uint64_t q, int threads, Work work) {
  std::size_t workers = threads > 0 ? static_cast<std::size_t>(threads)
                                    : std::max(1u, std::thread::hardware_concurrency());
  workers = std::max<std::size_t>(1, std::min<std::size_t>(workers, q));
  std::vector<Result> results(workers);
  if (workers == 1) {
    results[0] = work(0, q);
    return results;
  }
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < workers; ++t) {
    const std::uint64_t begin = q * t / workers;
    const std::uint64_t end = q * (t + 1) / workers;
    pool.emplace_back([&, t, begin, end] { results[t] = work(begin, end); });
  }
  for (auto& th : pool) th.join();
  return results;
}

// Generators over F_p in discrete-log form: a point is a vector of logs
// a_k in [0, p-1) and a term c x^e evaluates to c g^{<e,a>}.
struct CompiledSystem {
  std::uint64_t p = 0;
  std::uint64_t q = 0;  // p - 1
  int rank = 0;
  std::vector<std::uint64_t> powers;
  std::vector<std::uint64_t> coefficient;
  std::vector<std::vector<std::uint64_t>> exponent;  // per term, per variable, mod q
  std::vector<std::size_t> generator_end;            // term ranges
};

CompiledSystem compile(const std::vector<LaurentPoly>& gens, std::uint64_t p, int rank) {
  CompiledSystem sys;
  sys.p = p;
  sys.q = p - 1;
  sys.rank = rank;
  sys.powers = power_table(p);
  for (const auto& g : gens) {
    if (g.num_vars() > rank)
      throw Error(ErrorCode::kInvalidArgument, "generator has more variables than the torus");
    std::vector<Rational> coefficients;
    for (const auto& [e, c] : g.terms()) coefficients.push_back(c);
    const auto scaled = primitive_integer_vector(coefficients);
    std::size_t t = 0;
    for (const auto& [e, c] : g.terms()) {
      const std::uint64_t value = reduce_mod(scaled[t++], p);
      if (value == 0) continue;
      std::vector<std::uint64_t> exp(rank, 0);
      for (int k = 0; k < g.num_vars(); ++k) {
        const long long r = e[k] % static_cast<long long>(sys.q);
        exp[k] = static_cast<std::uint64_t>(r < 0 ? r + static_cast<long long>(sys.q) : r);
      }
      sys.coefficient.push_back(value);
      sys.exponent.push_back(std::move(exp));
    }
    sys.generator_end.push_back(sys.coefficient.size());
  }
  return sys;
}

// Calls visit(logs) on every solution whose first log lies in [begin, end).
template <class Visit>
void enumerate_torus(const CompiledSystem& sys, std::uint64_t begin, std::uint64_t end, Visit&& visit) {
  const std::size_t terms = sys.coefficient.size();
  std::vector<std::uint64_t> logs(sys.rank, 0);
  std::vector<std::uint64_t> term_log(terms, 0);
  auto satisfied = [&] {
    std::size_t t = 0;
    for (std::size_t end_t : sys.generator_end) {
      std::uint64_t sum = 0;
      for (; t < end_t; ++t) sum = (sum + sys.coefficient[t] * sys.powers[term_log[t]]) % sys.p;
      if (sum != 0) return false;
    }
    return true;
  };
  if (sys.rank == 0) {
    if (begin == 0 && satisfied()) visit(logs);
    return;
  }
  logs[0] = begin;
  for (std::size_t t = 0; t < terms; ++t) term_log[t] = sys.exponent[t][0] * begin % sys.q;
  while (logs[0] < end) {
    if (satisfied()) visit(logs);
    // Odometer step; a digit wrapping from q-1 to 0 also shifts the logs
    // by its exponent, since q ≡ 0.
    for (int k = sys.rank - 1; k >= 0; --k) {
      ++logs[k];
      for (std::size_t t = 0; t < terms; ++t) {
        term_log[t] += sys.exponent[t][k];
        if (term_log[t] >= sys.q) term_log[t] -= sys.q;
      }
      if (k == 0 || logs[k] < sys.q) break;
      logs[k] = 0;
    }
  }
}

// A d x n matrix over F_p with the identity in the columns of `basis`.
struct EliminatedSystem {
  std::uint64_t p = 0;
  Subset basis = 0;
  std::vector<int> basis_elements;  // 1-based
  std::vector<int> other_elements;
  Matrix<Zp> normalized;
};

EliminatedSystem eliminated_from_pivots(const Matrix<Zp>& a, std::uint64_t p) {
  auto [reduced, pivots] = rref(a);
  if (pivots.size() != a.rows())
    throw Error(ErrorCode::kRankDeficient, "matrix over F_" + std::to_string(p) + " is rank deficient");
  EliminatedSystem sys{.p = p, .basis = 0, .basis_elements = {}, .other_elements = {}, .normalized = reduced};
  for (auto c : pivots) sys.basis |= element_bit(static_cast<int>(c) + 1);
  for (int j = 1; j <= static_cast<int>(a.cols()); ++j)
    (contains(sys.basis, j) ? sys.basis_elements : sys.other_elements).push_back(j);
  return sys;
}

// Visits x = z R for z in (F_p^*)^d with every coordinate nonzero and, if
// `milnor`, product 1.  The point is passed as values in [1, p).
template <class Visit>
void enumerate_eliminated(const EliminatedSystem& sys, bool milnor, std::uint64_t begin, std::uint64_t end,
                          const std::vector<std::uint64_t>& powers, Visit&& visit) {
  const std::size_t d = sys.basis_elements.size();
  const std::size_t n = d + sys.other_elements.size();
  const std::uint64_t p = sys.p;
  const std::uint64_t q = p - 1;
  std::vector<std::vector<std::uint64_t>> coeff(sys.other_elements.size(), std::vector<std::uint64_t>(d));
  for (std::size_t j = 0; j < sys.other_elements.size(); ++j)
    for (std::size_t l = 0; l < d; ++l)
      coeff[j][l] = sys.normalized(l, static_cast<std::size_t>(sys.other_elements[j] - 1)).value();
  std::vector<std::uint64_t> logs(d, 0);
  std::vector<std::uint32_t> point(n, 0);
  logs[0] = begin;
  while (logs[0] < end) {
    std::uint64_t product = 1;
    for (std::size_t l = 0; l < d; ++l) {
      const std::uint64_t z = powers[logs[l]];
      point[sys.basis_elements[l] - 1] = static_cast<std::uint32_t>(z);
      product = product * z % p;
    }
    bool ok = true;
    for (std::size_t j = 0; j < coeff.size() && ok; ++j) {
      std::uint64_t x = 0;
      for (std::size_t l = 0; l < d; ++l) x = (x + coeff[j][l] * point[sys.basis_elements[l] - 1]) % p;
      if (x == 0) ok = false;
      point[sys.other_elements[j] - 1] = static_cast<std::uint32_t>(x);
      product = product * x % p;
    }
    if (ok && (!milnor || product == 1)) visit(point);
    for (int k = static_cast<int>(d) - 1; k >= 0; --k) {
      ++logs[k];
      if (k == 0 || logs[k] < q) break;
      logs[k] = 0;
    }
  }
}

std::uint64_t count_eliminated(const EliminatedSystem& sys, bool milnor, const CountConfig& config) {
  require_budget(sys.p, static_cast<int>(sys.basis_elements.size()), config.budget);
  const auto powers = power_table(sys.p);
  const auto parts = run_chunks<std::uint64_t>(sys.p - 1, config.threads, [&](std::uint64_t b, std::uint64_t e) {
    std::uint64_t count = 0;
    enumerate_eliminated(sys, milnor, b, e, powers, [&](const std::vector<std::uint32_t>&) { ++count; });
    return count;
  });
  std::uint64_t total = 0;
  for (auto c : parts) total += c;
  return total;
}

std::vector<TorusPoint> points_eliminated(const EliminatedSystem& sys, bool milnor, const CountConfig& config) {
  require_budget(sys.p, static_cast<int>(sys.basis_elements.size()), config.budget);
  const auto powers = power_table(sys.p);
  const auto parts = run_chunks<std::vector<TorusPoint>>(
      sys.p - 1, config.threads, [&](std::uint64_t b, std::uint64_t e) {
        std::vector<TorusPoint> pts;
        enumerate_eliminated(sys, milnor, b, e, powers, [&](const std::vector<std::uint32_t>& x) { pts.push_back(x); });
        return pts;
      });
  std::vector<TorusPoint> out;
  for (const auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end());
  return out;
}

// Basis with a p-unit primitive Plücker coordinate, preferring `wanted`.
std::optional<Subset> unit_basis(const Realization& a, std::uint64_t p, std::optional<Subset> wanted) {
  std::vector<Subset> subsets;
  std::vector<Rational> values;
  for (const auto& [s, v] : a.plucker_vector().coordinates()) {
    subsets.push_back(s);
    values.push_back(v);
  }
  const auto scaled = primitive_integer_vector(values);
  std::optional<Subset> first;
  for (std::size_t k = 0; k < subsets.size(); ++k) {
    if (scaled[k] == 0 || reduce_mod(scaled[k], p) == 0) continue;
    if (wanted && *wanted == subsets[k]) return wanted;
    if (!first || subset_lex_less(subsets[k], *first)) first = subsets[k];
  }
  return wanted ? std::nullopt : first;
}

EliminatedSystem eliminated_from_realization(const Realization& a, std::uint64_t p, Subset basis) {
  const Matrix<Rational> chart = matrix_from_plucker(a.plucker_vector(), basis);
  return eliminated_from_pivots(reduce_mod(chart, p), p);
}

}  // namespace

std::uint64_t count_solutions(const std::vector<LaurentPoly>& gens, std::uint64_t p, int rank,
                              const CountConfig& config) {
  require_prime(p);
  require_budget(p, rank, config.budget);
  const CompiledSystem sys = compile(gens, p, rank);
  const std::uint64_t first_range = rank == 0 ? 1 : sys.q;
  const auto parts = run_chunks<std::uint64_t>(first_range, config.threads, [&](std::uint64_t b, std::uint64_t e) {
    std::uint64_t count = 0;
    enumerate_torus(sys, b, e, [&](const std::vector<std::uint64_t>&) { ++count; });
    return count;
  });
  std::uint64_t total = 0;
  for (auto c : parts) total += c;
  return total;
}

std::vector<TorusPoint> solution_set(const std::vector<LaurentPoly>& gens, std::uint64_t p, int rank,
                                     const CountConfig& config) {
  require_prime(p);
  require_budget(p, rank, config.budget);
  const CompiledSystem sys = compile(gens, p, rank);
  const std::uint64_t first_range = rank == 0 ? 1 : sys.q;
  const auto parts = run_chunks<std::vector<TorusPoint>>(
      first_range, config.threads, [&](std::uint64_t b, std::uint64_t e) {
        std::vector<TorusPoint> pts;
        enumerate_torus(sys, b, e, [&](const std::vector<std::uint64_t>& logs) {
          TorusPoint x(logs.size());
          for (std::size_t k = 0; k < logs.size(); ++k) x[k] = static_cast<std::uint32_t>(sys.powers[logs[k]]);
          pts.push_back(std::move(x));
        });
        return pts;
      });
  std::vector<TorusPoint> out;
  for (const auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t milnor_count(const Realization& a, std::uint64_t p, const CountConfig& config, CountMethod method,
                           std::optional<Subset> basis) {
  require_prime(p);
  require_characteristic(p, a.size(), config);
  if (basis && !a.matroid().is_basis(*basis)) throw Error(ErrorCode::kNotABasis, format_subset(*basis));
  if (method == CountMethod::kAuto) method = is_good_prime(a, p) ? CountMethod::kEliminated : CountMethod::kNaive;
  if (method == CountMethod::kEliminated) {
    const auto chart = unit_basis(a, p, basis);
    if (!chart)
      throw Error(ErrorCode::kBadPrime, "no basis with a p-unit Plücker coordinate for p=" + std::to_string(p));
    return count_eliminated(eliminated_from_realization(a, p, *chart), true, config);
  }
  const Subset b = basis.value_or(a.matroid().bases().front());
  return count_solutions(milnor_generators(a, b), p, a.size(), config);
}

std::uint64_t milnor_count_mod_p(const Matrix<Zp>& a, const CountConfig& config) {
  if (a.rows() == 0) throw Error(ErrorCode::kInvalidArgument, "empty matrix");
  const std::uint64_t p = a(0, 0).modulus();
  require_prime(p);
  require_characteristic(p, static_cast<int>(a.cols()), config);
  return count_eliminated(eliminated_from_pivots(a, p), true, config);
}

std::vector<TorusPoint> milnor_points(const Realization& a, std::uint64_t p, const CountConfig& config) {
  require_prime(p);
  require_characteristic(p, a.size(), config);
  if (is_good_prime(a, p)) {
    const auto chart = unit_basis(a, p, std::nullopt);
    return points_eliminated(eliminated_from_realization(a, p, *chart), true, config);
  }
  return solution_set(milnor_generators(a, a.matroid().bases().front()), p, a.size(), config);
}

ComplementCount complement_count(const Realization& a, std::uint64_t p, const CountConfig& config) {
  require_prime(p);
  ComplementCount out;
  out.good_prime = is_good_prime(a, p);
  out.chi_value = characteristic_polynomial(a.matroid()).evaluate(Integer(p));
  if (out.good_prime) {
    const auto chart = unit_basis(a, p, std::nullopt);
    out.count = count_eliminated(eliminated_from_realization(a, p, *chart), false, config);
  } else {
    auto gens = milnor_generators(a, a.matroid().bases().front());
    gens.pop_back();
    out.count = count_solutions(gens, p, a.size(), config);
  }
  out.verdict = Integer(out.count) == out.chi_value;
  return out;
}

PointCountReport build_stratum_table(const Realization& a, const BergmanFan& fan, std::uint64_t p,
                                     const CountConfig& config) {
  PointCountReport report;
  report.p = p;
  report.total = milnor_count(a, p, config);
  report.good_prime = is_good_prime(a, p);
  report.divisibility_ok = true;
  report.cross_check_ok = true;
  report.compactification_total = 0;
  const int n = a.size();
  Integer lhs = 0;
  Integer rhs = 0;
  for (const FlagCone& cone : fan.cones) {
    StratumRow row{.cone = cone, .w = interior_point(cone), .basis = cone_basis(a.matroid(), cone)};
    const Realization aw = initial_realization(a, row.w);
    row.raw = milnor_count(aw, p, config);
    std::uint64_t torus = 1;
    for (int k = 0; k < cone.dim(); ++k) torus *= p - 1;
    row.divisible = row.raw % torus == 0;
    row.divided = row.raw / torus;
    row.orbit = count_solutions(orbit_generators(milnor_generators(a, row.basis), cone), p, n - cone.dim(), config);
    row.cross_check = row.divisible && row.divided == row.orbit;
    report.divisibility_ok = report.divisibility_ok && row.divisible;
    report.cross_check_ok = report.cross_check_ok && row.cross_check;
    report.compactification_total += row.divided;
    Integer scale = 1;
    for (int k = cone.dim(); k < fan.dimension; ++k) scale *= p - 1;
    rhs += scale * row.raw;
    report.strata.push_back(std::move(row));
  }
  Integer top = 1;
  for (int k = 0; k < fan.dimension; ++k) top *= p - 1;
  lhs = top * report.compactification_total;
  report.identity_ok = lhs == rhs;
  return report;
}

PointCountReport stratum_table(const Realization& a, const BergmanFan& fan, std::uint64_t p,
                               const CountConfig& config) {
  PointCountReport report = build_stratum_table(a, fan, p, config);
  for (const auto& row : report.strata) {
    std::string flag;
    for (Subset f : row.cone.flag) flag += format_subset(f);
    if (!row.divisible)
      throw Error(ErrorCode::kDivisibilityFailed, "cone [" + flag + "]: raw count " + std::to_string(row.raw) +
                                                      " at p=" + std::to_string(p));
    if (!row.cross_check)
      throw Error(ErrorCode::kCrossCheckFailed, "cone [" + flag + "]: divided " + std::to_string(row.divided) +
                                                    " vs orbit " + std::to_string(row.orbit));
  }
  if (!report.identity_ok) throw Error(ErrorCode::kCrossCheckFailed, "stratification identity");
  return report;
}

MuDivisibility mu_action_divisibility(const Realization& a, std::uint64_t p, const CountConfig& config) {
  const int n = a.size();
  if ((p - 1) % static_cast<std::uint64_t>(n) != 0)
    throw Error(ErrorCode::kWrongResidue, "p=" + std::to_string(p) + " is not 1 mod " + std::to_string(n));
  MuDivisibility out;
  out.n = n;
  const auto points = milnor_points(a, p, config);
  out.count = points.size();
  out.divisible = out.count % static_cast<std::uint64_t>(n) == 0;

  const std::uint64_t zeta = Zp(static_cast<std::int64_t>(primitive_root(p)), p).pow((p - 1) / n).value();
  std::set<TorusPoint> unseen(points.begin(), points.end());
  out.free_orbits = true;
  while (!unseen.empty()) {
    TorusPoint x = *unseen.begin();
    std::size_t size = 0;
    for (int k = 0; k < n; ++k) {
      if (unseen.erase(x) == 1) {
        ++size;
      } else {
        out.free_orbits = false;
      }
      for (auto& c : x) c = static_cast<std::uint32_t>(c * zeta % p);
    }
    if (size != static_cast<std::size_t>(n)) out.free_orbits = false;
    ++out.orbits;
  }
  return out;
}

InitialDegenerationCheck initial_degeneration_check(const Realization& a, const WeightVector& w, std::uint64_t p,
                                                    const CountConfig& config) {
  const int n = a.size();
  InitialDegenerationCheck out;
  out.basis = greedy_basis(a.matroid(), w);
  out.in_tropical_variety = w.sums_to_zero() && in_bergman(a.matroid(), w);

  std::vector<LaurentPoly> initial;
  for (const auto& g : milnor_generators(a, out.basis)) initial.push_back(initial_form(g, w));
  std::vector<LaurentPoly> circuit_initial;
  for (Subset c : circuits(a.matroid())) circuit_initial.push_back(initial_form(circuit_form(a, c).to_poly(), w));
  circuit_initial.push_back(initial_form(torus_equation(n), w));
  const Realization aw = initial_realization(a, w);

  const auto s_init = solution_set(initial, p, n, config);
  const auto s_circ = solution_set(circuit_initial, p, n, config);
  const auto s_w = solution_set(milnor_generators(aw, out.basis), p, n, config);
  out.initial_solutions = s_init.size();
  out.circuit_solutions = s_circ.size();
  out.degenerate_solutions = s_w.size();
  out.sets_equal = s_init == s_w && s_circ == s_w;
  if (out.in_tropical_variety) {
    out.passed = out.sets_equal;
  } else {
    out.passed = s_circ.empty() && (in_bergman(a.matroid(), w) || s_w.empty());
  }
  return out;
}

}  // namespace milnor
