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

#include "milnor/cli.hpp"

#include <boost/version.hpp>
#include <gmp.h>

#include <sstream>

#include "milnor/error.hpp"

#ifndef MILNOR_VERSION
#define MILNOR_VERSION "0.0.0"
#endif

namespace milnor {
namespace {

const char* verdict(bool pass) { return pass ? "PASS" : "FAIL"; }

Json envelope(const std::string& command, const CliConfig& config, const Json& input, Json result, bool pass) {
  return {{"command", command},
          {"version", library_version()},
          {"config",
           {{"primes", config.primes},
            {"budget", config.budget},
            {"threads", config.threads},
            {"seed", config.seed},
            {"allow_bad_characteristic", config.allow_bad_characteristic}}},
          {"input", input},
          {"result", std::move(result)},
          {"verdict", verdict(pass)}};
}

Json subsets_json(const std::vector<Subset>& sets) {
  Json out = Json::array();
  for (Subset s : sets) out.push_back(elements_of(s));
  return out;
}

}  // namespace

CountConfig CliConfig::count_config() const {
  return CountConfig{.budget = budget, .threads = threads, .allow_bad_characteristic = allow_bad_characteristic};
}

void validate(const CliConfig& config) {
  if (config.primes.empty()) throw Error(ErrorCode::kInvalidArgument, "no primes given");
  for (auto p : config.primes)
    if (!is_prime(p)) throw Error(ErrorCode::kBadPrime, std::to_string(p) + " is not prime");
  if (config.budget == 0) throw Error(ErrorCode::kInvalidArgument, "budget must be positive");
  if (config.threads < 0) throw Error(ErrorCode::kInvalidArgument, "threads must be nonnegative");
}

std::string library_version() {
  std::ostringstream out;
  out << "milnor " << MILNOR_VERSION << " (gmp " << gmp_version << ", boost " << BOOST_LIB_VERSION << ")";
  return out.str();
}

Matroid matroid_of(const Json& input) {
  if (input.is_object() && input.contains("matrix")) return realization_from_json(input).matroid();
  return matroid_from_json(input);
}

WeightVector parse_weight(const std::string& text) {
  std::vector<Rational> w;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) w.push_back(parse_rational(item));
  if (w.empty()) throw Error(ErrorCode::kParseError, "empty weight vector");
  return WeightVector(std::move(w));
}

Json cmd_matroid_info(const Json& input, const CliConfig& config) {
  const Matroid m = matroid_of(input);
  const CharacteristicPolynomial chi = characteristic_polynomial(m);
  Json result = {{"n", m.size()},
                 {"d", m.rank()},
                 {"bases", format_bases(m)},
                 {"circuits", subsets_json(circuits(m))},
                 {"loops", elements_of(m.loops())},
                 {"characteristic_polynomial", to_string(chi)},
                 {"characteristic_coefficients", chi.coefficients},
                 {"mobius", mobius_number(m)}};
  if (!m.has_loop()) {
    const FlatLattice lattice = flats(m);
    result["flats"] = subsets_json(lattice.flats);
    result["flat_ranks"] = lattice.ranks;
    result["flat_count"] = lattice.flats.size();
    const ParallelClasses classes = parallel_classes(m);
    result["parallel_classes"] = subsets_json(classes.classes);
    result["parallel_gcd"] = classes.gcd;
  } else {
    result["note"] = "matroid has loops: characteristic polynomial is 0, flats not reported";
  }
  return envelope("matroid-info", config, input, result, true);
}

Json cmd_bergman_betti(const Json& input, const CliConfig& config) {
  const Matroid m = matroid_of(input);
  Json result = {{"mobius", mobius_number(m)}};
  try {
    const WedgeReport report = wedge_check(m);
    const SimplicialComplex k = order_complex(m);
    long long alternating = -1;
    for (int j = 0; j <= k.dimension(); ++j)
      alternating += (j % 2 == 0 ? 1 : -1) * static_cast<long long>(k.face_count(j));
    result["reduced_betti"] = to_json(report.betti);
    result["sphere_dimension"] = report.sphere_dimension;
    result["vertices"] = k.vertices.size();
    result["facets"] = k.facets.size();
    result["euler_consistent"] = report.betti.euler_characteristic() == alternating;
    const bool pass = report.passed && report.betti.euler_characteristic() == alternating;
    return envelope("bergman-betti", config, input, result, pass);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kParallelPairPresent && e.code() != ErrorCode::kHasLoop) throw;
    result["notice"] = std::string("hypothesis violation: ") + e.what();
    Json out = envelope("bergman-betti", config, input, result, false);
    out["verdict"] = "HYPOTHESIS_VIOLATION";
    return out;
  }
}

Json cmd_verify_initial(const Json& input, const std::optional<WeightVector>& weight, const CliConfig& config) {
  validate(config);
  const Realization a = realization_from_json(input);
  std::vector<WeightVector> weights;
  if (weight) {
    if (weight->size() != a.size()) throw Error(ErrorCode::kInvalidArgument, "weight has the wrong length");
    weights.push_back(*weight);
  } else {
    for (const FlagCone& cone : fine_fan(a.matroid()).cones) weights.push_back(interior_point(cone));
  }
  bool pass = true;
  Json cases = Json::array();
  for (const WeightVector& w : weights) {
    const InitialRealizationReport routes = initial_realization_routes(a, w);
    const bool in_trop = w.sums_to_zero() && in_bergman(a.matroid(), w);
    Json c = {{"w", to_json(w)},
              {"sums_to_zero", w.sums_to_zero()},
              {"in_bergman", in_bergman(a.matroid(), w)},
              {"routes",
               {{"row_spaces", routes.row_spaces_agree},
                {"matroid", routes.matroid_agrees},
                {"plucker", routes.plucker_agrees}}}};
    pass = pass && routes.passed();
    Json per_prime = Json::array();
    for (auto p : config.primes) {
      const InitialDegenerationCheck check = initial_degeneration_check(a, w, p, config.count_config());
      Json j = to_json(check);
      j["p"] = p;
      if (!in_trop) j["note"] = "w outside Trop(M) ∩ 1^perp: the initial ideal is the unit ideal";
      per_prime.push_back(j);
      pass = pass && check.passed;
    }
    c["solution_sets"] = per_prime;
    if (in_trop) {
      const Subset b = greedy_basis(a.matroid(), w);
      c["basis"] = elements_of(b);
      bool cert_ok = true;
      std::string cert_message;
      try {
        groebner_certificate(a, w, b);
      } catch (const Error& e) {
        cert_ok = false;
        cert_message = e.what();
      }
      const InitialGReport g = initial_g_check(a, w, b);
      c["groebner_certificate"] = verdict(cert_ok);
      if (!cert_ok) c["groebner_failure"] = cert_message;
      c["initial_g"] = {{"identity", g.identity}, {"factorwise", g.factorwise}};
      c["expansion_identity"] = expansion_identity_check(a, b);
      pass = pass && cert_ok && g.passed() && c["expansion_identity"].get<bool>();
    }
    cases.push_back(c);
  }
  return envelope("verify-initial", config, input, {{"cases", cases}}, pass);
}

Json cmd_strata(const Json& input, const CliConfig& config) {
  validate(config);
  const Realization a = realization_from_json(input);
  const BergmanFan fan = fine_fan(a.matroid());
  bool pass = true;
  Json tables = Json::array();
  for (auto p : config.primes) {
    const PointCountReport report = build_stratum_table(a, fan, p, config.count_config());
    pass = pass && report.passed();
    tables.push_back(to_json(report));
  }
  return envelope("strata", config, input, {{"tables", tables}}, pass);
}

Json cmd_count(const Json& input, const CliConfig& config) {
  validate(config);
  const Realization a = realization_from_json(input);
  const CountConfig cc = config.count_config();
  bool pass = true;
  Json rows = Json::array();
  std::map<std::uint64_t, Integer> milnor_counts;
  std::map<std::uint64_t, Integer> complement_counts;
  for (auto p : config.primes) {
    Json row = {{"p", p}};
    const ComplementCount complement = complement_count(a, p, cc);
    row["complement"] = to_json(complement);
    complement_counts[p] = complement.count;
    if (complement.good_prime && !complement.verdict) pass = false;
    if (a.size() % static_cast<long long>(p) != 0 || config.allow_bad_characteristic) {
      const std::uint64_t count = milnor_count(a, p, cc);
      row["milnor_count"] = count;
      milnor_counts[p] = count;
      if ((p - 1) % static_cast<std::uint64_t>(a.size()) == 0) {
        const MuDivisibility mu = mu_action_divisibility(a, p, cc);
        row["mu_divisibility"] = to_json(mu);
        pass = pass && mu.passed();
      }
    } else {
      row["milnor_count"] = nullptr;
      row["note"] = "p divides n; skipped";
    }
    rows.push_back(row);
  }
  Json result = {{"counts", rows}};
  const int bound = static_cast<int>(a.size());
  auto interpolate = [&](const std::map<std::uint64_t, Integer>& counts) {
    const int usable = std::min<int>(bound, static_cast<int>(counts.size()) - 2);
    return to_json(epoly_interpolate(counts, std::max(usable, 0)));
  };
  result["milnor_interpolation"] = interpolate(milnor_counts);
  result["complement_interpolation"] = interpolate(complement_counts);
  result["characteristic_polynomial"] = to_string(characteristic_polynomial(a.matroid()));
  return envelope("count", config, input, result, pass);
}

Json cmd_invariance(const Json& input, const CliConfig& config) {
  validate(config);
  const FamilySpec family = family_from_json(input);
  const InvarianceReport report = run_invariance(family, config.primes, config.count_config());
  Json result = to_json(report);
  result["name"] = family.name;
  return envelope("invariance", config, input, result, report.passed());
}

Json cmd_fan_report(const Json& input, const CliConfig& config) {
  const Matroid m = matroid_of(input);
  const BergmanFan fan = fine_fan(m);
  Json result = fan_report(fan);
  bool pass = true;
  if (input.contains("matrix")) {
    const Realization a = realization_from_json(input);
    std::vector<LaurentPoly> forms;
    for (Subset c : circuits(m)) forms.push_back(circuit_form(a, c).to_poly());
    for (std::size_t k = 0; k < fan.cones.size(); ++k) {
      const FlagCone& cone = fan.cones[k];
      const bool constant = relint_constancy_check(cone, forms, config.seed + k);
      bool restriction = true;
      for (const LaurentPoly& g : milnor_generators(a, cone_basis(m, cone))) {
        const Exponent u = monomial_shift(g, cone);
        for (const FlagCone& face : faces(cone)) restriction = restriction && face_restriction_check(g, u, face);
      }
      result["cones"][k]["relint_constant"] = constant;
      result["cones"][k]["face_restriction"] = restriction;
      pass = pass && constant && restriction;
    }
  }
  return envelope("fan-report", config, input, result, pass);
}

std::string summarize(const Json& report) {
  std::ostringstream out;
  out << report.value("command", std::string("?")) << ": " << report.value("verdict", std::string("?")) << '\n';
  const Json& result = report.at("result");
  for (const auto& [key, value] : result.items()) {
    if (value.is_primitive()) {
      out << "  " << key << ": " << value.dump() << '\n';
    } else if (value.is_array() && value.size() <= 12 &&
               std::all_of(value.begin(), value.end(), [](const Json& v) { return v.is_primitive(); })) {
      out << "  " << key << ": " << value.dump() << '\n';
    } else if (value.is_object() && value.size() <= 8) {
      out << "  " << key << ": " << value.dump() << '\n';
    } else {
      out << "  " << key << ": [" << value.size() << " entries; see --json-out]\n";
    }
  }
  return out.str();
}

}  // namespace milnor
