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

#include "milnor/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "milnor/error.hpp"

namespace milnor {
namespace {

[[noreturn]] void schema_error(const std::string& what) { throw Error(ErrorCode::kParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema_error(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) schema_error(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

Rational rational_entry(const Json& v) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  schema_error("matrix entries must be integers or rational strings");
}

Json subset_json(Subset s) { return elements_of(s); }

Json big(const Integer& z) {
  if (z >= Integer(std::numeric_limits<std::int64_t>::min()) && z <= Integer(std::numeric_limits<std::int64_t>::max())) return static_cast<std::int64_t>(z);
  return z.str();
}

}  // namespace

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t offset = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorCode::kParseError,
                source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": malformed JSON");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str(), path);
}

Matroid matroid_from_json(const Json& j) {
  const int n = int_field(j, "n");
  const int d = int_field(j, "d");
  const Json& bases = field(j, "bases");
  if (!bases.is_array()) schema_error("\"bases\" must be an array");
  std::vector<Subset> masks;
  for (const Json& b : bases) {
    if (!b.is_array()) schema_error("each basis must be an array of elements");
    std::vector<int> elems;
    for (const Json& e : b) {
      if (!e.is_number_integer()) schema_error("basis elements must be integers");
      const int x = e.get<int>();
      if (x < 1 || x > n) schema_error("basis element " + std::to_string(x) + " outside 1.." + std::to_string(n));
      elems.push_back(x);
    }
    const Subset s = subset_from_elements(elems);
    if (cardinality(s) != static_cast<int>(elems.size())) schema_error("repeated element in a basis");
    masks.push_back(s);
  }
  return Matroid::from_bases(n, d, std::move(masks));
}

Json to_json(const Matroid& m) {
  Json bases = Json::array();
  for (Subset b : m.bases()) bases.push_back(subset_json(b));
  return {{"n", m.size()}, {"d", m.rank()}, {"bases", bases}};
}

Realization realization_from_json(const Json& j) {
  const Json& rows = field(j, "matrix");
  if (!rows.is_array() || rows.empty()) schema_error("\"matrix\" must be a nonempty array of rows");
  std::vector<std::vector<Rational>> entries;
  for (const Json& row : rows) {
    if (!row.is_array()) schema_error("matrix rows must be arrays");
    std::vector<Rational> r;
    for (const Json& v : row) r.push_back(rational_entry(v));
    if (!entries.empty() && r.size() != entries.front().size()) schema_error("matrix rows have different lengths");
    entries.push_back(std::move(r));
  }
  if (j.contains("d") && int_field(j, "d") != static_cast<int>(entries.size()))
    schema_error("\"d\" does not match the number of rows");
  if (j.contains("n") && int_field(j, "n") != static_cast<int>(entries.front().size()))
    schema_error("\"n\" does not match the number of columns");
  return Realization::from_matrix(Matrix<Rational>::from_rows(entries));
}

Json to_json(const Realization& a) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < a.matrix().rows(); ++r) {
    Json row = Json::array();
    for (const Rational& v : a.matrix().row(r)) row.push_back(to_string(v));
    rows.push_back(row);
  }
  return {{"d", a.rank()}, {"n", a.size()}, {"matrix", rows}};
}

Json to_json(const LaurentPoly& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({{"exp", e}, {"coef", to_string(c)}});
  return terms;
}

LaurentPoly laurent_from_json(const Json& j, int num_vars) {
  if (!j.is_array()) schema_error("a polynomial is an array of terms");
  LaurentPoly f(num_vars);
  for (const Json& t : j) {
    const Json& exp = field(t, "exp");
    if (!exp.is_array() || static_cast<int>(exp.size()) != num_vars) schema_error("exponent has the wrong length");
    f.add_term(exp.get<Exponent>(), rational_entry(field(t, "coef")));
  }
  return f;
}

Json to_json(const WeightVector& w) {
  Json out = Json::array();
  for (const Rational& x : w.values()) out.push_back(to_string(x));
  return out;
}

WeightVector weight_from_json(const Json& j) {
  if (!j.is_array()) schema_error("a weight vector is an array");
  std::vector<Rational> w;
  for (const Json& v : j) w.push_back(rational_entry(v));
  return WeightVector(std::move(w));
}

Json to_json(const FlagCone& cone) {
  Json flag = Json::array();
  for (Subset f : cone.flag) flag.push_back(subset_json(f));
  Json rays = Json::array();
  for (const auto& ray : cone.rays) {
    Json r = Json::array();
    for (const auto& x : ray) r.push_back(static_cast<long long>(x));
    rays.push_back(r);
  }
  return {{"flag", flag}, {"rays", rays}, {"dim", cone.dim()}};
}

Json fan_report(const BergmanFan& fan) {
  Json cones = Json::array();
  for (const FlagCone& cone : fan.cones) {
    Json c = to_json(cone);
    c["w_sigma"] = to_json(interior_point(cone));
    c["cone_basis"] = subset_json(cone_basis(fan.matroid, cone));
    const Integer index = unimodularity_index(cone);
    c["lattice_index"] = big(index);
    c["unimodular"] = index == 1;
    cones.push_back(c);
  }
  return {{"matroid", to_json(fan.matroid)}, {"dimension", fan.dimension}, {"cones", cones}};
}

Json to_json(const SimplicialComplex& k) {
  Json vertices = Json::array();
  for (Subset v : k.vertices) vertices.push_back(subset_json(v));
  return {{"vertices", vertices}, {"facets", k.facets}, {"dimension", k.dimension()}};
}

Json to_json(const BettiNumbers& b) {
  Json out = Json::object();
  for (std::size_t i = 0; i < b.reduced.size(); ++i) out[std::to_string(static_cast<int>(i) - 1)] = b.reduced[i];
  return out;
}

Json to_json(const ComplementCount& c) {
  return {{"count", c.count}, {"chi_at_p", big(c.chi_value)}, {"good_prime", c.good_prime},
          {"verdict", c.verdict ? "PASS" : "FAIL"}};
}

Json to_json(const PointCountReport& r) {
  Json strata = Json::array();
  for (const auto& row : r.strata) {
    Json s = to_json(row.cone);
    s["w_sigma"] = to_json(row.w);
    s["basis"] = subset_json(row.basis);
    s["raw"] = row.raw;
    s["divisible"] = row.divisible;
    s["divided"] = row.divided;
    s["orbit"] = row.orbit;
    s["cross_check"] = row.cross_check;
    strata.push_back(s);
  }
  return {{"p", r.p},
          {"milnor_count", r.total},
          {"good_prime", r.good_prime},
          {"strata", strata},
          {"compactification_total", big(r.compactification_total)},
          {"divisibility", r.divisibility_ok ? "PASS" : "FAIL"},
          {"cross_check", r.cross_check_ok ? "PASS" : "FAIL"},
          {"identity", r.identity_ok ? "PASS" : "FAIL"}};
}

Json to_json(const MuDivisibility& r) {
  return {{"count", r.count}, {"n", r.n}, {"divisible", r.divisible}, {"free_orbits", r.free_orbits},
          {"orbits", r.orbits}, {"verdict", r.passed() ? "PASS" : "FAIL"}};
}

Json to_json(const InitialDegenerationCheck& r) {
  return {{"basis", subset_json(r.basis)},
          {"in_tropical_variety", r.in_tropical_variety},
          {"initial_solutions", r.initial_solutions},
          {"circuit_initial_solutions", r.circuit_solutions},
          {"degeneration_solutions", r.degenerate_solutions},
          {"sets_equal", r.sets_equal},
          {"verdict", r.passed ? "PASS" : "FAIL"}};
}

Json to_json(const InvarianceReport& r) {
  Json samples = Json::array();
  for (const auto& s : r.samples) {
    Json j = {{"p", s.p}, {"t", s.t}, {"excluded", s.excluded}};
    if (s.excluded) {
      j["reason"] = s.reason;
    } else {
      j["count"] = s.count;
    }
    samples.push_back(j);
  }
  Json primes = Json::array();
  for (const auto& summary : r.primes) {
    Json j = {{"p", summary.p}, {"valid_samples", summary.valid_samples}, {"constant", summary.constant}};
    j["common_value"] = summary.common_value ? Json(*summary.common_value) : Json(nullptr);
    primes.push_back(j);
  }
  return {{"samples", samples},
          {"primes", primes},
          {"note", "heuristic: counts over several prime fields, not one algebraically closed field"},
          {"verdict", r.passed() ? "PASS" : "FAIL"}};
}

Json to_json(const EPolynomial& e) {
  Json out = {{"note", e.note}};
  if (e.coefficients) {
    Json coefficients = Json::array();
    for (const auto& c : *e.coefficients) coefficients.push_back(big(c));
    out["coefficients"] = coefficients;
    out["polynomial"] = to_string(*e.coefficients);
  } else {
    out["polynomial"] = "NOT_POLYNOMIAL";
  }
  return out;
}

FamilySpec family_from_json(const Json& j) {
  FamilySpec family;
  family.name = j.value("name", std::string("family"));
  const Json& rows = field(j, "matrix");
  if (!rows.is_array() || rows.empty()) schema_error("\"matrix\" must be a nonempty array of rows");
  for (const Json& row : rows) {
    if (!row.is_array()) schema_error("matrix rows must be arrays");
    std::vector<Expression> r;
    for (const Json& v : row) {
      if (v.is_number_integer()) {
        r.push_back(Expression::parse(std::to_string(v.get<long long>())));
      } else if (v.is_string()) {
        r.push_back(Expression::parse(v.get<std::string>()));
      } else {
        schema_error("family entries must be expression strings");
      }
    }
    if (!family.matrix.empty() && r.size() != family.matrix.front().size()) schema_error("rows have different lengths");
    family.matrix.push_back(std::move(r));
  }
  if (j.contains("parameters")) {
    const Json& p = j.at("parameters");
    if (p.is_string() && p.get<std::string>() == "all") {
      family.parameters.reset();
    } else if (p.is_array()) {
      family.parameters = p.get<std::vector<long long>>();
    } else {
      schema_error("\"parameters\" must be \"all\" or an array of integers");
    }
  }
  if (j.contains("expected")) family.expected = matroid_from_json(j.at("expected"));
  return family;
}

}  // namespace milnor
