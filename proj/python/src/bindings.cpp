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

// pybind11 module pymilnor._core.  Typed entry points for the matroid layer
// and point counts; report commands exchange JSON text with the Python side.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "milnor/arrangement.hpp"
#include "milnor/cli.hpp"
#include "milnor/counting.hpp"
#include "milnor/error.hpp"
#include "milnor/homology.hpp"
#include "milnor/io.hpp"
#include "milnor/matroid.hpp"

namespace py = pybind11;
using namespace milnor;

namespace {

using ElementLists = std::vector<std::vector<int>>;

ElementLists to_lists(const std::vector<Subset>& subsets) {
  ElementLists out;
  for (Subset s : subsets) out.push_back(elements_of(s));
  return out;
}

std::vector<Subset> from_lists(const ElementLists& lists) {
  std::vector<Subset> out;
  for (const auto& l : lists) out.push_back(subset_from_elements(l));
  return out;
}

// Matrix rows may hold ints or rational strings, exactly as in realization files.
Realization realization_of(const py::list& rows) {
  Json matrix = Json::array();
  for (const auto& row : rows) {
    Json r = Json::array();
    for (const auto& entry : row.cast<py::list>()) {
      if (py::isinstance<py::int_>(entry))
        r.push_back(py::str(entry).cast<std::string>());
      else
        r.push_back(entry.cast<std::string>());
    }
    matrix.push_back(r);
  }
  return realization_from_json(Json{{"matrix", matrix}});
}

CountMethod method_of(const std::string& name) {
  if (name == "auto") return CountMethod::kAuto;
  if (name == "naive") return CountMethod::kNaive;
  if (name == "eliminated") return CountMethod::kEliminated;
  throw Error(ErrorCode::kInvalidArgument, "unknown method " + name);
}

CliConfig config_of(const Json& options) {
  CliConfig c;
  if (options.contains("primes")) c.primes = options.at("primes").get<std::vector<std::uint64_t>>();
  if (options.contains("budget")) c.budget = options.at("budget").get<std::uint64_t>();
  if (options.contains("threads")) c.threads = options.at("threads").get<int>();
  if (options.contains("seed")) c.seed = options.at("seed").get<std::uint64_t>();
  if (options.contains("allow_bad_characteristic"))
    c.allow_bad_characteristic = options.at("allow_bad_characteristic").get<bool>();
  return c;
}

template <class F>
std::string run_command(F command, const std::string& document, const std::string& options_text) {
  const Json input = parse_json(document, "<document>");
  const Json options = parse_json(options_text, "<options>");
  return command(input, config_of(options)).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Matroids, Bergman fans and Milnor fiber point counts";
  m.attr("__version__") = MILNOR_PY_VERSION;
  py::register_exception<Error>(m, "MilnorError", PyExc_ValueError);

  py::class_<Matroid>(m, "Matroid")
      .def(py::init([](int n, int d, const ElementLists& bases) { return Matroid::from_bases(n, d, from_lists(bases)); }),
           py::arg("n"), py::arg("d"), py::arg("bases"))
      .def_static("uniform", &Matroid::uniform, py::arg("d"), py::arg("n"))
      .def_property_readonly("n", &Matroid::size)
      .def_property_readonly("d", &Matroid::rank)
      .def_property_readonly("bases", [](const Matroid& self) { return to_lists(self.bases()); })
      .def("rank_of", [](const Matroid& self, const std::vector<int>& s) { return self.rank_of(subset_from_elements(s)); })
      .def("is_basis", [](const Matroid& self, const std::vector<int>& s) { return self.is_basis(subset_from_elements(s)); })
      .def("__eq__", [](const Matroid& a, const Matroid& b) { return a == b; })
      .def("__repr__", [](const Matroid& self) {
        return "Matroid(n=" + std::to_string(self.size()) + ", d=" + std::to_string(self.rank()) + ", bases=" +
               format_bases(self) + ")";
      });

  m.def("characteristic_polynomial", [](const Matroid& mat) { return characteristic_polynomial(mat).coefficients; },
        "Coefficients of chi_M, lowest degree first.");
  m.def("mobius_number", &mobius_number);
  m.def("circuits", [](const Matroid& mat) { return to_lists(circuits(mat)); });
  m.def("flats", [](const Matroid& mat) { return to_lists(flats(mat).flats); });
  m.def(
      "reduced_betti",
      [](const Matroid& mat) {
        const BettiNumbers b = betti(order_complex(mat));
        return std::vector<long long>(b.reduced.begin() + 1, b.reduced.end());
      },
      "Reduced Betti numbers of the order complex of proper flats, from degree 0.");

  m.def(
      "milnor_count",
      [](const py::list& rows, std::uint64_t p, const std::string& method, bool allow_bad_characteristic) {
        CountConfig config;
        config.allow_bad_characteristic = allow_bad_characteristic;
        const Realization a = realization_of(rows);
        py::gil_scoped_release release;
        return milnor_count(a, p, config, method_of(method));
      },
      py::arg("matrix"), py::arg("p"), py::arg("method") = "auto", py::arg("allow_bad_characteristic") = false);
  m.def(
      "complement_count",
      [](const py::list& rows, std::uint64_t p) {
        const ComplementCount c = complement_count(realization_of(rows), p);
        py::dict out;
        out["count"] = c.count;
        out["chi"] = py::int_(py::str(c.chi_value.str()));
        out["good_prime"] = c.good_prime;
        out["verdict"] = c.verdict;
        return out;
      },
      py::arg("matrix"), py::arg("p"));

  m.def("matroid_info", [](const std::string& d, const std::string& o) { return run_command(cmd_matroid_info, d, o); });
  m.def("bergman_betti", [](const std::string& d, const std::string& o) { return run_command(cmd_bergman_betti, d, o); });
  m.def("strata", [](const std::string& d, const std::string& o) { return run_command(cmd_strata, d, o); });
  m.def("count", [](const std::string& d, const std::string& o) { return run_command(cmd_count, d, o); });
  m.def("invariance", [](const std::string& d, const std::string& o) { return run_command(cmd_invariance, d, o); });
  m.def("fan_report", [](const std::string& d, const std::string& o) { return run_command(cmd_fan_report, d, o); });
  m.def("verify_initial", [](const std::string& d, const std::string& o) {
    const Json options = parse_json(o, "<options>");
    std::optional<WeightVector> w;
    if (options.contains("weight")) w = weight_from_json(options.at("weight"));
    return cmd_verify_initial(parse_json(d, "<document>"), w, config_of(options)).dump();
  });
  m.def("version", &library_version);
}
