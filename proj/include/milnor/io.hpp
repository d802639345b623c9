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


// JSON encodings of the library's inputs and reports.

#ifndef MILNOR_IO_HPP_
#define MILNOR_IO_HPP_

#include <json.hpp>

#include <string>

#include "milnor/arrangement.hpp"
#include "milnor/counting.hpp"
#include "milnor/family.hpp"
#include "milnor/fan.hpp"
#include "milnor/homology.hpp"
#include "milnor/laurent.hpp"
#include "milnor/matroid.hpp"

namespace milnor {

using Json = nlohmann::json;

// Parses a file or string; malformed input throws kParseError with the line
// and column.
Json read_json_file(const std::string& path);
Json parse_json(const std::string& text, const std::string& source = "<string>");

// {"n": int, "d": int, "bases": [[int, ...], ...]}
Matroid matroid_from_json(const Json& j);
Json to_json(const Matroid& m);

// {"d": int, "n": int, "matrix": [["1", "0", "1"], ...]}; entries may be
// rational strings or integers.
Realization realization_from_json(const Json& j);
Json to_json(const Realization& a);

// [{"exp": [int, ...], "coef": "num/den"}, ...]
Json to_json(const LaurentPoly& f);
LaurentPoly laurent_from_json(const Json& j, int num_vars);

Json to_json(const WeightVector& w);
WeightVector weight_from_json(const Json& j);

Json to_json(const FlagCone& cone);
// Cones with rays, w_sigma, cone basis and lattice index.
Json fan_report(const BergmanFan& fan);

Json to_json(const SimplicialComplex& k);
Json to_json(const BettiNumbers& b);

Json to_json(const ComplementCount& c);
Json to_json(const PointCountReport& r);
Json to_json(const MuDivisibility& r);
Json to_json(const InitialDegenerationCheck& r);
Json to_json(const InvarianceReport& r);
Json to_json(const EPolynomial& e);

// {"name": str, "matrix": [[expr, ...], ...], "parameters": "all" | [int],
//  "expected": matroid}
FamilySpec family_from_json(const Json& j);

}  // namespace milnor

#endif  // MILNOR_IO_HPP_
