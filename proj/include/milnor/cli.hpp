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


// Subcommand implementations shared by the milnor-cli binary and the tests.
// Each returns a JSON report whose "verdict" is "PASS" or not.

#ifndef MILNOR_CLI_HPP_
#define MILNOR_CLI_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "milnor/io.hpp"

namespace milnor {

struct CliConfig {
  std::vector<std::uint64_t> primes = {5, 7};
  std::uint64_t budget = 100'000'000;
  int threads = 0;
  std::uint64_t seed = 20260101;
  bool allow_bad_characteristic = false;
  std::string json_out;

  CountConfig count_config() const;
};

// Throws kBadPrime / kInvalidArgument for an invalid configuration.
void validate(const CliConfig& config);

std::string library_version();

Json cmd_matroid_info(const Json& input, const CliConfig& config);
Json cmd_bergman_betti(const Json& input, const CliConfig& config);
Json cmd_verify_initial(const Json& input, const std::optional<WeightVector>& w, const CliConfig& config);
Json cmd_strata(const Json& input, const CliConfig& config);
Json cmd_count(const Json& input, const CliConfig& config);
Json cmd_invariance(const Json& input, const CliConfig& config);
Json cmd_fan_report(const Json& input, const CliConfig& config);

// Accepts a matroid document or a realization document.
Matroid matroid_of(const Json& input);

// Parses "a,b,c" with rational entries.
WeightVector parse_weight(const std::string& text);

// Short human-readable summary of a report.
std::string summarize(const Json& report);

}  // namespace milnor

#endif  // MILNOR_CLI_HPP_
