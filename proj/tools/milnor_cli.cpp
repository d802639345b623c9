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

// milnor-cli: command-line front end.  Reads JSON inputs, prints a short
// summary, optionally writes the full JSON report, and exits 0 iff every
// verdict passes.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "milnor/cli.hpp"
#include "milnor/error.hpp"

namespace {

int emit(const milnor::Json& report, const milnor::CliConfig& config) {
  if (config.json_out != "-") std::cout << milnor::summarize(report);
  if (config.json_out == "-") {
    std::cout << report.dump(2) << '\n';
  } else if (!config.json_out.empty()) {
    std::ofstream out(config.json_out);
    if (!out) throw milnor::Error(milnor::ErrorCode::kInvalidArgument, "cannot write " + config.json_out);
    out << report.dump(2) << '\n';
  }
  return report.at("verdict") == "PASS" ? 0 : 1;
}

void write_csv(const milnor::Json& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw milnor::Error(milnor::ErrorCode::kInvalidArgument, "cannot write " + path);
  out << "prime,parameter,count,status\n";
  for (const auto& s : report.at("result").at("samples")) {
    out << s.at("p").get<std::uint64_t>() << ',' << s.at("t").get<long long>() << ',';
    if (s.at("excluded").get<bool>()) {
      out << ",excluded: " << s.at("reason").get<std::string>() << '\n';
    } else {
      out << s.at("count").get<std::uint64_t>() << ",ok\n";
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matroids, Bergman fans and Milnor fiber point counts"};
  app.require_subcommand(1);
  milnor::CliConfig config;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--primes", config.primes, "Primes to count over")->delimiter(',');
    sub->add_option("--budget", config.budget, "Maximal torus points per enumeration");
    sub->add_option("--threads", config.threads, "Worker threads (0: all cores)");
    sub->add_option("--seed", config.seed, "Seed for randomized checks");
    sub->add_option("--json-out", config.json_out, "Write the JSON report here ('-' for stdout)");
    sub->add_flag("--allow-bad-characteristic", config.allow_bad_characteristic,
                  "Count even when p divides n");
  };

  std::string input_path;
  std::string weight_text;
  std::string csv_out;
  auto add_input = [&](CLI::App* sub) { sub->add_option("input", input_path, "Input JSON file")->required(); };

  auto* info = app.add_subcommand("matroid-info", "Bases, circuits, flats, characteristic polynomial");
  auto* betti = app.add_subcommand("bergman-betti", "Reduced Betti numbers of the order complex of flats");
  auto* verify = app.add_subcommand("verify-initial", "Initial degenerations: routes, solution sets, certificates");
  auto* strata = app.add_subcommand("strata", "Per-cone stratum point counts");
  auto* count = app.add_subcommand("count", "Milnor fiber and complement point counts");
  auto* invariance = app.add_subcommand("invariance", "Constancy of Milnor counts along a family");
  auto* fan = app.add_subcommand("fan-report", "Cones of the fine Bergman fan");
  for (auto* sub : {info, betti, verify, strata, count, invariance, fan}) {
    add_common(sub);
    add_input(sub);
  }
  verify->add_option("--weight", weight_text, "Comma-separated weight vector (default: every fine cone)");
  invariance->add_option("--csv-out", csv_out, "Write prime,parameter,count rows here");

  CLI11_PARSE(app, argc, argv);

  try {
    milnor::validate(config);
    const milnor::Json input = milnor::read_json_file(input_path);
    milnor::Json report;
    if (info->parsed()) {
      report = milnor::cmd_matroid_info(input, config);
    } else if (betti->parsed()) {
      report = milnor::cmd_bergman_betti(input, config);
    } else if (verify->parsed()) {
      std::optional<milnor::WeightVector> w;
      if (!weight_text.empty()) w = milnor::parse_weight(weight_text);
      report = milnor::cmd_verify_initial(input, w, config);
    } else if (strata->parsed()) {
      report = milnor::cmd_strata(input, config);
    } else if (count->parsed()) {
      report = milnor::cmd_count(input, config);
    } else if (invariance->parsed()) {
      report = milnor::cmd_invariance(input, config);
      if (!csv_out.empty()) write_csv(report, csv_out);
    } else {
      report = milnor::cmd_fan_report(input, config);
    }
    return emit(report, config);
  } catch (const milnor::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
