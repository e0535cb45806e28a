// Copyright 2026 The svq Authors
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

// svq: run, evaluate and check supervaluational quantum scenarios.
//
// Exit codes: 0 success, 1 a check-past query found violations, 2 error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "svq/svq.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kViolations = 1;
constexpr int kError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int report_error(const std::string& file, const std::exception& e) {
  if (const auto* se = dynamic_cast<const svq::scenario::ScenarioError*>(&e)) {
    std::cerr << file << ":" << se->pos().line << ":" << se->pos().column << ": "
              << svq::to_string(se->code()) << ": ";
    if (se->step()) std::cerr << "step " << *se->step() << ": ";
    std::cerr << se->message() << "\n";
  } else {
    std::cerr << (file.empty() ? "svq" : file) << ": " << e.what() << "\n";
  }
  return kError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Supervaluational semantics for quantum propositions"};
  app.require_subcommand(1);

  std::string run_file;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  std::optional<double> p_one;
  std::string format = "text";
  auto* run = app.add_subcommand("run", "Run a scenario and print its report");
  run->add_option("file", run_file, "Scenario file (.svq)")->required();
  run->add_option("--seed", seed, "Random seed (overrides 'set seed')");
  run->add_option("--tol", tol, "Tolerance (overrides 'set tol')")->check(CLI::PositiveNumber);
  run->add_option("--p-one", p_one, "Reconstruction probability (overrides 'set p_one')")
      ->check(CLI::Range(0.0, 1.0));
  run->add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string state_text;
  std::vector<std::string> span_texts;
  double eval_tol = svq::kDefaults.tol;
  auto* eval = app.add_subcommand("eval", "Evaluate membership of one state in one span");
  eval->add_option("--state", state_text, "State vector, e.g. \"[1, 0]\"")->required();
  eval->add_option("--span", span_texts, "Spanning vector (repeatable)")
      ->required()
      ->allow_extra_args(false);
  eval->add_option("--tol", eval_tol, "Tolerance")->check(CLI::PositiveNumber);

  std::string check_file;
  bool print = false;
  auto* check = app.add_subcommand("check", "Parse and statically check a scenario");
  check->add_option("file", check_file, "Scenario file (.svq)")->required();
  check->add_flag("--print", print, "Print the canonical form");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kError;
  }

  if (*run) {
    try {
      const auto scenario = svq::scenario::parse_scenario(read_file(run_file));
      const auto report = svq::scenario::run_scenario(scenario, {tol, seed, p_one});
      std::cout << svq::scenario::emit_report(report, format == "json"
                                                          ? svq::scenario::ReportFormat::Json
                                                          : svq::scenario::ReportFormat::Text);
      return report.violations_found() ? kViolations : kOk;
    } catch (const std::exception& e) {
      return report_error(run_file, e);
    }
  }

  if (*eval) {
    try {
      const auto state = svq::make_state(svq::scenario::parse_vector(state_text), eval_tol);
      std::vector<svq::CVector> spanning;
      for (const auto& t : span_texts) spanning.push_back(svq::scenario::parse_vector(t));
      const auto subspace = svq::span_subspace(spanning, state.dim(), eval_tol);
      std::cout << svq::membership(state, subspace, eval_tol) << "\n";
      return kOk;
    } catch (const std::exception& e) {
      return report_error("", e);
    }
  }

  try {
    const auto scenario = svq::scenario::parse_scenario(read_file(check_file));
    if (print) {
      std::cout << svq::scenario::print_scenario(scenario);
    } else {
      std::cout << "ok: " << scenario.statements.size() << " statements\n";
    }
    return kOk;
  } catch (const std::exception& e) {
    return report_error(check_file, e);
  }
}
