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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "svq/svq.hpp"

namespace svq::scenario {
namespace {

using T = TruthValue;

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::filesystem::path> corpus() {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(SVQ_SCENARIO_DIR)) {
    if (e.path().extension() == ".svq") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

ScenarioError parse_error(const std::string& text) {
  try {
    parse_scenario(text);
  } catch (const ScenarioError& e) {
    return e;
  }
  ADD_FAILURE() << "expected a diagnostic for:\n" << text;
  return ScenarioError(ErrorCode::SyntaxError, {}, "none");
}

ScenarioError run_error(const std::string& text) {
  try {
    run_scenario(parse_scenario(text));
  } catch (const ScenarioError& e) {
    return e;
  }
  ADD_FAILURE() << "expected a run-time diagnostic for:\n" << text;
  return ScenarioError(ErrorCode::SyntaxError, {}, "none");
}

TEST(Parser, StatementsAndPositions) {
  const auto s = parse_scenario("state phi = [1, 0]\n  record at 3\n");
  ASSERT_EQ(s.statements.size(), 2U);
  EXPECT_EQ(s.statements[0].pos, (SourcePos{1, 1}));
  EXPECT_EQ(s.statements[1].pos, (SourcePos{2, 3}));
  EXPECT_EQ(std::get<RecordStep>(s.statements[1].stmt).at, Timestamp{3});
}

TEST(Parser, StateAndPropDeclarations) {
  const auto s = parse_scenario(
      "state phi = [1/sqrt(2), -i/sqrt(2)]\n"
      "prop P = span([1, 0], [0, 1]) \"everything\"\n");
  ASSERT_EQ(s.statements.size(), 2U);
  const auto& st = std::get<StateDecl>(s.statements[0].stmt);
  EXPECT_EQ(st.id, "phi");
  ASSERT_EQ(st.components.size(), 2U);
  EXPECT_NEAR(std::abs(st.components[0].value - Complex(1 / std::sqrt(2.0), 0)), 0, 1e-15);
  EXPECT_NEAR(std::abs(st.components[1].value - Complex(0, -1 / std::sqrt(2.0))), 0, 1e-15);
  const auto& p = std::get<PropDecl>(s.statements[1].stmt);
  EXPECT_EQ(p.spanning.size(), 2U);
  EXPECT_EQ(p.label, "everything");
  EXPECT_EQ(s.statements[1].pos, (SourcePos{2, 1}));
}

TEST(Parser, StepsAndQueries) {
  const auto s = parse_scenario(
      "state a = [1, 0]\nstate b = [0, 1]\nprop Z = span([1, 0])\n"
      "formula F = Z | not Z\n"
      "record at 0\nclone a -> b\nunclone b blank a\nblackhole a\n"
      "evolve b by [[0, 1], [1, 0]]\nreconstruct p 0.25\n"
      "eval a in Z\nsuper F in a\ncheck-past\nfeasible a b\n");
  ASSERT_EQ(s.statements.size(), 14U);
  EXPECT_EQ(std::get<RecordStep>(s.statements[4].stmt).at, Timestamp{0});
  EXPECT_EQ(std::get<CloneStep>(s.statements[5].stmt).target, "b");
  EXPECT_EQ(std::get<UncloneStep>(s.statements[6].stmt).blank, "a");
  EXPECT_EQ(std::get<EvolveStep>(s.statements[8].stmt).matrix.size(), 2U);
  EXPECT_DOUBLE_EQ(std::get<ReconstructStep>(s.statements[9].stmt).p_one->value.real(), 0.25);
  EXPECT_EQ(std::get<SuperQuery>(s.statements[11].stmt).state, "a");
  EXPECT_TRUE(std::holds_alternative<CheckPastQuery>(s.statements[12].stmt));
  EXPECT_EQ(to_string(std::get<FormulaDecl>(s.statements[3].stmt).formula), "(Z | !Z)");
}

TEST(Parser, Comments) {
  EXPECT_EQ(parse_scenario("# nothing\n\n   # still nothing\n").statements.size(), 0U);
  EXPECT_EQ(parse_scenario("state a = [1, 0] # trailing\n").statements.size(), 1U);
}

TEST(Parser, UnknownIdentifierPointsAtUse) {
  const auto e = parse_error("state x = [1, 0]\neval x in Q\n");
  EXPECT_EQ(e.code(), ErrorCode::UnknownIdentifier);
  EXPECT_EQ(e.pos(), (SourcePos{2, 11}));
}

TEST(Parser, DuplicateIdentifier) {
  const auto e = parse_error("state x = [1, 0]\nstate x = [0, 1]\n");
  EXPECT_EQ(e.code(), ErrorCode::DuplicateIdentifier);
  EXPECT_EQ(e.pos().line, 2);
}

TEST(Parser, SyntaxErrors) {
  for (const char* bad : {"state x [1, 0]", "state x = [1, 0", "record at", "frobnicate",
                          "state blank = [1, 0]", "prop P = span()", "prop A = span([1, 0])\nformula F = (A"}) {
    EXPECT_EQ(parse_error(bad).code(), ErrorCode::SyntaxError) << bad;
  }
}

TEST(Parser, DimensionMismatchIsStatic) {
  const auto e = parse_error("state x = [1, 0, 0]\nprop Z = span([1, 0])\neval x in Z\n");
  EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
  EXPECT_EQ(e.pos().line, 3);
}

TEST(Parser, ZeroStateIsRejected) {
  EXPECT_EQ(parse_error("state x = [0, 0]\n").code(), ErrorCode::ZeroVector);
}

TEST(Printer, CorpusRoundTrip) {
  for (const auto& path : corpus()) {
    const auto first = parse_scenario(slurp(path));
    const std::string printed = print_scenario(first);
    const auto second = parse_scenario(printed);
    EXPECT_EQ(first, second) << path;
    EXPECT_EQ(print_scenario(second), printed) << path;
  }
}

TEST(Runner, EvalValuationTable) {
  const auto r = run_scenario(parse_scenario(slurp(std::filesystem::path(SVQ_SCENARIO_DIR) /
                                                   "valuation_table.svq")));
  std::vector<T> got;
  for (const auto& v : r.valuations) got.push_back(v.truth);
  EXPECT_EQ(got, (std::vector<T>{T::True, T::False, T::Gap, T::Gap, T::Gap, T::True}));
  EXPECT_FALSE(r.violations_found());
}

TEST(Runner, CloneTruthLoss) {
  const auto text = slurp(std::filesystem::path(SVQ_SCENARIO_DIR) / "clone_truth_loss.svq");
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    RunOverrides o;
    o.seed = seed;
    const auto r = run_scenario(parse_scenario(text), o);
    ASSERT_FALSE(r.transitions.empty());
    EXPECT_EQ(r.transitions[0].kind, "clone");
    EXPECT_EQ(r.transitions[0].before, T::True);
    EXPECT_EQ(r.transitions[0].after, T::Gap);
    ASSERT_EQ(r.reconstructions.size(), 1U);
    EXPECT_EQ(r.reconstructions[0].prop_id, "Zplus@phi");
    const int x = r.reconstructions[0].outcome.value;
    int losses = 0;
    int flips = 0;
    for (const auto& v : r.violations) {
      (v.violation.kind == ViolationKind::Loss ? losses : flips) += 1;
    }
    EXPECT_EQ(losses, 1);
    EXPECT_EQ(flips, x == 1 ? 0 : 1);
  }
}

TEST(Runner, DownBlankLosesFalse) {
  const auto r = run_scenario(parse_scenario(
      slurp(std::filesystem::path(SVQ_SCENARIO_DIR) / "clone_blank_down.svq")));
  ASSERT_FALSE(r.transitions.empty());
  EXPECT_EQ(r.transitions[0].before, T::False);
  EXPECT_EQ(r.transitions[0].after, T::Gap);
}

TEST(Runner, OrthogonalBlankHasNoLoss) {
  const auto r = run_scenario(parse_scenario(
      slurp(std::filesystem::path(SVQ_SCENARIO_DIR) / "orthogonal_blank.svq")));
  for (const auto& t : r.transitions) {
    EXPECT_FALSE(is_determinate(t.before) && t.after == T::Gap);
  }
  EXPECT_FALSE(r.violations_found());
}

TEST(Runner, UnitaryControlHasNoViolations) {
  const auto r = run_scenario(parse_scenario(
      slurp(std::filesystem::path(SVQ_SCENARIO_DIR) / "unitary_control.svq")));
  EXPECT_FALSE(r.violations_found());
  EXPECT_TRUE(check_past_unalterability(r.ledger).empty());
}

TEST(Runner, SupervaluationCorpus) {
  const auto r = run_scenario(parse_scenario(
      slurp(std::filesystem::path(SVQ_SCENARIO_DIR) / "supervaluation.svq")));
  std::vector<T> got;
  for (const auto& s : r.supervaluations) got.push_back(s.truth);
  EXPECT_EQ(got, (std::vector<T>{T::True, T::False, T::Gap, T::True, T::True}));
}

TEST(Runner, SetAndOverrides) {
  const auto s = parse_scenario("set seed 9\nset p_one 1\nstate a = [1, 0]\n");
  EXPECT_EQ(run_scenario(s).seed, 9U);
  EXPECT_DOUBLE_EQ(run_scenario(s).p_one, 1.0);
  RunOverrides o;
  o.seed = 4;
  o.p_one = 0.0;
  EXPECT_EQ(run_scenario(s, o).seed, 4U);
  EXPECT_DOUBLE_EQ(run_scenario(s, o).p_one, 0.0);
}

TEST(Runner, ReconstructWithCertainProbability) {
  const std::string text =
      "state a = [1, 0]\nstate u = [1, 1]\nprop Z = span([1, 0])\n"
      "record at 0\nclone u -> a\nrecord at 1\nreconstruct p 1\ncheck-past\n";
  const auto r = run_scenario(parse_scenario(text));
  ASSERT_EQ(r.reconstructions.size(), 1U);
  EXPECT_EQ(r.reconstructions[0].outcome.value, 1);
  ASSERT_EQ(r.violations.size(), 1U);
  EXPECT_EQ(r.violations[0].violation.kind, ViolationKind::Loss);
}

TEST(Runner, NonUnitaryEvolutionRenormalizes) {
  const auto r = run_scenario(parse_scenario(
      "state a = [1, 1]\nprop Z = span([1, 0])\nevolve a by [[1, 0], [0, 0]]\neval a in Z\n"));
  ASSERT_EQ(r.valuations.size(), 1U);
  EXPECT_EQ(r.valuations[0].truth, T::True);
}

TEST(Runner, AmbiguousSubject) {
  const auto e = run_error(
      "state a = [1, 0]\nstate b = [0, 1]\nprop Z = span([1, 0])\nformula F = Z\nsuper F\n");
  EXPECT_EQ(e.code(), ErrorCode::AmbiguousSubject);
  EXPECT_EQ(e.pos().line, 5);
}

TEST(Report, JsonAndText) {
  const auto r = run_scenario(parse_scenario(
      "state a = [1, 0]\nprop Z = span([1, 0])\nprop X = span([1, 1])\n"
      "eval a in Z\neval a in X\n"));
  const auto j = nlohmann::json::parse(emit_report(r, ReportFormat::Json));
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["valuations"][0]["truth"], "1");
  EXPECT_EQ(j["valuations"][1]["truth"], "0/0");
  const auto text = emit_report(r, ReportFormat::Text);
  EXPECT_NE(text.find("0/0"), std::string::npos);
}

TEST(Report, DeterministicJson) {
  for (const auto& path : corpus()) {
    const auto s = parse_scenario(slurp(path));
    EXPECT_EQ(emit_report(run_scenario(s), ReportFormat::Json),
              emit_report(run_scenario(s), ReportFormat::Json))
        << path;
  }
}

TEST(ParseVector, Standalone) {
  const CVector v = parse_vector("[1, 2i, -0.5]");
  ASSERT_EQ(v.size(), 3);
  EXPECT_EQ(v(1), Complex(0, 2));
  EXPECT_EQ(v(2), Complex(-0.5, 0));
}

}  // namespace
}  // namespace svq::scenario
