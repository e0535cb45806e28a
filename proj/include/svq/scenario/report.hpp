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

/**
 * @file
 * Scenario run reports and their text and JSON renderings.
 *
 * JSON schema 1 (keys in this order):
 *   schema, seed, tolerance, p_one, steps, valuations, transitions,
 *   supervaluations, feasibility, reconstructions, histories, violations,
 *   ledger
 * Truth values are the strings "1", "0" and "0/0". `ledger` holds the
 * ledger line format, one string per record.
 */

#pragma once

#include <array>
#include <charconv>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "svq/dynamics.hpp"
#include "svq/ledger.hpp"
#include "svq/scenario/ast.hpp"

namespace svq::scenario {

inline constexpr int kReportSchema = 1;

struct StepEntry {
  std::size_t index = 0;
  SourcePos pos;
  std::string kind;
  std::string statement;
  /// Clone-like steps: whether some unitary could realize the map.
  std::optional<bool> physical;
  /// Randomized steps: the seed actually used.
  std::optional<std::uint64_t> seed;
};

struct ValuationEntry {
  std::size_t step = 0;
  std::string source;  // "eval" or "record"
  std::string state;
  std::string prop;
  TruthValue truth = TruthValue::Gap;
  std::optional<Timestamp> at;
};

struct TransitionEntry {
  std::size_t step = 0;
  std::string kind;
  std::string state;
  std::string prop;
  TruthValue before = TruthValue::Gap;
  TruthValue after = TruthValue::Gap;
};

struct SuperEntry {
  std::size_t step = 0;
  std::string formula;
  std::string state;
  std::map<std::string, TruthValue> atomics;
  TruthValue truth = TruthValue::Gap;
};

struct FeasibilityEntry {
  std::size_t step = 0;
  std::string first;
  std::string second;
  FeasibilityReport report;
};

struct ReconstructionEntry {
  std::size_t step = 0;
  std::string prop_id;
  Timestamp at;
  Timestamp asserted_at;
  ReconstructionOutcome outcome;
};

struct ViolationEntry {
  std::size_t step = 0;
  Violation violation;
};

struct Report {
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  double p_one = 0.5;
  std::vector<StepEntry> steps;
  std::vector<ValuationEntry> valuations;
  std::vector<TransitionEntry> transitions;
  std::vector<SuperEntry> supervaluations;
  std::vector<FeasibilityEntry> feasibility;
  std::vector<ReconstructionEntry> reconstructions;
  std::vector<ViolationEntry> violations;
  Ledger ledger;

  bool violations_found() const noexcept { return !violations.empty(); }
};

/// Sequence of truth values asserted for one (prop_id, at), in ledger order.
struct History {
  std::string prop_id;
  Timestamp at;
  std::vector<TruthValue> truths;
};

inline std::vector<History> histories(const Ledger& ledger) {
  std::vector<History> out;
  std::map<std::pair<std::string, std::uint64_t>, std::size_t> slot;
  for (const auto& rec : ledger.records()) {
    const auto key = std::make_pair(rec.prop_id, rec.at.tick);
    auto it = slot.find(key);
    if (it == slot.end()) {
      it = slot.emplace(key, out.size()).first;
      out.push_back(History{rec.prop_id, rec.at, {}});
    }
    out[it->second].truths.push_back(rec.truth);
  }
  return out;
}

enum class ReportFormat { Text, Json };

namespace detail {

inline std::string format_double(double v) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return ec == std::errc{} ? std::string(buf.data(), ptr) : std::string("nan");
}

inline std::string str(TruthValue v) { return std::string(to_string(v)); }

inline nlohmann::ordered_json to_json(const Report& r) {
  using json = nlohmann::ordered_json;
  json j;
  j["schema"] = kReportSchema;
  j["seed"] = r.seed;
  j["tolerance"] = r.tolerance;
  j["p_one"] = r.p_one;

  j["steps"] = json::array();
  for (const auto& s : r.steps) {
    json e;
    e["index"] = s.index;
    e["line"] = s.pos.line;
    e["column"] = s.pos.column;
    e["kind"] = s.kind;
    e["statement"] = s.statement;
    if (s.physical) e["physical"] = *s.physical;
    if (s.seed) e["seed"] = *s.seed;
    j["steps"].push_back(std::move(e));
  }

  j["valuations"] = json::array();
  for (const auto& v : r.valuations) {
    json e;
    e["step"] = v.step;
    e["source"] = v.source;
    e["state"] = v.state;
    e["prop"] = v.prop;
    if (v.at) e["at"] = v.at->tick;
    e["truth"] = str(v.truth);
    j["valuations"].push_back(std::move(e));
  }

  j["transitions"] = json::array();
  for (const auto& t : r.transitions) {
    j["transitions"].push_back({{"step", t.step},
                                {"kind", t.kind},
                                {"state", t.state},
                                {"prop", t.prop},
                                {"before", str(t.before)},
                                {"after", str(t.after)}});
  }

  j["supervaluations"] = json::array();
  for (const auto& s : r.supervaluations) {
    json atomics = json::object();
    for (const auto& [id, v] : s.atomics) atomics[id] = str(v);
    j["supervaluations"].push_back({{"step", s.step},
                                    {"formula", s.formula},
                                    {"state", s.state},
                                    {"atomics", std::move(atomics)},
                                    {"truth", str(s.truth)}});
  }

  j["feasibility"] = json::array();
  for (const auto& f : r.feasibility) {
    j["feasibility"].push_back({{"step", f.step},
                                {"first", f.first},
                                {"second", f.second},
                                {"feasible", f.report.feasible},
                                {"witness_overlap", f.report.witness_overlap},
                                {"witness_overlap_squared", f.report.witness_overlap_squared},
                                {"detail", f.report.detail}});
  }

  j["reconstructions"] = json::array();
  for (const auto& c : r.reconstructions) {
    j["reconstructions"].push_back({{"step", c.step},
                                    {"prop_id", c.prop_id},
                                    {"at", c.at.tick},
                                    {"asserted_at", c.asserted_at.tick},
                                    {"value", c.outcome.value},
                                    {"p_one", c.outcome.p_one},
                                    {"p_zero", c.outcome.p_zero},
                                    {"seed", c.outcome.seed}});
  }

  j["histories"] = json::array();
  for (const auto& h : histories(r.ledger)) {
    json truths = json::array();
    for (const auto t : h.truths) truths.push_back(str(t));
    j["histories"].push_back({{"prop_id", h.prop_id}, {"at", h.at.tick}, {"truths", truths}});
  }

  j["violations"] = json::array();
  for (const auto& v : r.violations) {
    j["violations"].push_back({{"step", v.step},
                               {"kind", std::string(to_string(v.violation.kind))},
                               {"prop_id", v.violation.prop_id},
                               {"at", v.violation.at.tick},
                               {"earlier", str(v.violation.earlier_truth)},
                               {"later", str(v.violation.later_truth)},
                               {"later_asserted_at", v.violation.later_asserted_at.tick}});
  }

  j["ledger"] = json::array();
  for (const auto& rec : r.ledger.records()) j["ledger"].push_back(to_line(rec));
  return j;
}

inline std::string to_text(const Report& r) {
  std::string out;
  auto line = [&out](const std::string& s) {
    out += s;
    out += '\n';
  };
  line("svq report (schema " + std::to_string(kReportSchema) + ")");
  line("seed " + std::to_string(r.seed) + "  tolerance " + format_double(r.tolerance) +
       "  p_one " + format_double(r.p_one));

  line("steps:");
  for (const auto& s : r.steps) {
    std::string e = "  [" + std::to_string(s.index) + "] line " + std::to_string(s.pos.line) +
                    "  " + s.statement;
    if (s.physical) e += *s.physical ? "  (unitary)" : "  (non-physical)";
    if (s.seed) e += "  seed " + std::to_string(*s.seed);
    line(e);
  }
  if (!r.valuations.empty()) {
    line("valuations:");
    for (const auto& v : r.valuations) {
      std::string e = "  [" + std::to_string(v.step) + "] " + v.source + " " + v.prop + "(" +
                      v.state + ")";
      if (v.at) e += " at " + std::to_string(v.at->tick);
      line(e + " = " + str(v.truth));
    }
  }
  if (!r.transitions.empty()) {
    line("transitions:");
    for (const auto& t : r.transitions) {
      line("  [" + std::to_string(t.step) + "] " + t.kind + " " + t.prop + "(" + t.state +
           "): " + str(t.before) + " -> " + str(t.after));
    }
  }
  if (!r.supervaluations.empty()) {
    line("supervaluations:");
    for (const auto& s : r.supervaluations) {
      std::string atomics;
      for (const auto& [id, v] : s.atomics) {
        atomics += (atomics.empty() ? "" : ", ") + id + "=" + str(v);
      }
      line("  [" + std::to_string(s.step) + "] " + s.formula + " in " + s.state + " {" +
           atomics + "} = " + str(s.truth));
    }
  }
  if (!r.feasibility.empty()) {
    line("feasibility:");
    for (const auto& f : r.feasibility) {
      line("  [" + std::to_string(f.step) + "] " + f.first + ", " + f.second + ": " +
           (f.report.feasible ? "feasible" : "infeasible") + " (" + f.report.detail + ")");
    }
  }
  if (!r.reconstructions.empty()) {
    line("reconstructions:");
    for (const auto& c : r.reconstructions) {
      line("  [" + std::to_string(c.step) + "] " + c.prop_id + " at " +
           std::to_string(c.at.tick) + ": 0/0 -> " + std::to_string(c.outcome.value) +
           " (p_one " + format_double(c.outcome.p_one) + ", seed " +
           std::to_string(c.outcome.seed) + ")");
    }
  }
  const auto hs = histories(r.ledger);
  if (!hs.empty()) {
    line("histories:");
    for (const auto& h : hs) {
      std::string chain;
      for (const auto t : h.truths) chain += (chain.empty() ? "" : " -> ") + str(t);
      line("  " + h.prop_id + " at " + std::to_string(h.at.tick) + ": " + chain);
    }
  }
  line("violations: " + std::to_string(r.violations.size()));
  for (const auto& v : r.violations) {
    line("  [" + std::to_string(v.step) + "] " + std::string(to_string(v.violation.kind)) +
         " " + v.violation.prop_id + " at " + std::to_string(v.violation.at.tick) + ": " +
         str(v.violation.earlier_truth) + " -> " + str(v.violation.later_truth) +
         " (asserted at " + std::to_string(v.violation.later_asserted_at.tick) + ")");
  }
  line("ledger:");
  for (const auto& rec : r.ledger.records()) line("  " + to_line(rec));
  return out;
}

}  // namespace detail

inline std::string emit_report(const Report& r, ReportFormat format) {
  if (format == ReportFormat::Json) return detail::to_json(r).dump(2) + "\n";
  return detail::to_text(r);
}

}  // namespace svq::scenario
