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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "svq/error.hpp"
#include "svq/formula.hpp"
#include "svq/hilbert.hpp"
#include "svq/ledger.hpp"

namespace svq::scenario {

/// 1-based source position.
struct SourcePos {
  int line = 1;
  int column = 1;

  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

/// A diagnostic tied to a source position and, for run-time failures, to the
/// index of the statement being executed.
class ScenarioError : public Error {
 public:
  ScenarioError(ErrorCode code, SourcePos pos, const std::string& message,
                std::optional<std::size_t> step = std::nullopt)
      : Error(code, format(pos, message, step)), pos_(pos), step_(step), message_(message) {}

  SourcePos pos() const noexcept { return pos_; }
  std::optional<std::size_t> step() const noexcept { return step_; }
  const std::string& message() const noexcept { return message_; }

 private:
  static std::string format(SourcePos pos, const std::string& message,
                            std::optional<std::size_t> step) {
    std::string out = std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": ";
    if (step) out += "step " + std::to_string(*step) + ": ";
    return out + message;
  }

  SourcePos pos_;
  std::optional<std::size_t> step_;
  std::string message_;
};

/// A numeric literal: its value and its canonical source spelling (tokens
/// joined without whitespace), so printing preserves forms like 1/sqrt(2).
struct Scalar {
  Complex value;
  std::string text;

  friend bool operator==(const Scalar&, const Scalar&) = default;
};

using VectorLiteral = std::vector<Scalar>;
using MatrixLiteral = std::vector<VectorLiteral>;

struct StateDecl {
  std::string id;
  VectorLiteral components;
  friend bool operator==(const StateDecl&, const StateDecl&) = default;
};

struct PropDecl {
  std::string id;
  std::vector<VectorLiteral> spanning;
  std::optional<std::string> label;
  friend bool operator==(const PropDecl&, const PropDecl&) = default;
};

struct FormulaDecl {
  std::string id;
  Formula formula;
  friend bool operator==(const FormulaDecl&, const FormulaDecl&) = default;
};

enum class ConfigKey { Tol, Seed, POne };

struct SetStmt {
  ConfigKey key = ConfigKey::Tol;
  Scalar value;
  friend bool operator==(const SetStmt&, const SetStmt&) = default;
};

struct RecordStep {
  Timestamp at;
  friend bool operator==(const RecordStep&, const RecordStep&) = default;
};

struct CloneStep {
  std::string source;
  std::string target;
  friend bool operator==(const CloneStep&, const CloneStep&) = default;
};

struct UncloneStep {
  std::string target;
  std::string blank;
  friend bool operator==(const UncloneStep&, const UncloneStep&) = default;
};

struct BlackholeStep {
  std::string target;
  friend bool operator==(const BlackholeStep&, const BlackholeStep&) = default;
};

struct EvolveStep {
  std::string target;
  MatrixLiteral matrix;
  friend bool operator==(const EvolveStep&, const EvolveStep&) = default;
};

struct ReconstructStep {
  std::optional<Scalar> p_one;
  friend bool operator==(const ReconstructStep&, const ReconstructStep&) = default;
};

struct EvalQuery {
  std::string state;
  std::string prop;
  friend bool operator==(const EvalQuery&, const EvalQuery&) = default;
};

struct SuperQuery {
  std::string formula;
  std::optional<std::string> state;
  friend bool operator==(const SuperQuery&, const SuperQuery&) = default;
};

struct CheckPastQuery {
  friend bool operator==(const CheckPastQuery&, const CheckPastQuery&) = default;
};

struct FeasibleQuery {
  std::string first;
  std::string second;
  friend bool operator==(const FeasibleQuery&, const FeasibleQuery&) = default;
};

using Statement =
    std::variant<StateDecl, PropDecl, FormulaDecl, SetStmt, RecordStep, CloneStep, UncloneStep,
                 BlackholeStep, EvolveStep, ReconstructStep, EvalQuery, SuperQuery,
                 CheckPastQuery, FeasibleQuery>;

struct Located {
  SourcePos pos;
  Statement stmt;

  /// Positions are layout, not meaning.
  friend bool operator==(const Located& a, const Located& b) { return a.stmt == b.stmt; }
};

struct Scenario {
  std::vector<Located> statements;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

}  // namespace svq::scenario
