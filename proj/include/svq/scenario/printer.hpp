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

#include <string>
#include <type_traits>

#include "svq/scenario/ast.hpp"

namespace svq::scenario {

inline std::string print_vector(const VectorLiteral& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) out += ", ";
    out += v[i].text;
  }
  return out + "]";
}

inline std::string print_matrix(const MatrixLiteral& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i != 0) out += ", ";
    out += print_vector(m[i]);
  }
  return out + "]";
}

inline std::string quote(const std::string& s) {
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out + "\"";
}

/// Canonical one-line rendering; parsing it back yields an equal statement.
inline std::string print_statement(const Statement& stmt) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, StateDecl>) {
          return "state " + s.id + " = " + print_vector(s.components);
        } else if constexpr (std::is_same_v<T, PropDecl>) {
          std::string out = "prop " + s.id + " = span(";
          for (std::size_t i = 0; i < s.spanning.size(); ++i) {
            if (i != 0) out += ", ";
            out += print_vector(s.spanning[i]);
          }
          out += ")";
          if (s.label) out += " " + quote(*s.label);
          return out;
        } else if constexpr (std::is_same_v<T, FormulaDecl>) {
          return "formula " + s.id + " = " + to_string(s.formula);
        } else if constexpr (std::is_same_v<T, SetStmt>) {
          const char* key = s.key == ConfigKey::Tol ? "tol" : s.key == ConfigKey::Seed ? "seed"
                                                                                       : "p_one";
          return std::string("set ") + key + " " + s.value.text;
        } else if constexpr (std::is_same_v<T, RecordStep>) {
          return "record at " + std::to_string(s.at.tick);
        } else if constexpr (std::is_same_v<T, CloneStep>) {
          return "clone " + s.source + " -> " + s.target;
        } else if constexpr (std::is_same_v<T, UncloneStep>) {
          return "unclone " + s.target + " blank " + s.blank;
        } else if constexpr (std::is_same_v<T, BlackholeStep>) {
          return "blackhole " + s.target;
        } else if constexpr (std::is_same_v<T, EvolveStep>) {
          return "evolve " + s.target + " by " + print_matrix(s.matrix);
        } else if constexpr (std::is_same_v<T, ReconstructStep>) {
          return s.p_one ? "reconstruct p " + s.p_one->text : std::string("reconstruct");
        } else if constexpr (std::is_same_v<T, EvalQuery>) {
          return "eval " + s.state + " in " + s.prop;
        } else if constexpr (std::is_same_v<T, SuperQuery>) {
          return "super " + s.formula + (s.state ? " in " + *s.state : std::string());
        } else if constexpr (std::is_same_v<T, CheckPastQuery>) {
          return "check-past";
        } else {
          return "feasible " + s.first + " " + s.second;
        }
      },
      stmt);
}

inline std::string print_scenario(const Scenario& s) {
  std::string out;
  for (const auto& located : s.statements) {
    out += print_statement(located.stmt);
    out += '\n';
  }
  return out;
}

}  // namespace svq::scenario
