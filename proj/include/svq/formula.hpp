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
 * Propositional formulas over named atoms and their supervaluational
 * evaluation: a formula is supertrue when every classical completion of the
 * gappy atoms makes it true, superfalse when every completion makes it
 * false, and gappy otherwise.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "svq/config.hpp"
#include "svq/error.hpp"
#include "svq/truth.hpp"

namespace svq {

/// Immutable formula tree. Copies share structure.
class Formula {
 public:
  enum class Kind { Atom, Not, And, Or, Implies };

  static Formula atom(std::string id) {
    return Formula(std::make_shared<const Node>(Node{Kind::Atom, std::move(id), {}, {}}));
  }
  static Formula negation(Formula f) {
    return Formula(std::make_shared<const Node>(Node{Kind::Not, {}, std::move(f.node_), {}}));
  }
  static Formula conjunction(Formula l, Formula r) { return binary(Kind::And, l, r); }
  static Formula disjunction(Formula l, Formula r) { return binary(Kind::Or, l, r); }
  static Formula implication(Formula l, Formula r) { return binary(Kind::Implies, l, r); }

  Kind kind() const noexcept { return node_->kind; }
  /// Atom name; empty for compound formulas.
  const std::string& id() const noexcept { return node_->id; }
  Formula lhs() const { return Formula(node_->lhs); }
  Formula rhs() const { return Formula(node_->rhs); }

  friend Formula operator!(Formula f) { return negation(std::move(f)); }
  friend Formula operator&(Formula l, Formula r) { return conjunction(l, r); }
  friend Formula operator|(Formula l, Formula r) { return disjunction(l, r); }

  friend bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
      case Kind::Atom: return a.id() == b.id();
      case Kind::Not: return a.lhs() == b.lhs();
      default: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    }
  }

 private:
  struct Node {
    Kind kind;
    std::string id;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  static Formula binary(Kind k, const Formula& l, const Formula& r) {
    return Formula(std::make_shared<const Node>(Node{k, {}, l.node_, r.node_}));
  }

  std::shared_ptr<const Node> node_;
};

inline Formula implies(Formula l, Formula r) {
  return Formula::implication(std::move(l), std::move(r));
}

inline void collect_atoms(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom: out.insert(f.id()); return;
    case Formula::Kind::Not: collect_atoms(f.lhs(), out); return;
    default:
      collect_atoms(f.lhs(), out);
      collect_atoms(f.rhs(), out);
  }
}

/// Distinct atom ids, sorted.
inline std::set<std::string> atoms(const Formula& f) {
  std::set<std::string> out;
  collect_atoms(f, out);
  return out;
}

/// Fully parenthesized infix rendering: !, &, |, ->.
inline std::string to_string(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom: return f.id();
    case Formula::Kind::Not: return "!" + to_string(f.lhs());
    case Formula::Kind::And: return "(" + to_string(f.lhs()) + " & " + to_string(f.rhs()) + ")";
    case Formula::Kind::Or: return "(" + to_string(f.lhs()) + " | " + to_string(f.rhs()) + ")";
    case Formula::Kind::Implies:
      return "(" + to_string(f.lhs()) + " -> " + to_string(f.rhs()) + ")";
  }
  return {};
}

/// Classical two-valued evaluation; `value(id)` supplies each atom.
template <class Lookup>
bool evaluate_classical(const Formula& f, const Lookup& value) {
  switch (f.kind()) {
    case Formula::Kind::Atom: return value(f.id());
    case Formula::Kind::Not: return !evaluate_classical(f.lhs(), value);
    case Formula::Kind::And:
      return evaluate_classical(f.lhs(), value) && evaluate_classical(f.rhs(), value);
    case Formula::Kind::Or:
      return evaluate_classical(f.lhs(), value) || evaluate_classical(f.rhs(), value);
    case Formula::Kind::Implies:
      return !evaluate_classical(f.lhs(), value) || evaluate_classical(f.rhs(), value);
  }
  return false;
}

/// Supervaluation. Gap atoms are completed independently to every Boolean
/// assignment (2^g precisifications); compatibility relations between the
/// underlying quantum propositions are not imposed.
inline TruthValue evaluate_super(const Formula& f,
                                 const std::map<std::string, TruthValue>& atomics,
                                 std::size_t max_gap_atoms = kDefaults.max_gap_atoms) {
  std::unordered_map<std::string, bool> fixed;
  std::unordered_map<std::string, std::size_t> gap_bit;
  for (const auto& id : atoms(f)) {
    const auto it = atomics.find(id);
    if (it == atomics.end()) {
      throw Error(ErrorCode::UnknownAtom, "no truth value supplied for atom '" + id + "'");
    }
    if (it->second == TruthValue::Gap) {
      const std::size_t bit = gap_bit.size();
      gap_bit.emplace(id, bit);
    } else {
      fixed.emplace(id, it->second == TruthValue::True);
    }
  }
  if (gap_bit.size() > max_gap_atoms || gap_bit.size() >= 64) {
    throw Error(ErrorCode::PrecisificationBlowup,
                std::to_string(gap_bit.size()) + " gap atoms exceed the cap of " +
                    std::to_string(max_gap_atoms));
  }

  const std::uint64_t completions = std::uint64_t{1} << gap_bit.size();
  bool seen_true = false;
  bool seen_false = false;
  for (std::uint64_t mask = 0; mask < completions; ++mask) {
    const bool result = evaluate_classical(f, [&](const std::string& id) {
      if (const auto it = fixed.find(id); it != fixed.end()) return it->second;
      return ((mask >> gap_bit.at(id)) & 1U) != 0;
    });
    (result ? seen_true : seen_false) = true;
    if (seen_true && seen_false) return TruthValue::Gap;
  }
  return seen_true ? TruthValue::True : TruthValue::False;
}

}  // namespace svq
