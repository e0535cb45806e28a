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
 * Executes a parsed scenario.
 *
 * Each declared state is a register whose value the steps overwrite. The
 * ledger key for proposition P evaluated on register R is "P@R".
 *
 * `record at t` moves the clock to t and appends, for every register and
 * every proposition of matching dimension:
 *   - the present valuation (at = t, asserted at t);
 *   - for each earlier recorded tick t', the past valuation as the present
 *     can still vouch for it (at = t', asserted at t).
 * The past valuation is obtained by running history backwards from the
 * present. Steps realizable by a unitary (unitary evolution, cloning or
 * un-cloning of orthogonal or identical states) invert exactly, so the
 * original truth comes back. The first step met that has no unitary
 * inverse (hypothetical cloning, non-unitary evolution, black-hole
 * evaporation) stops the walk, and the past is read off the state right
 * after that step.
 *
 * `reconstruct` assigns a Bernoulli(p_one) draw to every past key whose
 * latest valuation is a gap after having been determinate.
 */

#pragma once

#include <charconv>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "svq/dynamics.hpp"
#include "svq/formula.hpp"
#include "svq/lattice.hpp"
#include "svq/ledger.hpp"
#include "svq/random.hpp"
#include "svq/scenario/ast.hpp"
#include "svq/scenario/parser.hpp"
#include "svq/scenario/printer.hpp"
#include "svq/scenario/report.hpp"

namespace svq::scenario {

struct RunOverrides {
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  std::optional<double> p_one;
};

/// Seed streams, so adding a draw of one kind never shifts another.
inline constexpr std::uint64_t kReconstructStream = 1;
inline constexpr std::uint64_t kBlackholeStream = 2;

namespace detail {

inline CVector literal_vector(const VectorLiteral& v) { return to_cvector(v); }

inline CMatrix literal_matrix(const MatrixLiteral& m) {
  const auto n = static_cast<Index>(m.size());
  CMatrix out(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) out(i, j) = m[i][j].value;
  }
  return out;
}

inline std::string step_kind(const Statement& s) {
  static constexpr const char* kNames[] = {
      "state", "prop",    "formula", "set",  "record", "clone",      "unclone",
      "blackhole", "evolve", "reconstruct", "eval", "super", "check-past", "feasible"};
  return kNames[s.index()];
}

class Runner {
 public:
  Runner(const Scenario& scenario, const RunOverrides& overrides) : scenario_(scenario) {
    for (const auto& located : scenario.statements) {
      if (const auto* set = std::get_if<SetStmt>(&located.stmt)) {
        switch (set->key) {
          case ConfigKey::Tol: config_.tol = set->value.value.real(); break;
          case ConfigKey::POne: config_.p_one = set->value.value.real(); break;
          case ConfigKey::Seed: {
            std::uint64_t seed = 0;
            const auto& t = set->value.text;
            std::from_chars(t.data(), t.data() + t.size(), seed);
            config_.seed = seed;
            break;
          }
        }
      }
    }
    if (overrides.tol) config_.tol = *overrides.tol;
    if (overrides.seed) config_.seed = *overrides.seed;
    if (overrides.p_one) config_.p_one = *overrides.p_one;
    if (!(config_.tol > 0.0)) {
      throw Error(ErrorCode::SyntaxError, "tolerance must be positive");
    }
    if (!(config_.p_one >= 0.0 && config_.p_one <= 1.0)) {
      throw Error(ErrorCode::BadProbability, "p_one must lie in [0, 1]");
    }
    report_.seed = config_.seed;
    report_.tolerance = config_.tol;
    report_.p_one = config_.p_one;
  }

  Report run() {
    const auto& stmts = scenario_.statements;
    for (std::size_t i = 0; i < stmts.size(); ++i) {
      step_ = i;
      pos_ = stmts[i].pos;
      report_.steps.push_back(
          StepEntry{i, pos_, step_kind(stmts[i].stmt), print_statement(stmts[i].stmt), {}, {}});
      try {
        std::visit([this](const auto& s) { exec(s); }, stmts[i].stmt);
      } catch (const ScenarioError&) {
        throw;
      } catch (const Error& e) {
        throw ScenarioError(e.code(), pos_, e.what(), i);
      }
    }
    report_.ledger = ledger_;
    return std::move(report_);
  }

 private:
  struct Event {
    bool invertible;
    StateVector after;
  };

  struct Mark {
    std::size_t events_before;  // history length when the tick was recorded
    StateVector state;
  };

  struct Register {
    std::string id;
    StateVector state;
    std::vector<Event> events;
    std::map<std::uint64_t, Mark> marks;
    std::optional<std::string> clone_source;
  };

  Register& reg(const std::string& id) { return registers_.at(index_.at(id)); }

  // --- declarations ---------------------------------------------------------

  void exec(const StateDecl& d) {
    index_.emplace(d.id, registers_.size());
    registers_.push_back(
        Register{d.id, make_state(literal_vector(d.components), config_.tol), {}, {}, {}});
  }

  void exec(const PropDecl& d) {
    std::vector<CVector> columns;
    for (const auto& v : d.spanning) columns.push_back(literal_vector(v));
    const auto dim = static_cast<Index>(d.spanning.front().size());
    props_.push_back(Proposition{d.id, d.label.value_or(d.id),
                                 span_subspace(columns, dim, config_.tol)});
    prop_index_.emplace(d.id, props_.size() - 1);
  }

  void exec(const FormulaDecl& d) { formulas_.emplace(d.id, d.formula); }
  void exec(const SetStmt&) {}

  // --- steps ----------------------------------------------------------------

  void exec(const RecordStep& s) {
    const Timestamp now = s.at;
    if (clock_ && now < *clock_) {
      throw Error(ErrorCode::NonMonotoneAssertion,
                  "record at " + std::to_string(now.tick) + " after the clock reached " +
                      std::to_string(clock_->tick));
    }
    clock_ = now;
    for (auto& r : registers_) {
      r.marks.try_emplace(now.tick, Mark{r.events.size(), r.state});
      for (const auto& p : props_) {
        if (p.subspace.dim() != r.state.dim()) continue;
        const std::string key = p.id + "@" + r.id;
        const TruthValue present = membership(r.state, p.subspace, config_.tol);
        ledger_ = record_valuation(ledger_, now, key, present, now);
        report_.valuations.push_back(ValuationEntry{step_, "record", r.id, p.id, present, now});
        auto& ticks = recorded_ticks_[key];
        for (const auto tick : ticks) {
          if (tick >= now.tick) continue;
          const TruthValue past = membership(backtracked_state(r, tick), p.subspace, config_.tol);
          ledger_ = record_valuation(ledger_, Timestamp{tick}, key, past, now);
        }
        ticks.insert(now.tick);
      }
    }
  }

  /// State at `tick` as recoverable from the present; see the file comment.
  const StateVector& backtracked_state(const Register& r, std::uint64_t tick) const {
    const Mark& mark = r.marks.at(tick);
    for (std::size_t k = r.events.size(); k > mark.events_before; --k) {
      if (!r.events[k - 1].invertible) return r.events[k - 1].after;
    }
    return mark.state;
  }

  void transition(const std::string& kind, Register& r, const StateVector& before) {
    for (const auto& p : props_) {
      if (p.subspace.dim() != r.state.dim()) continue;
      const auto [b, a] = truth_transition(before, r.state, p.subspace, config_.tol);
      report_.transitions.push_back(TransitionEntry{step_, kind, r.id, p.id, b, a});
    }
  }

  void exec(const CloneStep& s) {
    const StateVector source = reg(s.source).state;
    Register& target = reg(s.target);
    const StateVector before = target.state;
    const auto feasibility = check_cloner_feasibility(source, before, config_.tol);
    const ProductState out = ideal_clone(ProductState::of(source, before));
    target.state = out.factors()->second;
    target.events.push_back(Event{feasibility.feasible, target.state});
    target.clone_source = s.source;
    report_.steps.back().physical = feasibility.feasible;
    transition("clone", target, before);
  }

  void exec(const UncloneStep& s) {
    Register& target = reg(s.target);
    if (!target.clone_source) {
      throw Error(ErrorCode::NotCloneShape, "'" + s.target + "' was never a clone target");
    }
    const StateVector source = reg(*target.clone_source).state;
    const StateVector blank = reg(s.blank).state;
    const StateVector before = target.state;
    const ProductState out =
        ideal_unclone(ProductState::of(source, before), blank, config_.tol);
    const auto feasibility = check_cloner_feasibility(source, blank, config_.tol);
    target.state = out.factors()->second;
    target.events.push_back(Event{feasibility.feasible, target.state});
    target.clone_source.reset();
    report_.steps.back().physical = feasibility.feasible;
    transition("unclone", target, before);
  }

  void exec(const BlackholeStep& s) {
    Register& target = reg(s.target);
    const StateVector before = target.state;
    const std::uint64_t seed = derive_seed(config_.seed, kBlackholeStream, blackhole_draws_++);
    target.state = blackhole_evaporate(before, seed);
    target.events.push_back(Event{false, target.state});
    report_.steps.back().physical = false;
    report_.steps.back().seed = seed;
    transition("blackhole", target, before);
  }

  void exec(const EvolveStep& s) {
    Register& target = reg(s.target);
    const StateVector before = target.state;
    CMatrix m = literal_matrix(s.matrix);
    const bool unitary = is_unitary(m, config_.tol);
    const Operator op = unitary ? Operator::unitary(std::move(m), config_.tol)
                                : Operator::general(std::move(m));
    target.state = apply_operator(op, before, config_.tol);
    target.events.push_back(Event{unitary, target.state});
    report_.steps.back().physical = unitary;
    transition("evolve", target, before);
  }

  void exec(const ReconstructStep& s) {
    if (!clock_) return;
    const double p_one = s.p_one ? s.p_one->value.real() : config_.p_one;
    struct KeyState {
      bool was_determinate = false;
      TruthValue latest = TruthValue::Gap;
    };
    std::vector<std::pair<std::string, std::uint64_t>> order;
    std::map<std::pair<std::string, std::uint64_t>, KeyState> keys;
    for (const auto& rec : ledger_.records()) {
      const auto key = std::make_pair(rec.prop_id, rec.at.tick);
      auto [it, inserted] = keys.try_emplace(key);
      if (inserted) order.push_back(key);
      if (is_determinate(rec.truth)) it->second.was_determinate = true;
      it->second.latest = rec.truth;
    }
    for (const auto& key : order) {
      const KeyState& ks = keys.at(key);
      if (key.second >= clock_->tick || !ks.was_determinate || ks.latest != TruthValue::Gap) {
        continue;
      }
      const std::uint64_t seed =
          derive_seed(config_.seed, kReconstructStream, reconstruct_draws_++);
      const ReconstructionOutcome x = sample_past_reconstruction(p_one, seed);
      ledger_ = record_valuation(ledger_, Timestamp{key.second}, key.first,
                                 from_bool(x.value == 1), *clock_);
      report_.reconstructions.push_back(
          ReconstructionEntry{step_, key.first, Timestamp{key.second}, *clock_, x});
    }
  }

  // --- queries --------------------------------------------------------------

  void exec(const EvalQuery& q) {
    const auto& p = props_.at(prop_index_.at(q.prop));
    const TruthValue v = membership(reg(q.state).state, p.subspace, config_.tol);
    report_.valuations.push_back(ValuationEntry{step_, "eval", q.state, q.prop, v, {}});
  }

  void exec(const SuperQuery& q) {
    const Formula& f = formulas_.at(q.formula);
    const auto ids = atoms(f);
    const Index dim = props_.at(prop_index_.at(*ids.begin())).subspace.dim();
    std::string subject;
    if (q.state) {
      subject = *q.state;
    } else {
      for (const auto& r : registers_) {
        if (r.state.dim() == dim) {
          if (!subject.empty()) {
            throw Error(ErrorCode::AmbiguousSubject, "several states could be the subject");
          }
          subject = r.id;
        }
      }
    }
    const StateVector& state = reg(subject).state;
    std::map<std::string, TruthValue> atomics;
    for (const auto& id : ids) {
      atomics.emplace(id, membership(state, props_.at(prop_index_.at(id)).subspace, config_.tol));
    }
    const TruthValue v = evaluate_super(f, atomics, config_.max_gap_atoms);
    report_.supervaluations.push_back(
        SuperEntry{step_, q.formula, subject, std::move(atomics), v});
  }

  void exec(const CheckPastQuery&) {
    for (auto& v : check_past_unalterability(ledger_)) {
      report_.violations.push_back(ViolationEntry{step_, std::move(v)});
    }
  }

  void exec(const FeasibleQuery& q) {
    report_.feasibility.push_back(FeasibilityEntry{
        step_, q.first, q.second,
        check_cloner_feasibility(reg(q.first).state, reg(q.second).state, config_.tol)});
  }

  const Scenario& scenario_;
  Config config_;
  Report report_;
  std::size_t step_ = 0;
  SourcePos pos_;

  std::vector<Register> registers_;
  std::map<std::string, std::size_t> index_;
  std::vector<Proposition> props_;
  std::map<std::string, std::size_t> prop_index_;
  std::map<std::string, Formula> formulas_;

  Ledger ledger_;
  std::optional<Timestamp> clock_;
  std::map<std::string, std::set<std::uint64_t>> recorded_ticks_;
  std::uint64_t reconstruct_draws_ = 0;
  std::uint64_t blackhole_draws_ = 0;
};

}  // namespace detail

/// Runs the scenario in statement order. Settings resolve as defaults, then
/// `set` statements, then `overrides`. The result depends only on the
/// scenario and the effective (seed, tol, p_one).
inline Report run_scenario(const Scenario& scenario, const RunOverrides& overrides = {}) {
  return detail::Runner(scenario, overrides).run();
}

}  // namespace svq::scenario
