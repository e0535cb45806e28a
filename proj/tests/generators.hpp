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

// Random inputs and independent oracles shared by the unit and acceptance
// suites. Nothing here calls the code paths it is used to check.

#pragma once

#include <cmath>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "svq/svq.hpp"

namespace svq::testing {

inline const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

inline StateVector random_state(Index dim, Rng& rng) { return haar_state(dim, rng); }

/// Unit vector orthogonal to `a` (Gram-Schmidt against a random vector).
inline StateVector random_orthogonal_to(const StateVector& a, Rng& rng) {
  CVector v = standard_complex_normal(a.dim(), rng);
  v -= a.amplitudes() * a.amplitudes().dot(v);
  return StateVector::normalized(v, 0.0);
}

inline std::vector<CVector> random_vectors(Index dim, int count, Rng& rng) {
  std::vector<CVector> out;
  for (int i = 0; i < count; ++i) out.push_back(standard_complex_normal(dim, rng));
  return out;
}

/// Random linear combination of `basis` vectors.
inline CVector random_combination(const std::vector<CVector>& basis, Rng& rng) {
  std::normal_distribution<double> normal;
  CVector v = CVector::Zero(basis.front().size());
  for (const auto& b : basis) v += Complex(normal(rng), normal(rng)) * b;
  return v;
}

/// Two subspaces in a dim-dimensional space that share a planted
/// `shared`-dimensional intersection plus random extra directions.
struct SubspacePair {
  Subspace first;
  Subspace second;
  int planted_shared;
};

inline SubspacePair random_subspace_pair(Rng& rng) {
  std::uniform_int_distribution<int> dim_dist(2, 4);
  const int dim = dim_dist(rng);
  std::uniform_int_distribution<int> shared_dist(0, dim - 1);
  const int shared = shared_dist(rng);
  std::uniform_int_distribution<int> extra_dist(0, dim - shared);
  const auto common = random_vectors(dim, shared, rng);
  auto build = [&](int extra) {
    auto vectors = common;
    for (const auto& v : random_vectors(dim, extra, rng)) vectors.push_back(v);
    if (vectors.empty()) return Subspace::zero(dim);
    return span_subspace(vectors, dim);
  };
  Subspace a = build(extra_dist(rng));
  Subspace b = build(extra_dist(rng));
  return {a, b, shared};
}

/// (small, large) with small contained in large.
inline std::pair<Subspace, Subspace> random_nested_pair(Rng& rng) {
  std::uniform_int_distribution<int> dim_dist(2, 4);
  const int dim = dim_dist(rng);
  std::uniform_int_distribution<int> rank_dist(1, dim);
  const int big_rank = rank_dist(rng);
  const auto big_basis = random_vectors(dim, big_rank, rng);
  std::uniform_int_distribution<int> small_dist(0, big_rank);
  const int small_rank = small_dist(rng);
  std::vector<CVector> small_vectors;
  for (int i = 0; i < small_rank; ++i) small_vectors.push_back(random_combination(big_basis, rng));
  Subspace big = span_subspace(big_basis, dim);
  Subspace small = small_vectors.empty() ? Subspace::zero(dim) : span_subspace(small_vectors, dim);
  return {small, big};
}

/// Random subspace and a state that, depending on `mode`, lies inside it
/// (0), is orthogonal to it (1), or is Haar random (2).
inline std::pair<StateVector, Subspace> random_state_and_subspace(Rng& rng, int mode) {
  std::uniform_int_distribution<int> dim_dist(2, 4);
  const int dim = dim_dist(rng);
  std::uniform_int_distribution<int> rank_dist(1, dim - 1);
  const auto basis = random_vectors(dim, rank_dist(rng), rng);
  Subspace s = span_subspace(basis, dim);
  if (mode == 0) return {StateVector::normalized(random_combination(basis, rng)), s};
  if (mode == 1) {
    const CMatrix complement = CMatrix::Identity(dim, dim) - s.projector();
    return {StateVector::normalized(complement * standard_complex_normal(dim, rng)), s};
  }
  return {random_state(dim, rng), s};
}

// --- formulas ---------------------------------------------------------------

inline Formula random_formula(Rng& rng, const std::vector<std::string>& pool, int depth) {
  std::uniform_int_distribution<int> pick_atom(0, static_cast<int>(pool.size()) - 1);
  std::uniform_int_distribution<int> pick_kind(0, 4);
  if (depth <= 0) return Formula::atom(pool[pick_atom(rng)]);
  switch (pick_kind(rng)) {
    case 0: return Formula::atom(pool[pick_atom(rng)]);
    case 1: return !random_formula(rng, pool, depth - 1);
    case 2: return random_formula(rng, pool, depth - 1) & random_formula(rng, pool, depth - 1);
    case 3: return random_formula(rng, pool, depth - 1) | random_formula(rng, pool, depth - 1);
    default:
      return implies(random_formula(rng, pool, depth - 1), random_formula(rng, pool, depth - 1));
  }
}

/// Substitution instances of classical tautology schemas with random
/// sub-formulas; tautologous by construction.
inline Formula random_tautology(Rng& rng, const std::vector<std::string>& pool) {
  const Formula a = random_formula(rng, pool, 2);
  const Formula b = random_formula(rng, pool, 2);
  const Formula c = random_formula(rng, pool, 2);
  std::uniform_int_distribution<int> schema(0, 7);
  switch (schema(rng)) {
    case 0: return a | !a;                                              // excluded middle
    case 1: return !(a & !a);                                           // non-contradiction
    case 2: return implies(a, implies(b, a));                           // K
    case 3:                                                             // S
      return implies(implies(a, implies(b, c)), implies(implies(a, b), implies(a, c)));
    case 4: return implies(implies(!a, !b), implies(b, a));             // contraposition
    case 5: return implies(!!a, a);                                     // double negation
    case 6: return implies(!(a | b), (!a) & (!b));                      // De Morgan
    default: return implies(a & b, b & a);                              // commutation
  }
}

/// Brute-force truth-table oracle: the set of classical values `f` takes over
/// all completions of the gap atoms. Independent of evaluate_super.
inline std::set<bool> truth_table_values(const Formula& f,
                                         const std::map<std::string, TruthValue>& atomics) {
  std::vector<std::string> gaps;
  for (const auto& [id, v] : atomics) {
    if (v == TruthValue::Gap) gaps.push_back(id);
  }
  std::set<bool> values;
  for (unsigned mask = 0; mask < (1U << gaps.size()); ++mask) {
    std::map<std::string, bool> world;
    for (const auto& [id, v] : atomics) world[id] = v == TruthValue::True;
    for (std::size_t i = 0; i < gaps.size(); ++i) world[gaps[i]] = ((mask >> i) & 1U) != 0;
    struct Eval {
      const std::map<std::string, bool>& w;
      bool operator()(const Formula& g) const {
        switch (g.kind()) {
          case Formula::Kind::Atom: return w.at(g.id());
          case Formula::Kind::Not: return !(*this)(g.lhs());
          case Formula::Kind::And: return (*this)(g.lhs()) && (*this)(g.rhs());
          case Formula::Kind::Or: return (*this)(g.lhs()) || (*this)(g.rhs());
          case Formula::Kind::Implies: return !(*this)(g.lhs()) || (*this)(g.rhs());
        }
        return false;
      }
    };
    values.insert(Eval{world}(f));
  }
  return values;
}

inline std::map<std::string, TruthValue> random_pattern(Rng& rng,
                                                        const std::vector<std::string>& pool) {
  std::uniform_int_distribution<int> pick(0, 2);
  std::map<std::string, TruthValue> out;
  for (const auto& id : pool) out[id] = static_cast<TruthValue>(pick(rng));
  return out;
}

}  // namespace svq::testing
