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
 * Cloning and un-cloning as maps on tensor factors, the unitary feasibility
 * test for a cloner, truth-value transitions, random reconstruction of a lost
 * truth value, and the random-pure-state model of black-hole evaporation.
 *
 * The copy map |a>|b> -> |a>|a> is never materialized as a matrix: for
 * non-orthogonal inputs no unitary implements it.
 */

#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>

#include <Eigen/SVD>

#include "svq/hilbert.hpp"
#include "svq/lattice.hpp"
#include "svq/random.hpp"

namespace svq {

/// A joint state on C^d1 (x) C^d2, with its factors when it is a pure tensor.
class ProductState {
 public:
  static ProductState of(StateVector first, StateVector second) {
    const Index d1 = first.dim();
    const Index d2 = second.dim();
    StateVector joint = tensor(first, second);
    return ProductState(std::move(joint), d1, d2,
                        std::make_pair(std::move(first), std::move(second)));
  }

  /// Wraps a joint state. Factors are recovered when the Schmidt rank is 1
  /// (second Schmidt coefficient below tol).
  static ProductState from_joint(StateVector joint, Index d1, Index d2,
                                 double tol = kDefaults.tol) {
    if (d1 < 2 || d2 < 2) {
      throw Error(ErrorCode::DimensionTooSmall, "tensor factors need dim >= 2");
    }
    require_same_dim(joint.dim(), d1 * d2, "joint dimension");
    // Row i of the reshaped matrix holds amplitudes (i, 0..d2-1).
    CMatrix m(d1, d2);
    for (Index i = 0; i < d1; ++i) {
      for (Index j = 0; j < d2; ++j) m(i, j) = joint[i * d2 + j];
    }
    Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sigma = svd.singularValues();
    std::optional<std::pair<StateVector, StateVector>> factors;
    if (sigma.size() < 2 || sigma(1) < tol) {
      CVector first = svd.matrixU().col(0) * sigma(0);
      CVector second = svd.matrixV().col(0).conjugate();
      factors.emplace(StateVector::normalized(std::move(first), 0.0),
                      StateVector::normalized(std::move(second), 0.0));
    }
    return ProductState(std::move(joint), d1, d2, std::move(factors));
  }

  const StateVector& joint() const noexcept { return joint_; }
  std::pair<Index, Index> factor_dims() const noexcept { return {d1_, d2_}; }
  bool is_product() const noexcept { return factors_.has_value(); }
  const std::optional<std::pair<StateVector, StateVector>>& factors() const noexcept {
    return factors_;
  }

 private:
  ProductState(StateVector joint, Index d1, Index d2,
               std::optional<std::pair<StateVector, StateVector>> factors)
      : joint_(std::move(joint)), d1_(d1), d2_(d2), factors_(std::move(factors)) {}

  StateVector joint_;
  Index d1_;
  Index d2_;
  std::optional<std::pair<StateVector, StateVector>> factors_;
};

struct FeasibilityReport {
  bool feasible = false;
  double witness_overlap = 0.0;
  double witness_overlap_squared = 0.0;
  std::string detail;
};

/// Whether one unitary can clone both `a` and `b` onto a common blank.
/// Unitarity preserves inner products, so <a|b> = <a|b>^2 is required,
/// which holds only for orthogonal states or states on the same ray.
inline FeasibilityReport check_cloner_feasibility(const StateVector& a, const StateVector& b,
                                                  double tol = kDefaults.tol) {
  require_same_dim(a.dim(), b.dim(), "cloner feasibility");
  FeasibilityReport report;
  report.witness_overlap = std::abs(inner(a, b));
  report.witness_overlap_squared = report.witness_overlap * report.witness_overlap;
  std::ostringstream detail;
  detail.precision(17);
  if (report.witness_overlap < tol) {
    report.feasible = true;
    detail << "orthogonal states: a basis-copy unitary clones both";
  } else if (1.0 - report.witness_overlap < tol) {
    report.feasible = true;
    detail << "same ray: cloning reduces to preparing a known state";
  } else {
    report.feasible = false;
    detail << "no unitary: |<a|b>| = " << report.witness_overlap
           << " but cloning requires it to equal |<a|b>|^2 = "
           << report.witness_overlap_squared;
  }
  report.detail = detail.str();
  return report;
}

/// The generalized CNOT |i>|j> -> |i>|j + i mod d> on C^d (x) C^d. With the
/// blank |0> in the second slot it copies every computational basis state.
inline Operator basis_copy_unitary(Index dim) {
  const Index n = dim * dim;
  CMatrix m = CMatrix::Zero(n, n);
  for (Index i = 0; i < dim; ++i) {
    for (Index j = 0; j < dim; ++j) {
      m(i * dim + (j + i) % dim, i * dim + j) = 1.0;
    }
  }
  return Operator::unitary(std::move(m));
}

/// (|a>, |b>) -> (|a>, |a>). Hypothetical and non-unitary in general.
inline ProductState ideal_clone(const ProductState& input) {
  if (!input.is_product()) {
    throw Error(ErrorCode::NotProductState, "cloning needs a product input");
  }
  const auto& [source, blank] = *input.factors();
  require_same_dim(source.dim(), blank.dim(), "clone source/blank");
  return ProductState::of(source, source);
}

/// (|v>, |v>) -> (|v>, |blank>), the reverse of ideal_clone.
inline ProductState ideal_unclone(const ProductState& cloned, const StateVector& blank,
                                  double tol = kDefaults.tol) {
  if (!cloned.is_product()) {
    throw Error(ErrorCode::NotProductState, "un-cloning needs a product input");
  }
  const auto& [first, second] = *cloned.factors();
  require_same_dim(second.dim(), blank.dim(), "blank dimension");
  if (!same_ray(first, second, tol)) {
    throw Error(ErrorCode::NotCloneShape, "factors differ; input is not a clone pair");
  }
  return ProductState::of(first, blank);
}

inline std::pair<TruthValue, TruthValue> truth_transition(const StateVector& before,
                                                          const StateVector& after,
                                                          const Subspace& prop,
                                                          double tol = kDefaults.tol) {
  return {membership(before, prop, tol), membership(after, prop, tol)};
}

struct ReconstructionOutcome {
  int value = 0;
  double p_one = 0.5;
  double p_zero = 0.5;
  std::uint64_t seed = 0;
};

/// A Bernoulli(p_one) draw standing in for a truth value that can no longer
/// be recovered. Deterministic in `seed`.
inline ReconstructionOutcome sample_past_reconstruction(double p_one, std::uint64_t seed) {
  if (!(p_one >= 0.0 && p_one <= 1.0)) {
    throw Error(ErrorCode::BadProbability, "p_one must lie in [0, 1]");
  }
  Rng rng(seed);
  std::bernoulli_distribution draw(p_one);
  ReconstructionOutcome out;
  out.value = draw(rng) ? 1 : 0;
  out.p_one = p_one;
  out.p_zero = 1.0 - p_one;
  out.seed = seed;
  return out;
}

/// The evaporated state: a Haar-random pure state of the same dimension,
/// independent of the input beyond its dimension.
inline StateVector blackhole_evaporate(const StateVector& input, std::uint64_t seed) {
  return haar_state(input.dim(), seed);
}

}  // namespace svq
