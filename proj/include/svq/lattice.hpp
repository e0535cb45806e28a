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
 * Propositions as closed subspaces, each stored as its orthogonal projector,
 * together with the lattice operations and the three-valued membership
 * predicate.
 */

#pragma once

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "svq/hilbert.hpp"
#include "svq/truth.hpp"

namespace svq {

class Subspace {
 public:
  /// Validates that `projector` is Hermitian, idempotent and has an
  /// integral trace, all within `tol`.
  static Subspace from_projector(CMatrix projector, double tol = kDefaults.tol) {
    if (projector.rows() != projector.cols() || projector.rows() == 0) {
      throw Error(ErrorCode::NotSquare, "projector must be square");
    }
    if (!detail::all_finite(projector)) {
      throw Error(ErrorCode::NonFinite, "projector has non-finite entries");
    }
    if (detail::max_abs(projector - projector.adjoint()) >= tol) {
      throw Error(ErrorCode::InvalidProjector, "projector is not Hermitian");
    }
    if (detail::max_abs(projector * projector - projector) >= tol) {
      throw Error(ErrorCode::InvalidProjector, "projector is not idempotent");
    }
    const double trace = projector.trace().real();
    const double rank = std::round(trace);
    if (std::abs(trace - rank) >= tol) {
      throw Error(ErrorCode::InvalidProjector, "projector trace is not an integer");
    }
    return Subspace(std::move(projector), static_cast<Index>(rank));
  }

  /// Projector Q Q^dagger for a dim x k matrix Q with orthonormal columns
  /// (k may be 0, giving the zero subspace).
  static Subspace from_orthonormal_basis(const CMatrix& basis, Index dim) {
    if (basis.cols() == 0) return zero(dim);
    require_same_dim(basis.rows(), dim, "basis rows");
    return Subspace(basis * basis.adjoint(), basis.cols());
  }

  static Subspace zero(Index dim) { return Subspace(CMatrix::Zero(dim, dim), 0); }
  static Subspace full(Index dim) { return Subspace(CMatrix::Identity(dim, dim), dim); }

  const CMatrix& projector() const noexcept { return projector_; }
  Index rank() const noexcept { return rank_; }
  Index dim() const noexcept { return projector_.rows(); }
  bool is_zero() const noexcept { return rank_ == 0; }

  friend Subspace orthocomplement(const Subspace& s);

 private:
  Subspace(CMatrix projector, Index rank) : projector_(std::move(projector)), rank_(rank) {}

  CMatrix projector_;
  Index rank_;
};

struct Proposition {
  std::string id;
  std::string label;
  Subspace subspace;
};

namespace detail {

/// Orthonormal basis for the column space of `columns`, dropping singular
/// directions below tol * sigma_max.
inline CMatrix range_basis(const CMatrix& columns, double tol) {
  Eigen::JacobiSVD<CMatrix> svd(columns, Eigen::ComputeThinU);
  const auto& sigma = svd.singularValues();
  if (sigma.size() == 0 || sigma(0) <= 0.0) return CMatrix(columns.rows(), 0);
  const double cutoff = tol * sigma(0);
  Index rank = 0;
  while (rank < sigma.size() && sigma(rank) > cutoff) ++rank;
  return svd.matrixU().leftCols(rank);
}

}  // namespace detail

/// Projector onto the span of `vectors` (each of length `dim`). The result
/// depends only on the span, not on the spanning set chosen.
inline Subspace span_subspace(std::span<const CVector> vectors, Index dim,
                              double tol = kDefaults.tol) {
  CMatrix columns(dim, static_cast<Index>(vectors.size()));
  bool any_nonzero = false;
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    require_same_dim(vectors[j].size(), dim, "spanning vector length");
    if (!detail::all_finite(vectors[j])) {
      throw Error(ErrorCode::NonFinite, "spanning vector has non-finite entries");
    }
    columns.col(static_cast<Index>(j)) = vectors[j];
    if (vectors[j].size() > 0 && vectors[j].cwiseAbs().maxCoeff() >= tol) {
      any_nonzero = true;
    }
  }
  if (!any_nonzero) {
    throw Error(ErrorCode::EmptySpan, "all spanning vectors are zero");
  }
  return Subspace::from_orthonormal_basis(detail::range_basis(columns, tol), dim);
}

inline Subspace span_subspace(std::initializer_list<CVector> vectors, Index dim,
                              double tol = kDefaults.tol) {
  return span_subspace(std::span<const CVector>(vectors.begin(), vectors.size()), dim,
                       tol);
}

/// Three-valued membership of a state in a subspace. With r = |P psi - psi|
/// and s = |P psi|: True when r < tol, False when s < tol, Gap otherwise.
inline TruthValue membership(const StateVector& state, const Subspace& prop,
                             double tol = kDefaults.tol) {
  require_same_dim(state.dim(), prop.dim(), "state/proposition dimension");
  const CVector projected = prop.projector() * state.amplitudes();
  const double r = (projected - state.amplitudes()).norm();
  const double s = projected.norm();
  if (r < tol) return TruthValue::True;
  if (s < tol) return TruthValue::False;
  return TruthValue::Gap;
}

inline Subspace orthocomplement(const Subspace& s) {
  return Subspace(CMatrix::Identity(s.dim(), s.dim()) - s.projector(), s.dim() - s.rank());
}

/// Intersection, computed as the kernel of (I - P1) + (I - P2). That sum is
/// positive semidefinite and v^dagger K v = |(I-P1)v|^2 + |(I-P2)v|^2, so
/// its null space is exactly the common range.
inline Subspace meet(const Subspace& a, const Subspace& b, double tol = kDefaults.tol) {
  require_same_dim(a.dim(), b.dim(), "meet");
  const Index dim = a.dim();
  const CMatrix identity = CMatrix::Identity(dim, dim);
  CMatrix k = (identity - a.projector()) + (identity - b.projector());
  k = 0.5 * (k + k.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(k);
  const auto& lambda = solver.eigenvalues();  // ascending
  Index nullity = 0;
  while (nullity < lambda.size() && lambda(nullity) < tol) ++nullity;
  return Subspace::from_orthonormal_basis(solver.eigenvectors().leftCols(nullity), dim);
}

/// Closed span of the union.
inline Subspace join(const Subspace& a, const Subspace& b, double tol = kDefaults.tol) {
  require_same_dim(a.dim(), b.dim(), "join");
  if (a.is_zero() && b.is_zero()) return Subspace::zero(a.dim());
  CMatrix columns(a.dim(), 2 * a.dim());
  columns << a.projector(), b.projector();
  return Subspace::from_orthonormal_basis(detail::range_basis(columns, tol), a.dim());
}

inline bool approx_equal(const Subspace& a, const Subspace& b, double tol = kDefaults.tol) {
  return a.dim() == b.dim() && detail::max_abs(a.projector() - b.projector()) < tol;
}

/// Projector order: a is contained in b iff P_b P_a = P_a.
inline bool is_contained_in(const Subspace& a, const Subspace& b,
                            double tol = kDefaults.tol) {
  require_same_dim(a.dim(), b.dim(), "containment");
  return detail::max_abs(b.projector() * a.projector() - a.projector()) < tol;
}

/// The image U S of a subspace under a unitary, with projector U P U^dagger.
inline Subspace transform(const Subspace& s, const Operator& u, double tol = kDefaults.tol) {
  require_same_dim(s.dim(), u.dim(), "subspace/operator dimension");
  if (!u.flagged_unitary()) {
    throw Error(ErrorCode::NotUnitary, "subspaces transform under unitaries only");
  }
  CMatrix p = u.matrix() * s.projector() * u.matrix().adjoint();
  p = 0.5 * (p + p.adjoint());
  return Subspace::from_projector(std::move(p), tol);
}

}  // namespace svq
