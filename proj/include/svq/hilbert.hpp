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
 * Finite-dimensional complex Hilbert-space primitives: unit state vectors,
 * square operators, inner and tensor products.
 *
 * Tensor factors are ordered first-factor-major: amplitude (i, j) of
 * a (x) b lives at index i * b.dim() + j.
 */

#pragma once

#include <cmath>
#include <complex>
#include <initializer_list>
#include <span>
#include <string>

#include <Eigen/Dense>

#include "svq/config.hpp"
#include "svq/error.hpp"

namespace svq {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using Index = Eigen::Index;

namespace detail {

inline bool all_finite(const CMatrix& m) {
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) {
        return false;
      }
    }
  }
  return true;
}

inline double max_abs(const CMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace detail

/// A normalized pure state. Physical states are rays, so two StateVectors that
/// differ by a global phase describe the same state; use `same_ray` rather than
/// `==` to compare them.
class StateVector {
 public:
  /// Rescales `components` to unit norm. The global phase is kept as given.
  static StateVector normalized(CVector components, double tol = kDefaults.tol) {
    if (components.size() < 2) {
      throw Error(ErrorCode::DimensionTooSmall,
                  "a state needs at least 2 components, got " +
                      std::to_string(components.size()));
    }
    if (!detail::all_finite(components)) {
      throw Error(ErrorCode::NonFinite, "state has non-finite components");
    }
    if (components.cwiseAbs().maxCoeff() < tol) {
      throw Error(ErrorCode::ZeroVector, "the zero vector is not a state");
    }
    const double norm = components.norm();
    components /= norm;
    return StateVector(std::move(components));
  }

  /// Wraps an already-normalized vector, checking the norm instead of fixing it.
  static StateVector from_unit(CVector components, double tol = kDefaults.tol) {
    if (components.size() < 2) {
      throw Error(ErrorCode::DimensionTooSmall,
                  "a state needs at least 2 components");
    }
    if (!detail::all_finite(components)) {
      throw Error(ErrorCode::NonFinite, "state has non-finite components");
    }
    const double deviation = std::abs(components.norm() - 1.0);
    if (deviation >= tol) {
      throw Error(ErrorCode::NormLost,
                  "vector norm deviates from 1 by " + std::to_string(deviation));
    }
    return StateVector(std::move(components));
  }

  const CVector& amplitudes() const noexcept { return amps_; }
  Index dim() const noexcept { return amps_.size(); }
  Complex operator[](Index i) const { return amps_(i); }

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  explicit StateVector(CVector amps) : amps_(std::move(amps)) {}

  CVector amps_;
};

inline StateVector make_state(std::span<const Complex> components,
                              double tol = kDefaults.tol) {
  CVector v(static_cast<Index>(components.size()));
  for (std::size_t i = 0; i < components.size(); ++i) {
    v(static_cast<Index>(i)) = components[i];
  }
  return StateVector::normalized(std::move(v), tol);
}

inline StateVector make_state(std::initializer_list<Complex> components,
                              double tol = kDefaults.tol) {
  return make_state(std::span<const Complex>(components.begin(), components.size()),
                    tol);
}

inline StateVector make_state(const CVector& components, double tol = kDefaults.tol) {
  return StateVector::normalized(components, tol);
}

inline void require_same_dim(Index a, Index b, const char* what) {
  if (a != b) {
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + ": " +
                                                  std::to_string(a) + " vs " +
                                                  std::to_string(b));
  }
}

/// <a|b>, conjugate-linear in `a`.
inline Complex inner(const StateVector& a, const StateVector& b) {
  require_same_dim(a.dim(), b.dim(), "inner product");
  return a.amplitudes().dot(b.amplitudes());
}

/// True when |<a|b>| = 1 within tol, i.e. a and b are the same physical state.
inline bool same_ray(const StateVector& a, const StateVector& b,
                     double tol = kDefaults.tol) {
  if (a.dim() != b.dim()) return false;
  return 1.0 - std::abs(inner(a, b)) < tol;
}

inline StateVector tensor(const StateVector& a, const StateVector& b) {
  const Index db = b.dim();
  CVector out(a.dim() * db);
  for (Index i = 0; i < a.dim(); ++i) {
    out.segment(i * db, db) = a[i] * b.amplitudes();
  }
  return StateVector::from_unit(std::move(out));
}

inline bool is_unitary(const CMatrix& m, double tol = kDefaults.tol) {
  if (m.rows() != m.cols() || m.rows() == 0) return false;
  const CMatrix gram = m.adjoint() * m;
  return detail::max_abs(gram - CMatrix::Identity(m.rows(), m.cols())) < tol;
}

/// A square complex matrix, optionally carrying a checked unitarity flag.
class Operator {
 public:
  static Operator general(CMatrix entries) {
    validate(entries);
    return Operator(std::move(entries), false);
  }

  static Operator unitary(CMatrix entries, double tol = kDefaults.tol) {
    validate(entries);
    if (!is_unitary(entries, tol)) {
      throw Error(ErrorCode::NotUnitary, "matrix fails U^dagger U = I");
    }
    return Operator(std::move(entries), true);
  }

  static Operator identity(Index dim) {
    return Operator(CMatrix::Identity(dim, dim), true);
  }

  const CMatrix& matrix() const noexcept { return entries_; }
  Index dim() const noexcept { return entries_.rows(); }
  bool flagged_unitary() const noexcept { return unitary_; }

  Operator adjoint() const { return Operator(entries_.adjoint(), unitary_); }

 private:
  Operator(CMatrix entries, bool unitary)
      : entries_(std::move(entries)), unitary_(unitary) {}

  static void validate(const CMatrix& entries) {
    if (entries.rows() != entries.cols() || entries.rows() == 0) {
      throw Error(ErrorCode::NotSquare, "operator must be a non-empty square matrix");
    }
    if (!detail::all_finite(entries)) {
      throw Error(ErrorCode::NonFinite, "operator has non-finite entries");
    }
  }

  CMatrix entries_;
  bool unitary_;
};

inline bool is_unitary(const Operator& op, double tol = kDefaults.tol) {
  return is_unitary(op.matrix(), tol);
}

/// Matrix-vector product. A unitary-flagged operator must preserve the norm
/// (NormLost otherwise); any other operator's output is renormalized, which
/// fails with ZeroVector if the state is annihilated.
inline StateVector apply_operator(const Operator& op, const StateVector& v,
                                  double tol = kDefaults.tol) {
  require_same_dim(op.dim(), v.dim(), "operator/state dimension");
  CVector out = op.matrix() * v.amplitudes();
  if (op.flagged_unitary()) {
    const double deviation = std::abs(out.norm() - 1.0);
    if (deviation > tol) {
      throw Error(ErrorCode::NormLost, "unitary operator changed the norm by " +
                                           std::to_string(deviation));
    }
    return StateVector::from_unit(std::move(out), 1.0);
  }
  return StateVector::normalized(std::move(out), tol);
}

}  // namespace svq
