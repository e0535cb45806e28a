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
#include <random>

#include "svq/hilbert.hpp"

namespace svq {

using Rng = std::mt19937_64;

/// Deterministic child seed for draw `index` of stream `stream`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream,
                                 std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

template <class Generator>
CVector standard_complex_normal(Index dim, Generator& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CVector v(dim);
  for (Index i = 0; i < dim; ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(i) = Complex(re, im);
  }
  return v;
}

/// Haar-random pure state: i.i.d. complex normal components, normalized.
template <class Generator>
StateVector haar_state(Index dim, Generator& rng) {
  return StateVector::normalized(standard_complex_normal(dim, rng), 0.0);
}

inline StateVector haar_state(Index dim, std::uint64_t seed) {
  Rng rng(seed);
  return haar_state(dim, rng);
}

/// Haar-random unitary via QR of a complex Ginibre matrix. The columns of Q
/// are rephased by the phases of diag(R) so the decomposition is unique and
/// the distribution is exactly Haar.
template <class Generator>
Operator haar_unitary(Index dim, Generator& rng) {
  CMatrix ginibre(dim, dim);
  for (Index j = 0; j < dim; ++j) {
    ginibre.col(j) = standard_complex_normal(dim, rng);
  }
  Eigen::HouseholderQR<CMatrix> qr(ginibre);
  CMatrix q = qr.householderQ();
  const CMatrix& r = qr.matrixQR();
  for (Index j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(j) *= d / mag;
  }
  return Operator::unitary(std::move(q));
}

}  // namespace svq
