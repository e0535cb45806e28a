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

#include <gtest/gtest.h>

#include <chrono>

#include "expect_error.hpp"
#include "generators.hpp"

namespace svq {
namespace {

using testing::expect_error;
using testing::kInvSqrt2;
using T = TruthValue;

Subspace z_plus() { return span_subspace({CVector(make_state({1, 0}).amplitudes())}, 2); }

TEST(Feasibility, OrthogonalBasisPairIsFeasible) {
  const auto r = check_cloner_feasibility(make_state({1, 0}), make_state({0, 1}));
  EXPECT_TRUE(r.feasible);
  EXPECT_EQ(r.witness_overlap, 0.0);
}

TEST(Feasibility, DiagonalPairIsInfeasible) {
  const auto r = check_cloner_feasibility(make_state({1, 0}), make_state({1, 1}));
  EXPECT_FALSE(r.feasible);
  EXPECT_NEAR(r.witness_overlap, kInvSqrt2, 1e-12);
  EXPECT_NEAR(r.witness_overlap_squared, 0.5, 1e-12);
  EXPECT_NE(r.detail.find("no unitary"), std::string::npos);
}

TEST(Feasibility, SameRayIsFeasible) {
  const auto a = make_state({1, 2});
  const auto b = make_state(CVector(a.amplitudes() * Complex(0, 1)));
  EXPECT_TRUE(check_cloner_feasibility(a, b).feasible);
}

TEST(Feasibility, RandomPairs) {
  Rng rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const Index dim = 2 + trial % 3;
    const auto a = haar_state(dim, rng);
    const auto b = haar_state(dim, rng);
    const auto r = check_cloner_feasibility(a, b);
    const double o = std::abs(a.amplitudes().dot(b.amplitudes()));
    EXPECT_FALSE(r.feasible);
    EXPECT_GT(std::abs(o - o * o), 1e-6);
    EXPECT_TRUE(check_cloner_feasibility(a, testing::random_orthogonal_to(a, rng)).feasible);
  }
}

TEST(BasisCopy, MatchesHandWrittenCnot) {
  CMatrix cnot = CMatrix::Zero(4, 4);
  cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1;
  EXPECT_EQ(basis_copy_unitary(2).matrix(), cnot);
}

TEST(BasisCopy, CopiesBasisStates) {
  for (Index dim = 2; dim <= 4; ++dim) {
    const auto u = basis_copy_unitary(dim);
    CVector blank = CVector::Zero(dim);
    blank(0) = 1;
    for (Index i = 0; i < dim; ++i) {
      CVector e = CVector::Zero(dim);
      e(i) = 1;
      const auto out = apply_operator(u, tensor(make_state(e), make_state(blank)));
      const auto want = tensor(make_state(e), make_state(e));
      EXPECT_LT((out.amplitudes() - want.amplitudes()).norm(), 1e-9);
    }
  }
}

TEST(BasisCopy, FailsOnSuperposition) {
  // CNOT on [1,1]/sqrt2 (x) [1,0] gives the Bell state, not the clone.
  const auto out = apply_operator(basis_copy_unitary(2),
                                  tensor(make_state({1, 1}), make_state({1, 0})));
  EXPECT_FALSE(ProductState::from_joint(out, 2, 2).is_product());
}

TEST(Clone, IdealCloneAndUnclone) {
  const auto ups = make_state({1, 1});
  const auto phi = make_state({1, 0});
  const auto cloned = ideal_clone(ProductState::of(ups, phi));
  EXPECT_EQ(cloned.factors()->first, ups);
  EXPECT_EQ(cloned.factors()->second, ups);
  EXPECT_EQ(cloned.joint(), tensor(ups, ups));
  const auto back = ideal_unclone(cloned, phi);
  EXPECT_EQ(back.factors()->first, ups);
  EXPECT_EQ(back.factors()->second, phi);
}

TEST(Clone, UncloneRejectsNonClonePair) {
  const auto p = ProductState::of(make_state({1, 0}), make_state({0, 1}));
  expect_error(ErrorCode::NotCloneShape, [&] { ideal_unclone(p, make_state({1, 0})); });
}

TEST(Clone, RejectsEntangledInput) {
  const auto bell = make_state({1, 0, 0, 1});
  const auto p = ProductState::from_joint(bell, 2, 2);
  EXPECT_FALSE(p.is_product());
  expect_error(ErrorCode::NotProductState, [&] { ideal_clone(p); });
}

TEST(Clone, TruthLossOnBlank) {
  const auto ups = make_state({1, 1});
  // Blank [1,0] carries Z+ = 1; after cloning it carries ups and Z+ = 0/0.
  const auto up_blank = ideal_clone(ProductState::of(ups, make_state({1, 0})));
  EXPECT_EQ(truth_transition(make_state({1, 0}), up_blank.factors()->second, z_plus()),
            std::make_pair(T::True, T::Gap));
  // Blank [0,1] carries Z+ = 0; it also ends in 0/0.
  const auto down_blank = ideal_clone(ProductState::of(ups, make_state({0, 1})));
  EXPECT_EQ(truth_transition(make_state({0, 1}), down_blank.factors()->second, z_plus()),
            std::make_pair(T::False, T::Gap));
}

TEST(Clone, OrthogonalBlankKeepsDeterminateValue) {
  // Unknown state inside Z+ or Z- leaves the blank's Z+ value determinate.
  for (const auto& unknown : {make_state({1, 0}), make_state({0, 1})}) {
    for (const auto& blank : {make_state({1, 0}), make_state({0, 1})}) {
      const auto out = ideal_clone(ProductState::of(unknown, blank));
      const auto [before, after] = truth_transition(blank, out.factors()->second, z_plus());
      EXPECT_TRUE(is_determinate(before));
      EXPECT_TRUE(is_determinate(after));
    }
  }
}

TEST(Reconstruction, Extremes) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    EXPECT_EQ(sample_past_reconstruction(1.0, seed).value, 1);
    EXPECT_EQ(sample_past_reconstruction(0.0, seed).value, 0);
  }
}

TEST(Reconstruction, BadProbability) {
  expect_error(ErrorCode::BadProbability, [] { sample_past_reconstruction(1.5, 0); });
  expect_error(ErrorCode::BadProbability, [] { sample_past_reconstruction(std::nan(""), 0); });
}

TEST(Reconstruction, DeterministicAndFair) {
  const auto start = std::chrono::steady_clock::now();
  int ones = 0;
  for (std::uint64_t i = 0; i < 10000; ++i) {
    const auto o = sample_past_reconstruction(0.5, derive_seed(7, 1, i));
    EXPECT_EQ(o.value, sample_past_reconstruction(0.5, derive_seed(7, 1, i)).value);
    ones += o.value;
  }
  const double mean = ones / 10000.0;
  EXPECT_GE(mean, 0.45);
  EXPECT_LE(mean, 0.55);
  EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 1.0);
}

TEST(Blackhole, DeterministicUnitNormAndGapped) {
  const auto input = make_state({1, 0});
  int gaps = 0;
  double weight = 0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const auto out = blackhole_evaporate(input, derive_seed(3, 2, i));
    EXPECT_EQ(out, blackhole_evaporate(input, derive_seed(3, 2, i)));
    EXPECT_NEAR(out.amplitudes().norm(), 1.0, 1e-9);
    gaps += membership(out, z_plus()) == T::Gap ? 1 : 0;
    weight += std::norm(out[0]);
  }
  EXPECT_GE(gaps, 999);
  EXPECT_NEAR(weight / 1000.0, 0.5, 0.02);
}

TEST(ProductState, FactorizesRandomTensors) {
  Rng rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = haar_state(2 + trial % 3, rng);
    const auto b = haar_state(2 + trial % 2, rng);
    const auto p = ProductState::from_joint(tensor(a, b), a.dim(), b.dim());
    ASSERT_TRUE(p.is_product());
    EXPECT_TRUE(same_ray(p.factors()->first, a));
    EXPECT_TRUE(same_ray(p.factors()->second, b));
    EXPECT_LT((tensor(p.factors()->first, p.factors()->second).amplitudes() -
               tensor(a, b).amplitudes()).norm(), 1e-9);
  }
}

}  // namespace
}  // namespace svq
