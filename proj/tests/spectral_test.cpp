// Copyright 2026 The qwalk Authors
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

#include "qwalk/spectral.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "qwalk/presets.hpp"
#include "test_support.hpp"

namespace qwalk {
namespace {

constexpr double kPi = std::numbers::pi;
const Complex I{0.0, 1.0};

std::vector<Complex> flatten(const std::vector<SpectralBlock>& blocks) {
  std::vector<Complex> out;
  for (const auto& b : blocks) {
    out.push_back(b.eigenvalues.first);
    out.push_back(b.eigenvalues.second);
  }
  return out;
}

// ---------- fourier_matrix ----------

TEST(FourierMatrix, SmallCases) {
  EXPECT_LT(std::abs(fourier_matrix(1)(0, 0) - 1.0), 1e-15);
  const auto f2 = fourier_matrix(2);
  const double h = 1.0 / std::sqrt(2.0);
  EXPECT_LT(std::abs(f2(0, 0) - h), 1e-15);
  EXPECT_LT(std::abs(f2(0, 1) - h), 1e-15);
  EXPECT_LT(std::abs(f2(1, 1) + h), 1e-15);
  EXPECT_LT(std::abs(fourier_matrix(4)(1, 1) - 0.5 * I), 1e-15);
}

TEST(FourierMatrix, UnitaryAndSymmetric) {
  for (int m = 1; m <= 64; ++m) {
    const Matrix f = fourier_matrix(m).matrix();
    EXPECT_LT(unitarity_error(f), 1e-12) << m;
    EXPECT_LT(max_abs(f - f.transpose()), 1e-15) << m;
  }
  EXPECT_THROW(fourier_matrix(0), InvalidSize);
}

// ---------- block_diagonalize ----------

TEST(BlockDiagonalize, HadamardThreeCycleMatchesDenseSpectrum) {
  const auto u = build_walk_unitary(3, presets::hadamard());
  const auto blocks = block_diagonalize(u, 3);
  ASSERT_EQ(blocks.size(), 3u);
  EXPECT_LT(testing::multiset_distance(flatten(blocks),
                                       testing::dense_eigenvalues(u.matrix())), 1e-9);
}

TEST(BlockDiagonalize, DiagonalCoinGivesDiagonalBlocks) {
  const auto blocks = block_diagonalize(build_walk_unitary(2, {1.0, 0.0, 0.0}), 2);
  for (const auto& b : blocks) {
    EXPECT_LT(std::abs(b.block(0, 1)), 1e-12);
    EXPECT_LT(std::abs(b.block(1, 0)), 1e-12);
  }
}

TEST(BlockDiagonalize, RandomCoinHasNoLeakage) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const auto u = build_walk_unitary(5, testing::random_coin(rng));
    EXPECT_LT(off_block_leakage(fourier_conjugate(u, 5)), 1e-12);
    EXPECT_LT(testing::multiset_distance(flatten(block_diagonalize(u, 5)),
                                         testing::dense_eigenvalues(u.matrix())), 1e-9);
  }
}

TEST(BlockDiagonalize, SequenceProductsStayBlockCirculant) {
  const auto op = compose_sequence(presets::preset_sequence(4, "AABB"), 4);
  EXPECT_LT(testing::multiset_distance(flatten(block_diagonalize(op, 4)),
                                       testing::dense_eigenvalues(op.matrix())), 1e-9);
}

TEST(BlockDiagonalize, RejectsNonCirculant) {
  Matrix perm = Matrix::Identity(6, 6);
  perm.row(1).swap(perm.row(4));
  EXPECT_THROW(block_diagonalize(UnitaryMatrix(perm), 3), NotBlockCirculant);
}

// ---------- analytic_block_eigenvalues ----------

TEST(AnalyticEigenvalues, HadamardFourCycleBlockZero) {
  const auto [a, b] = analytic_block_eigenvalues(4, 0, presets::hadamard());
  EXPECT_LT(testing::multiset_distance({a, b}, {1.0, -1.0}), 1e-12);
  const auto blocks = block_diagonalize(build_walk_unitary(4, presets::hadamard()), 4);
  EXPECT_LT(testing::multiset_distance({a, b},
                                       testing::dense_eigenvalues(blocks[0].block)), 1e-12);
}

TEST(AnalyticEigenvalues, SumAndModulus) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 3 + trial % 4;
    const int l = trial % k;
    const CoinParams p = testing::random_coin(rng);
    const auto [plus, minus] = analytic_block_eigenvalues(k, l, p);
    const Complex expected_sum = std::exp(-2.0 * kPi * I * double(l) / double(k)) *
                                 (1.0 - std::exp(4.0 * kPi * I * double(l) / double(k) +
                                                 I * p.delta())) *
                                 std::sqrt(p.rho);
    EXPECT_LT(std::abs(plus + minus - expected_sum), 1e-12);
    EXPECT_NEAR(std::abs(plus), 1.0, 1e-10);
    EXPECT_NEAR(std::abs(minus), 1.0, 1e-10);
  }
}

TEST(AnalyticEigenvalues, MatchDenseSolverOnExtractedBlocks) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 3 + trial % 3;
    const CoinParams p = testing::random_coin(rng);
    const auto u = build_walk_unitary(k, p);
    const auto blocks = block_diagonalize(u, k);
    std::vector<Complex> all;
    for (int l = 0; l < k; ++l) {
      const auto [a, b] = analytic_block_eigenvalues(k, l, p);
      EXPECT_LT(testing::multiset_distance(
                    {a, b}, testing::dense_eigenvalues(blocks[l].block)), 1e-9)
          << "k=" << k << " l=" << l;
      all.push_back(a);
      all.push_back(b);
    }
    EXPECT_LT(testing::multiset_distance(all, testing::dense_eigenvalues(u.matrix())), 1e-9);
  }
}

TEST(AnalyticEigenvalues, RejectsBadBlockIndex) {
  EXPECT_THROW(analytic_block_eigenvalues(3, 3, presets::hadamard()), IndexOutOfRange);
}

// ---------- phase_to_rational ----------

TEST(PhaseToRational, ThreeEighths) {
  const auto r = phase_to_rational(std::exp(2.0 * kPi * I * 3.0 / 8.0));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->m, 3);
  EXPECT_EQ(r->n, 8);
  EXPECT_LT(r->residual, 1e-9);
}

TEST(PhaseToRational, One) {
  const auto r = phase_to_rational(Complex(1.0, 0.0));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->m, 0);
  EXPECT_EQ(r->n, 1);
}

TEST(PhaseToRational, NegativePhaseWrapsAround) {
  const auto r = phase_to_rational(std::exp(-2.0 * kPi * I / 8.0));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->m, 7);
  EXPECT_EQ(r->n, 8);
  // Just below a full turn reduces to 0/1.
  const auto z = phase_to_rational(std::exp(-I * 1e-12));
  ASSERT_TRUE(z);
  EXPECT_EQ(z->m, 0);
  EXPECT_EQ(z->n, 1);
}

TEST(PhaseToRational, OneRadianHasNoSmallFraction) {
  // Oracle: exhaustive search over every denominator up to the cap.
  const double x = 1.0 / (2.0 * kPi);
  double best = INFINITY;
  for (int q = 1; q <= 10000; ++q) {
    const double p = std::round(x * q);
    best = std::min(best, std::abs(x - p / q));
  }
  ASSERT_GT(best, 1e-9);
  EXPECT_FALSE(phase_to_rational(std::exp(I * 1.0), 10000, 1e-9));
}

TEST(PhaseToRational, RecoversEveryFractionUpToCap) {
  for (int n = 1; n <= 60; ++n) {
    for (int m = 0; m < n; ++m) {
      if (std::gcd(m, n) != 1) continue;
      const auto r = phase_to_rational(std::exp(2.0 * kPi * I * double(m) / double(n)));
      ASSERT_TRUE(r) << m << "/" << n;
      EXPECT_EQ(r->m, m);
      EXPECT_EQ(r->n, n);
    }
  }
}

TEST(PhaseToRational, RejectsOffCircle) {
  EXPECT_THROW(phase_to_rational(Complex(0.5, 0.0)), NotUnitModulus);
}

// ---------- min_period ----------

TEST(MinPeriod, HadamardFourCycle) {
  const auto rep = min_period(build_walk_unitary(4, presets::hadamard()));
  EXPECT_EQ(rep.verdict, Verdict::kPeriodic);
  EXPECT_EQ(rep.period, 8);
  EXPECT_EQ(rep.method, Method::kBoth);
  EXPECT_TRUE(rep.concordant);
}

TEST(MinPeriod, HadamardFiveCycleIsChaotic) {
  const auto rep = min_period(build_walk_unitary(5, presets::hadamard()), 1000);
  EXPECT_EQ(rep.verdict, Verdict::kChaotic);
  EXPECT_FALSE(rep.period);
  EXPECT_TRUE(rep.concordant);
}

TEST(MinPeriod, Identity) {
  const auto rep = min_period(UnitaryMatrix::identity(6));
  EXPECT_EQ(rep.period, 1);
  EXPECT_EQ(rep.method, Method::kBoth);
}

TEST(MinPeriod, ReferenceCoins) {
  EXPECT_EQ(min_period(build_walk_unitary(3, presets::reference_coin(3))).period, 10);
  EXPECT_EQ(min_period(build_walk_unitary(4, presets::reference_coin(4))).period, 10);
}

TEST(MinPeriod, PeriodicMeansEveryPhaseIsRational) {
  for (const auto& u : {build_walk_unitary(4, presets::hadamard()),
                        build_walk_unitary(3, presets::reference_coin(3)),
                        compose_sequence(presets::preset_sequence(3, "AABB"), 3)}) {
    const auto rep = min_period(u);
    ASSERT_EQ(rep.verdict, Verdict::kPeriodic);
    std::int64_t l = 1;
    auto ev = spectrum(u);
    for (const Complex& z : ev) {
      const auto r = phase_to_rational(z);
      ASSERT_TRUE(r);
      l = std::lcm(l, r->n);
    }
    EXPECT_EQ(*rep.period, l);
    // Reordering the eigenvalues cannot change the lcm.
    std::reverse(ev.begin(), ev.end());
    std::int64_t l2 = 1;
    for (const Complex& z : ev) l2 = std::lcm(l2, phase_to_rational(z)->n);
    EXPECT_EQ(l, l2);
  }
}

TEST(MinPeriod, PowersHaveDividingPeriods) {
  for (const auto& u : {build_walk_unitary(4, presets::hadamard()),
                        build_walk_unitary(3, presets::reference_coin(3))}) {
    const int n = *min_period(u).period;
    for (unsigned j = 1; j <= 6; ++j) {
      const auto rep = min_period(u.pow(j));
      ASSERT_TRUE(rep.period) << j;
      EXPECT_EQ(n % *rep.period, 0) << "j=" << j;
      EXPECT_EQ(*rep.period, n / std::gcd(n, static_cast<int>(j)));
    }
  }
}

TEST(MinPeriod, RespectsCap) {
  const auto rep = min_period(build_walk_unitary(4, presets::hadamard()), 7);
  EXPECT_EQ(rep.verdict, Verdict::kChaotic);
  EXPECT_TRUE(rep.concordant);
}

// ---------- sequence_min_period ----------

TEST(SequenceMinPeriod, AabbOnThreeCycle) {
  EXPECT_EQ(sequence_min_period(presets::preset_sequence(3, "AABB"), 3).period, 20);
  EXPECT_EQ(sequence_min_period(presets::preset_sequence(3, "C"), 3).period, 10);
  const auto abab = sequence_min_period(presets::preset_sequence(3, "ABAB"), 3, 1000);
  EXPECT_EQ(abab.verdict, Verdict::kChaotic);
  EXPECT_TRUE(abab.concordant);
}

TEST(SequenceMinPeriod, SingleLetterMatchesMinPeriod) {
  std::mt19937_64 rng(37);
  std::vector<CoinParams> coins = {presets::hadamard(), presets::reference_coin(3),
                                   presets::reference_coin(4)};
  for (int i = 0; i < 5; ++i) coins.push_back(testing::random_coin(rng));
  for (int k : {3, 4, 5}) {
    for (const auto& c : coins) {
      const auto a = sequence_min_period(CoinSequence::single(c), k, 200);
      const auto b = min_period(build_walk_unitary(k, c), 200);
      EXPECT_EQ(a.period, b.period);
      EXPECT_EQ(a.verdict, b.verdict);
    }
  }
}

TEST(SequenceMinPeriod, FindsIdentityInsideAPattern) {
  // With A = B = Hadamard on the 4-cycle the period is 8 steps, two passes
  // of "AABB".
  const CoinSequence seq({{'A', presets::hadamard()}, {'B', presets::hadamard()}}, "AABB");
  const auto rep = sequence_min_period(seq, 4);
  EXPECT_EQ(rep.period, 8);
  EXPECT_EQ(rep.spectral_period, 8);
  // A 3-letter pattern of a period-8 walk first hits I at step 8, which is not
  // a pattern multiple; the whole-pattern check lands on 24.
  const CoinSequence odd({{'H', presets::hadamard()}}, "HHH");
  const auto rep3 = sequence_min_period(odd, 4);
  EXPECT_EQ(rep3.period, 8);
  EXPECT_EQ(rep3.spectral_period, 24);
  EXPECT_TRUE(rep3.concordant);
  EXPECT_EQ(rep3.method, Method::kBruteForce);
}

}  // namespace
}  // namespace qwalk
