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

// Eigenvalue-matching conditions for deterministic coin combinations.
//
// A periodic reference walk C is compared with a two-coin schedule over the
// same cycle. Matching the Fourier-block eigenvalues of the schedule to those
// of C (with equal coin angles) reduces to polynomial conditions on the coin
// biases rho1 (coin A), rho2 (coin B) and rho (coin C). AB gives only the
// trivial solution rho1 = rho2 = rho; AABB has a closed-form two-branch
// solution.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "qwalk/spectral.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

template <std::size_t N>
struct MatchResidual {
  std::array<double, N> values{};

  double max() const {
    double m = 0.0;
    for (double v : values) m = std::max(m, v);
    return m;
  }
};

enum class Branch { kPlus, kMinus };

struct ParrondoSolution {
  double rho1 = 0.0;
  double rho2 = 0.0;
  double rho = 0.0;
  Branch branch = Branch::kPlus;
  bool degenerate = false;
  // Set when the roots only solve the squared system, which happens for
  // rho < 1/3; such pairs do not reproduce the spectrum of C.
  bool extraneous = false;
};

// Half the trace of Fourier block l of one pattern pass.
inline Complex block_half_trace(const CoinSequence& seq, int k, int l) {
  if (l < 0 || l >= k) throw IndexOutOfRange("block index out of range");
  const auto blocks = block_diagonalize(compose_sequence(seq, k), k);
  return 0.5 * blocks[l].block.trace();
}

namespace detail {

inline void require_unit_interval(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw OutOfRange(std::string(name) + " must lie in [0, 1]");
  }
}

inline void require_unit_interval(double rho1, double rho2, double rho) {
  require_unit_interval(rho1, "rho1");
  require_unit_interval(rho2, "rho2");
  require_unit_interval(rho, "rho");
}

}  // namespace detail

// |rho1 rho2 - rho^2| and |sqrt(1-rho1) sqrt(1-rho2) - (1-rho)|.
inline MatchResidual<2> ab_residual(double rho1, double rho2, double rho) {
  detail::require_unit_interval(rho1, rho2, rho);
  return {{std::abs(rho1 * rho2 - rho * rho),
           std::abs(std::sqrt(1.0 - rho1) * std::sqrt(1.0 - rho2) - (1.0 - rho))}};
}

// Residuals of
//   rho1 + rho2 - 2 rho1 rho2 + 2 sqrt(g) = 4 rho - 4 rho^2
//   rho1 + rho2 -   rho1 rho2 + 2 sqrt(g) = 4 rho - 3 rho^2
//   rho1 rho2 = rho^2
// with g = (1-rho1)(1-rho2) rho1 rho2. The third equation is the difference
// of the first two, so only two are independent.
inline MatchResidual<3> aabb_residuals(double rho1, double rho2, double rho) {
  detail::require_unit_interval(rho1, rho2, rho);
  const double cross = 2.0 * std::sqrt((1.0 - rho1) * (1.0 - rho2) * rho1 * rho2);
  const double sum = rho1 + rho2;
  const double prod = rho1 * rho2;
  return {{std::abs(sum - 2.0 * prod + cross - (4.0 * rho - 4.0 * rho * rho)),
           std::abs(sum - prod + cross - (4.0 * rho - 3.0 * rho * rho)),
           std::abs(prod - rho * rho)}};
}

// Closed-form AABB solution
//   rho1 = 3 rho - 4 rho^2 +- 2 sqrt(2) sqrt(rho^2 (1 - 3 rho + 2 rho^2)),
//   rho2 = 3 rho - 4 rho^2 -+ ...
// Returns {plus, minus}. The plus branch carries the larger root in rho1.
inline std::pair<ParrondoSolution, ParrondoSolution> solve_aabb(double rho) {
  detail::require_unit_interval(rho, "rho");
  // 1 - 3 rho + 2 rho^2 = (1 - rho)(1 - 2 rho); negative on (1/2, 1).
  const double disc = rho * rho * (1.0 - rho) * (1.0 - 2.0 * rho);
  if (disc < 0.0) {
    throw OutOfDomain("no real AABB solution for rho = " + std::to_string(rho) +
                      " (discriminant < 0 for 1/2 < rho < 1)");
  }
  const double centre = 3.0 * rho - 4.0 * rho * rho;
  const double spread = 2.0 * std::numbers::sqrt2 * std::sqrt(disc);
  constexpr double slack = 1e-12;
  auto clamp_root = [&](double r) {
    if (r < -slack || r > 1.0 + slack) {
      throw RootOutOfRange("AABB root " + std::to_string(r) +
                           " leaves [0, 1] for rho = " + std::to_string(rho));
    }
    return std::clamp(r, 0.0, 1.0);
  };
  const double hi = clamp_root(centre + spread);
  const double lo = clamp_root(centre - spread);
  const bool degenerate = disc == 0.0;
  const bool extraneous = aabb_residuals(hi, lo, rho).max() > 1e-9;
  return {ParrondoSolution{hi, lo, rho, Branch::kPlus, degenerate, extraneous},
          ParrondoSolution{lo, hi, rho, Branch::kMinus, degenerate, extraneous}};
}

enum class Strategy { kOrdered, kChaotic };

inline const char* to_string(Strategy s) {
  return s == Strategy::kOrdered ? "ordered" : "chaotic";
}

struct StrategyReport {
  Strategy strategy = Strategy::kChaotic;
  PeriodReport period;
};

inline StrategyReport classify_strategy(const CoinSequence& seq, int k,
                                        int n_max = kDefaultMaxPeriod,
                                        double tol = kIdentityTol) {
  StrategyReport out;
  out.period = sequence_min_period(seq, k, n_max, tol);
  out.strategy = out.period.verdict == Verdict::kPeriodic ? Strategy::kOrdered
                                                          : Strategy::kChaotic;
  return out;
}

struct GridPoint {
  double rho1 = 0.0;
  double rho2 = 0.0;
};

// Scans an n x n grid over [0, 1]^2 and returns the points where every
// residual falls below eps.
template <typename ResidualFn>
std::vector<GridPoint> scan_residual_grid(ResidualFn&& residual, double rho,
                                          int n, double eps) {
  if (n < 2) throw InvalidSize("grid needs at least 2 points per axis");
  std::vector<GridPoint> hits;
  for (int i = 0; i < n; ++i) {
    const double r1 = static_cast<double>(i) / (n - 1);
    for (int j = 0; j < n; ++j) {
      const double r2 = static_cast<double>(j) / (n - 1);
      if (residual(r1, r2, rho).max() < eps) hits.push_back({r1, r2});
    }
  }
  return hits;
}

inline std::vector<GridPoint> scan_ab_grid(double rho, int n, double eps) {
  return scan_residual_grid(ab_residual, rho, n, eps);
}

inline std::vector<GridPoint> scan_aabb_grid(double rho, int n, double eps) {
  return scan_residual_grid(aabb_residuals, rho, n, eps);
}

}  // namespace qwalk
