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

// Coined discrete-time quantum walks on k-cycle graphs.
//
// The Hilbert space is position (x) coin. A basis vector |i>|s> with site
// 0 <= i < k and coin s in {0, 1} sits at flat index 2*i + s. Coin state 0
// moves the walker one site counter-clockwise (i - 1), coin state 1 one
// site clockwise (i + 1).

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qwalk/errors.hpp"

namespace qwalk {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Block = Eigen::Matrix2cd;

inline constexpr double kUnitarityTol = 1e-12;
inline constexpr double kNormTol = 1e-12;
inline constexpr double kIdentityTol = 1e-9;

// Largest |m_ij| over all entries.
inline double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

// max-abs norm of U U^dagger - I.
inline double unitarity_error(const Matrix& m) {
  return max_abs(m * m.adjoint() - Matrix::Identity(m.rows(), m.cols()));
}

inline double identity_error(const Matrix& m) {
  return max_abs(m - Matrix::Identity(m.rows(), m.cols()));
}

// Whether coin angles are held to [0, pi] or left free. The coin is unitary
// for any real angles, so the wide range only exists for exploration.
enum class AngleRange { kStandard, kUnrestricted };

struct CoinParams {
  double rho = 0.5;
  double alpha = 0.0;
  double beta = 0.0;

  // Phase of -det(C); the coin determinant is -exp(i * delta).
  double delta() const { return alpha + beta; }

  friend bool operator==(const CoinParams&, const CoinParams&) = default;
};

inline void validate(const CoinParams& p, AngleRange range = AngleRange::kStandard) {
  if (!std::isfinite(p.rho) || !std::isfinite(p.alpha) ||
      !std::isfinite(p.beta)) {
    throw InvalidParams("coin parameters must be finite");
  }
  if (p.rho < 0.0 || p.rho > 1.0) {
    throw InvalidParams("rho must lie in [0, 1], got " + std::to_string(p.rho));
  }
  if (range == AngleRange::kStandard) {
    constexpr double pi = std::numbers::pi;
    if (p.alpha < 0.0 || p.alpha > pi || p.beta < 0.0 || p.beta > pi) {
      throw InvalidParams(
          "alpha and beta must lie in [0, pi] (use the unrestricted angle "
          "range to override)");
    }
  }
}

// Dense square complex matrix, checked unitary at construction.
class UnitaryMatrix {
 public:
  explicit UnitaryMatrix(Matrix m, double tol = kUnitarityTol)
      : m_(std::move(m)) {
    if (m_.rows() == 0 || m_.rows() != m_.cols()) {
      throw InvalidSize("unitary matrix must be square and non-empty");
    }
    const double err = unitarity_error(m_);
    if (!(err < tol)) {
      throw NotUnitary("matrix is not unitary: max |UU^+ - I| = " +
                       std::to_string(err));
    }
  }

  static UnitaryMatrix identity(Eigen::Index dim) {
    return UnitaryMatrix(Matrix::Identity(dim, dim));
  }

  Eigen::Index dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  Complex operator()(Eigen::Index r, Eigen::Index c) const { return m_(r, c); }

  UnitaryMatrix adjoint() const { return UnitaryMatrix(Unchecked{}, m_.adjoint()); }

  // Products of unitaries are unitary; drift is left to callers to monitor.
  friend UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b) {
    if (a.dim() != b.dim()) {
      throw DimensionMismatch("cannot multiply unitaries of different size");
    }
    return UnitaryMatrix(Unchecked{}, a.m_ * b.m_);
  }

  UnitaryMatrix pow(unsigned n) const {
    Matrix p = Matrix::Identity(dim(), dim());
    for (unsigned i = 0; i < n; ++i) p = m_ * p;
    return UnitaryMatrix(Unchecked{}, std::move(p));
  }

 private:
  struct Unchecked {};
  UnitaryMatrix(Unchecked, Matrix m) : m_(std::move(m)) {}

  Matrix m_;
};

class WalkerState;
WalkerState step(const WalkerState& state, const UnitaryMatrix& u);

// Normalized amplitude vector over the 2k-dimensional position (x) coin space.
class WalkerState {
 public:
  static WalkerState basis(int k, int site, int coin) {
    if (k < 1) throw InvalidSize("cycle size must be >= 1");
    if (site < 0 || site >= k) throw IndexOutOfRange("site out of range");
    if (coin != 0 && coin != 1) throw IndexOutOfRange("coin must be 0 or 1");
    Vector v = Vector::Zero(2 * k);
    v(2 * site + coin) = 1.0;
    return WalkerState(k, std::move(v));
  }

  static WalkerState from_amplitudes(int k, Vector amps, double tol = kNormTol) {
    if (k < 1) throw InvalidSize("cycle size must be >= 1");
    if (amps.size() != 2 * k) {
      throw DimensionMismatch("amplitude vector must have length 2k");
    }
    if (!(std::abs(amps.squaredNorm() - 1.0) < tol)) {
      throw NotNormalized("state is not normalized");
    }
    return WalkerState(k, std::move(amps));
  }

  int cycle_size() const { return k_; }
  Eigen::Index dim() const { return amps_.size(); }
  const Vector& amplitudes() const { return amps_; }
  Complex amplitude(int site, int coin) const { return amps_(2 * site + coin); }
  double norm() const { return amps_.norm(); }

 private:
  WalkerState(int k, Vector amps) : k_(k), amps_(std::move(amps)) {}
  friend WalkerState step(const WalkerState&, const UnitaryMatrix&);

  int k_;
  Vector amps_;
};

// Named coins plus a pattern read left to right in time: "AABB" applies A,
// then A, then B, then B, and repeats.
class CoinSequence {
 public:
  CoinSequence(std::map<char, CoinParams> coins, std::string pattern,
               AngleRange range = AngleRange::kStandard)
      : coins_(std::move(coins)), pattern_(std::move(pattern)), range_(range) {
    if (pattern_.empty()) throw InvalidSequence("pattern must be nonempty");
    for (char c : pattern_) {
      auto it = coins_.find(c);
      if (it == coins_.end()) {
        throw InvalidSequence(std::string("pattern letter '") + c +
                              "' has no coin");
      }
    }
    for (const auto& [name, params] : coins_) validate(params, range_);
  }

  static CoinSequence single(const CoinParams& coin, char name = 'C',
                             AngleRange range = AngleRange::kStandard) {
    return CoinSequence({{name, coin}}, std::string(1, name), range);
  }

  const std::string& pattern() const { return pattern_; }
  std::size_t length() const { return pattern_.size(); }
  const std::map<char, CoinParams>& coins() const { return coins_; }
  const CoinParams& coin(char name) const { return coins_.at(name); }
  AngleRange angle_range() const { return range_; }

  // Letter applied on the transition t -> t + 1.
  char letter_at(std::size_t t) const { return pattern_[t % pattern_.size()]; }

 private:
  std::map<char, CoinParams> coins_;
  std::string pattern_;
  AngleRange range_;
};

inline UnitaryMatrix build_coin(const CoinParams& p,
                                AngleRange range = AngleRange::kStandard) {
  validate(p, range);
  const double a = std::sqrt(p.rho);
  const double b = std::sqrt(1.0 - p.rho);
  const Complex i{0.0, 1.0};
  Matrix c(2, 2);
  c << a, b * std::exp(i * p.alpha),
       b * std::exp(i * p.beta), -a * std::exp(i * (p.alpha + p.beta));
  return UnitaryMatrix(std::move(c));
}

// Permutation |i>|s> -> |(i + 2s - 1) mod k>|s>.
inline UnitaryMatrix build_shift(int k) {
  if (k < 1) throw InvalidSize("cycle size must be >= 1");
  Matrix s = Matrix::Zero(2 * k, 2 * k);
  for (int i = 0; i < k; ++i) {
    for (int c = 0; c < 2; ++c) {
      const int dest = ((i + 2 * c - 1) % k + k) % k;
      s(2 * dest + c, 2 * i + c) = 1.0;
    }
  }
  return UnitaryMatrix(std::move(s));
}

// U_k = S (I_k (x) C).
inline UnitaryMatrix build_walk_unitary(int k, const CoinParams& p,
                                        AngleRange range = AngleRange::kStandard) {
  const UnitaryMatrix shift = build_shift(k);
  const UnitaryMatrix coin = build_coin(p, range);
  Matrix block_coin = Matrix::Zero(2 * k, 2 * k);
  for (int i = 0; i < k; ++i) block_coin.block(2 * i, 2 * i, 2, 2) = coin.matrix();
  return shift * UnitaryMatrix(std::move(block_coin));
}

// Defining 2x2 block per cyclic offset j: block (r, c) of U equals
// blocks[(c - r) mod k].
inline std::vector<Block> circulant_blocks(const UnitaryMatrix& u, int k,
                                           double tol = kUnitarityTol) {
  if (k < 1) throw InvalidSize("cycle size must be >= 1");
  if (u.dim() != 2 * k) throw DimensionMismatch("matrix dimension is not 2k");
  std::vector<Block> blocks(k);
  for (int j = 0; j < k; ++j) blocks[j] = u.matrix().block(0, 2 * j, 2, 2);
  for (int r = 1; r < k; ++r) {
    for (int c = 0; c < k; ++c) {
      const Block& expected = blocks[((c - r) % k + k) % k];
      const double dev = (u.matrix().block(2 * r, 2 * c, 2, 2) - expected)
                             .cwiseAbs().maxCoeff();
      if (dev > tol) {
        throw NotBlockCirculant("block (" + std::to_string(r) + ", " +
                                std::to_string(c) + ") deviates by " +
                                std::to_string(dev));
      }
    }
  }
  return blocks;
}

inline Matrix block_circulant(const std::vector<Block>& blocks) {
  const int k = static_cast<int>(blocks.size());
  Matrix m(2 * k, 2 * k);
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < k; ++c) {
      m.block(2 * r, 2 * c, 2, 2) = blocks[((c - r) % k + k) % k];
    }
  }
  return m;
}

inline WalkerState step(const WalkerState& state, const UnitaryMatrix& u) {
  if (u.dim() != state.dim()) {
    throw DimensionMismatch("operator dimension does not match state");
  }
  return WalkerState(state.k_, u.matrix() * state.amps_);
}

// One walk unitary per distinct coin letter.
inline std::map<char, UnitaryMatrix> walk_unitaries(const CoinSequence& seq, int k) {
  std::map<char, UnitaryMatrix> out;
  for (const auto& [name, params] : seq.coins()) {
    out.emplace(name, build_walk_unitary(k, params, seq.angle_range()));
  }
  return out;
}

// trajectory[t] is the state after t coin applications.
inline std::vector<WalkerState> evolve_sequence(const WalkerState& initial,
                                                const CoinSequence& seq,
                                                std::size_t steps) {
  const auto ops = walk_unitaries(seq, initial.cycle_size());
  std::vector<WalkerState> trajectory;
  trajectory.reserve(steps + 1);
  trajectory.push_back(initial);
  for (std::size_t t = 0; t < steps; ++t) {
    trajectory.push_back(step(trajectory.back(), ops.at(seq.letter_at(t))));
  }
  return trajectory;
}

inline double site_probability(const WalkerState& state, int site) {
  if (site < 0 || site >= state.cycle_size()) {
    throw IndexOutOfRange("site " + std::to_string(site) + " outside 0.." +
                          std::to_string(state.cycle_size() - 1));
  }
  return std::norm(state.amplitude(site, 0)) + std::norm(state.amplitude(site, 1));
}

// Operator for one pass of the pattern; the first letter in time is the
// rightmost factor.
inline UnitaryMatrix compose_sequence(const CoinSequence& seq, int k) {
  const auto ops = walk_unitaries(seq, k);
  UnitaryMatrix acc = UnitaryMatrix::identity(2 * k);
  for (char c : seq.pattern()) acc = ops.at(c) * acc;
  return acc;
}

}  // namespace qwalk
