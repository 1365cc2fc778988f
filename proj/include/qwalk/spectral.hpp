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

// Spectral analysis of cycle-walk operators: Fourier block diagonalization,
// closed-form block eigenvalues, rational phase recovery and period search.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Eigenvalues>

#include "qwalk/walk.hpp"

namespace qwalk {

inline constexpr std::int64_t kDefaultDenominatorCap = 4096;
inline constexpr double kDefaultPhaseTol = 1e-9;
inline constexpr int kDefaultMaxPeriod = 1000;

// F(m, n) = exp(2 pi i m n / M) / sqrt(M).
inline UnitaryMatrix fourier_matrix(int dim) {
  if (dim < 1) throw InvalidSize("Fourier dimension must be >= 1");
  Matrix f(dim, dim);
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  for (int m = 0; m < dim; ++m) {
    for (int n = 0; n < dim; ++n) {
      // Reduce m*n first so the angle stays small and exact.
      const double angle = 2.0 * std::numbers::pi *
                           static_cast<double>((m * n) % dim) / dim;
      f(m, n) = std::polar(scale, angle);
    }
  }
  return UnitaryMatrix(std::move(f));
}

// Unordered eigenvalue pair of a 2x2 matrix from its trace and determinant.
inline std::pair<Complex, Complex> eigenvalues_2x2(const Block& b) {
  const Complex half_trace = 0.5 * (b(0, 0) + b(1, 1));
  const Complex det = b(0, 0) * b(1, 1) - b(0, 1) * b(1, 0);
  const Complex root = std::sqrt(half_trace * half_trace - det);
  return {half_trace + root, half_trace - root};
}

struct SpectralBlock {
  int l = 0;
  Block block;
  std::pair<Complex, Complex> eigenvalues;
};

// (F_k (x) I_2) U (F_k (x) I_2)^dagger.
inline Matrix fourier_conjugate(const UnitaryMatrix& u, int k) {
  if (u.dim() != 2 * k) throw DimensionMismatch("matrix dimension is not 2k");
  Matrix w = Matrix::Zero(2 * k, 2 * k);
  const Matrix f = fourier_matrix(k).matrix();
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < k; ++c) {
      w(2 * r, 2 * c) = f(r, c);
      w(2 * r + 1, 2 * c + 1) = f(r, c);
    }
  }
  return w * u.matrix() * w.adjoint();
}

// Largest entry outside the 2x2 diagonal blocks.
inline double off_block_leakage(const Matrix& m) {
  double worst = 0.0;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (r / 2 != c / 2) worst = std::max(worst, std::abs(m(r, c)));
    }
  }
  return worst;
}

inline std::vector<SpectralBlock> block_diagonalize(const UnitaryMatrix& u, int k) {
  circulant_blocks(u, k);  // throws NotBlockCirculant
  const Matrix v = fourier_conjugate(u, k);
  const double leak = off_block_leakage(v);
  if (leak > kUnitarityTol) {
    throw NotBlockCirculant("Fourier conjugation leaves off-block entries of " +
                            std::to_string(leak));
  }
  std::vector<SpectralBlock> out;
  out.reserve(k);
  for (int l = 0; l < k; ++l) {
    SpectralBlock sb;
    sb.l = l;
    sb.block = v.block(2 * l, 2 * l, 2, 2);
    sb.eigenvalues = eigenvalues_2x2(sb.block);
    out.push_back(std::move(sb));
  }
  return out;
}

// Closed-form eigenvalues of Fourier block l of U_k:
//   1/2 e^{-2 pi i l/k} ( (1 - e^{4 pi i l/k + i delta}) sqrt(rho)
//        +- 2 sqrt( e^{4 pi i l/k + i delta} (1 - rho sin^2(2 pi l/k + delta/2)) ) )
// with delta = alpha + beta.
inline std::pair<Complex, Complex> analytic_block_eigenvalues(
    int k, int l, const CoinParams& p, AngleRange range = AngleRange::kStandard) {
  if (k < 1) throw InvalidSize("cycle size must be >= 1");
  if (l < 0 || l >= k) throw IndexOutOfRange("block index out of range");
  validate(p, range);
  constexpr double pi = std::numbers::pi;
  const Complex i{0.0, 1.0};
  const double theta = 2.0 * pi * l / k;
  const double delta = p.delta();
  const Complex z = std::exp(i * (2.0 * theta + delta));
  const double s = std::sin(theta + 0.5 * delta);
  const Complex prefactor = 0.5 * std::exp(-i * theta);
  const Complex lead = (1.0 - z) * std::sqrt(p.rho);
  const Complex root = 2.0 * std::sqrt(z * (1.0 - p.rho * s * s));
  return {prefactor * (lead + root), prefactor * (lead - root)};
}

// A phase written as m/n of a full turn, 0 <= m < n, gcd(m, n) = 1.
struct PhaseRational {
  std::int64_t m = 0;
  std::int64_t n = 1;
  double residual = 0.0;
};

// Recovers arg(value) / 2pi as a reduced fraction from the continued
// fraction convergents. Returns the first convergent with denominator
// <= q_max that lies within tol of the phase.
inline std::optional<PhaseRational> phase_to_rational(
    Complex value, std::int64_t q_max = kDefaultDenominatorCap,
    double tol = kDefaultPhaseTol) {
  if (!(std::abs(std::abs(value) - 1.0) < 1e-9)) {
    throw NotUnitModulus("value is not on the unit circle");
  }
  if (q_max < 1) throw OutOfRange("denominator cap must be >= 1");
  double x = std::arg(value) / (2.0 * std::numbers::pi);
  if (x < 0.0) x += 1.0;
  if (x >= 1.0) x -= 1.0;

  std::int64_t h_prev = 1, h_prev2 = 0;
  std::int64_t q_prev = 0, q_prev2 = 1;
  double y = x;
  for (int iter = 0; iter < 64; ++iter) {
    const double a_real = std::floor(y);
    if (a_real > 1e15) break;
    const auto a = static_cast<std::int64_t>(a_real);
    const std::int64_t h = a * h_prev + h_prev2;
    const std::int64_t q = a * q_prev + q_prev2;
    if (q > q_max) break;
    const double residual =
        std::abs(x - static_cast<double>(h) / static_cast<double>(q));
    if (residual < tol) {
      const std::int64_t m = h % q;
      const std::int64_t g = std::gcd(m, q);
      return PhaseRational{m / g, q / g, residual};
    }
    const double frac = y - a_real;
    if (frac <= 0.0) break;
    y = 1.0 / frac;
    h_prev2 = h_prev;
    h_prev = h;
    q_prev2 = q_prev;
    q_prev = q;
  }
  return std::nullopt;
}

// Eigenvalues of a dense unitary.
inline std::vector<Complex> spectrum(const UnitaryMatrix& u) {
  Eigen::ComplexEigenSolver<Matrix> solver(u.matrix(), /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw Error("eigenvalue solver did not converge");
  }
  const Vector& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

enum class Verdict { kPeriodic, kChaotic };
enum class Method { kBruteForce, kSpectral, kBoth };

inline const char* to_string(Verdict v) {
  return v == Verdict::kPeriodic ? "periodic" : "chaotic";
}

inline const char* to_string(Method m) {
  switch (m) {
    case Method::kBruteForce: return "brute-force";
    case Method::kSpectral: return "spectral";
    case Method::kBoth: return "both";
  }
  return "?";
}

// Outcome of a period search. The brute-force power scan decides the
// verdict; the spectral route is a cross-check and any disagreement is
// surfaced through `concordant`.
struct PeriodReport {
  Verdict verdict = Verdict::kChaotic;
  std::optional<int> period;  // coin steps
  Method method = Method::kBoth;
  int n_max = kDefaultMaxPeriod;
  double tolerance = kIdentityTol;
  std::optional<int> brute_force_period;
  std::optional<int> spectral_period;
  bool concordant = true;
  double drift = 0.0;  // unitarity error of the last accumulated operator
};

namespace detail {

struct ScanResult {
  std::optional<int> first;           // first t with identity
  std::optional<int> first_multiple;  // first t that is a multiple of the cycle
  double drift = 0.0;
};

// Multiplies ops[t mod n] onto the accumulator for t = 0..n_max-1 and
// watches for the identity.
inline ScanResult scan_accumulated(const std::vector<const UnitaryMatrix*>& ops,
                                   int n_max, double tol) {
  const Eigen::Index dim = ops.front()->dim();
  const int cycle = static_cast<int>(ops.size());
  Matrix acc = Matrix::Identity(dim, dim);
  ScanResult out;
  for (int t = 1; t <= n_max; ++t) {
    acc = ops[(t - 1) % cycle]->matrix() * acc;
    if (identity_error(acc) < tol) {
      if (!out.first) out.first = t;
      if (t % cycle == 0) {
        out.first_multiple = t;
        break;
      }
    }
  }
  out.drift = unitarity_error(acc);
  return out;
}

// Period from the eigenvalue phases: lcm of their denominators, or nothing
// when a phase is not rational or the lcm passes n_max.
inline std::optional<int> spectral_period(const UnitaryMatrix& u, int n_max,
                                          double tol, std::int64_t q_max) {
  std::int64_t acc = 1;
  for (const Complex& lambda : spectrum(u)) {
    auto r = phase_to_rational(lambda / std::abs(lambda), q_max, tol);
    if (!r) return std::nullopt;
    acc = std::lcm(acc, r->n);
    if (acc > n_max) return std::nullopt;
  }
  return static_cast<int>(acc);
}

}  // namespace detail

inline PeriodReport min_period(const UnitaryMatrix& u, int n_max = kDefaultMaxPeriod,
                               double tol = kIdentityTol,
                               std::int64_t q_max = kDefaultDenominatorCap) {
  if (n_max < 1) throw OutOfRange("n_max must be >= 1");
  PeriodReport rep;
  rep.n_max = n_max;
  rep.tolerance = tol;
  const auto scan = detail::scan_accumulated({&u}, n_max, tol);
  rep.brute_force_period = scan.first;
  rep.drift = scan.drift;
  rep.spectral_period = detail::spectral_period(u, n_max, tol, q_max);
  rep.concordant = rep.brute_force_period == rep.spectral_period;
  rep.period = rep.brute_force_period;
  rep.verdict = rep.period ? Verdict::kPeriodic : Verdict::kChaotic;
  rep.method = rep.concordant ? Method::kBoth : Method::kBruteForce;
  return rep;
}

// Smallest step count at which the time-ordered product of the sequence's
// walk unitaries is the identity. The spectral cross-check covers whole
// pattern repetitions, so it is compared against the first identity found
// at a multiple of the pattern length.
inline PeriodReport sequence_min_period(const CoinSequence& seq, int k,
                                        int n_max = kDefaultMaxPeriod,
                                        double tol = kIdentityTol,
                                        std::int64_t q_max = kDefaultDenominatorCap) {
  if (n_max < 1) throw OutOfRange("n_max must be >= 1");
  const auto ops = walk_unitaries(seq, k);
  std::vector<const UnitaryMatrix*> cycle;
  for (char c : seq.pattern()) cycle.push_back(&ops.at(c));
  const int len = static_cast<int>(seq.length());

  PeriodReport rep;
  rep.n_max = n_max;
  rep.tolerance = tol;
  const auto scan = detail::scan_accumulated(cycle, n_max, tol);
  rep.brute_force_period = scan.first;
  rep.drift = scan.drift;

  if (n_max / len >= 1) {
    const UnitaryMatrix pattern_op = compose_sequence(seq, k);
    if (auto reps = detail::spectral_period(pattern_op, n_max / len, tol, q_max)) {
      rep.spectral_period = *reps * len;
    }
  }
  rep.concordant = scan.first_multiple == rep.spectral_period;
  rep.period = rep.brute_force_period;
  rep.verdict = rep.period ? Verdict::kPeriodic : Verdict::kChaotic;
  rep.method = (rep.concordant && rep.period == rep.spectral_period)
                   ? Method::kBoth
                   : Method::kBruteForce;
  return rep;
}

}  // namespace qwalk
