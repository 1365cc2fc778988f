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

// Overlap-based Lyapunov exponent of a walk:
//   lambda = -log2 |<psi(t)|psi(t0)>| / (t - t0)   [bits per step]
// which is zero whenever the walk recurs and positive otherwise.

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "qwalk/walk.hpp"

namespace qwalk {

struct LyapunovReport {
  double exponent = 0.0;
  int t0 = 0;
  int t = 0;
  double overlap = 1.0;   // |<psi(t)|psi(t0)>|
  double distance = 0.0;  // 2 (1 - 2^{-lambda (t - t0)}), in [0, 2]
  std::string label;
};

// |2 - 2 <a|b>|: zero iff a = b, 2 for orthogonal states.
inline double distance(const WalkerState& a, const WalkerState& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("states differ in dimension");
  return std::abs(2.0 - 2.0 * a.amplitudes().dot(b.amplitudes()));
}

inline LyapunovReport lyapunov_exponent(const CoinSequence& seq,
                                        const WalkerState& initial, int t0, int t) {
  if (t0 < 0) throw OutOfRange("t0 must be >= 0");
  if (t == t0) throw DegenerateInterval("t must differ from t0");
  if (t < t0) throw OutOfRange("t must exceed t0");

  const auto traj = evolve_sequence(initial, seq, static_cast<std::size_t>(t));
  const WalkerState& start = traj[t0];
  const WalkerState& end = traj[t];
  // Rounding can push the modulus a hair above one; clamp so lambda >= 0.
  const double overlap =
      std::min(1.0, std::abs(end.amplitudes().dot(start.amplitudes())));

  LyapunovReport rep;
  rep.t0 = t0;
  rep.t = t;
  rep.overlap = overlap;
  rep.label = seq.pattern();
  const double span = static_cast<double>(t - t0);
  if (overlap <= 0.0) {
    rep.exponent = std::numeric_limits<double>::infinity();
    rep.distance = 2.0;
  } else {
    rep.exponent = overlap == 1.0 ? 0.0 : -std::log2(overlap) / span;
    rep.distance = 2.0 * (1.0 - overlap);
  }
  return rep;
}

}  // namespace qwalk
