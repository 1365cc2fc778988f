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

// Message encryption with chaotic walks.
//
// Two chaotic coins A and B whose AABB schedule recurs after p pattern
// passes give a trapdoor: B applied twice scrambles a basis state |l>|s>
// into a public key, and D = (AABB)^{p-1} AA (as a matrix product) undoes
// it because D B B = (AABB)^p = I. The sender shifts the key by the message
// m with T_m (x) I_c, which commutes with every walk operator, so after D
// the receiver holds |l + m mod k>|s> and reads m from the position.

#pragma once

#include <string>

#include "qwalk/presets.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

inline constexpr double kMeasureTol = 1e-6;

struct ProtocolConfig {
  int k = 3;
  CoinParams coin_a;
  CoinParams coin_b;
  int pattern_period = 5;  // (AABB)^p = I

  // Solved chaotic pair for the 3- or 4-cycle.
  static ProtocolConfig for_cycle(int k) {
    const auto [a, b] = presets::chaotic_pair(k);
    return ProtocolConfig{k, a, b, 5};
  }

  CoinSequence aabb() const {
    return CoinSequence({{'A', coin_a}, {'B', coin_b}}, "AABB");
  }
};

// Confirms the AABB schedule recurs after exactly 4p coin steps and that each
// coin on its own is chaotic up to n_max.
inline bool verify(const ProtocolConfig& cfg, int n_max = kDefaultMaxPeriod) {
  const auto rep = sequence_min_period(cfg.aabb(), cfg.k, n_max);
  if (rep.period != 4 * cfg.pattern_period) return false;
  for (const CoinParams& c : {cfg.coin_a, cfg.coin_b}) {
    if (min_period(build_walk_unitary(cfg.k, c), n_max).verdict != Verdict::kChaotic) {
      return false;
    }
  }
  return true;
}

struct PublicKey {
  WalkerState state;
  int k = 3;
  int l = 0;
  std::string generator = "BB";
};

// T_m (x) I_c: |i>|s> -> |(i + m) mod k>|s>.
inline UnitaryMatrix position_shift(int k, int m) {
  if (k < 1) throw InvalidSize("cycle size must be >= 1");
  Matrix t = Matrix::Zero(2 * k, 2 * k);
  for (int i = 0; i < k; ++i) {
    const int dest = ((i + m) % k + k) % k;
    t(2 * dest, 2 * i) = 1.0;
    t(2 * dest + 1, 2 * i + 1) = 1.0;
  }
  return UnitaryMatrix(std::move(t));
}

inline PublicKey gen_public_key(int l, int s, const ProtocolConfig& cfg) {
  if (l < 0 || l >= cfg.k) throw InvalidPosition("initial position out of range");
  if (s != 0 && s != 1) throw InvalidPosition("coin state must be 0 or 1");
  const UnitaryMatrix b = build_walk_unitary(cfg.k, cfg.coin_b);
  WalkerState st = step(step(WalkerState::basis(cfg.k, l, s), b), b);
  return PublicKey{std::move(st), cfg.k, l, "BB"};
}

inline WalkerState encrypt(const PublicKey& pk, int m) {
  if (m < 0 || m >= pk.k) {
    throw InvalidMessage("message must lie in 0.." + std::to_string(pk.k - 1));
  }
  return step(pk.state, position_shift(pk.k, m));
}

// D = (A A B B)^{p-1} A A, written as a matrix product.
inline UnitaryMatrix decryption_operator(const ProtocolConfig& cfg) {
  const UnitaryMatrix a = build_walk_unitary(cfg.k, cfg.coin_a);
  const UnitaryMatrix b = build_walk_unitary(cfg.k, cfg.coin_b);
  const UnitaryMatrix block = a * a * b * b;
  return block.pow(static_cast<unsigned>(cfg.pattern_period - 1)) * a * a;
}

inline WalkerState decrypt(const WalkerState& ct, const ProtocolConfig& cfg) {
  if (ct.cycle_size() != cfg.k) {
    throw DimensionMismatch("ciphertext cycle size does not match config");
  }
  return step(ct, decryption_operator(cfg));
}

// Projective position measurement on a state expected to be a position
// eigenstate.
inline int measure_position(const WalkerState& state, double tol = kMeasureTol) {
  for (int i = 0; i < state.cycle_size(); ++i) {
    if (site_probability(state, i) > 1.0 - tol) return i;
  }
  throw NotPositionEigenstate("no site carries probability above 1 - tol");
}

inline int recover_message(int m_prime, int l, int k) {
  return ((m_prime - l) % k + k) % k;
}

}  // namespace qwalk
