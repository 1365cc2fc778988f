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

// Named coins used throughout the tools and tests.
//
// The periodic reference biases are rho = (5 - sqrt 5)/6 on the 3-cycle
// (period 10) and rho = (5 - sqrt 5)/8 on the 4-cycle (period 10). The
// chaotic pairs are the two AABB roots for those biases, carried at full
// double precision; their six-digit roundings are
//   k = 3: A = 0.264734, B = 0.801571, C = 0.460655
//   k = 4: A = 0.998489, B = 0.119545, C = 0.345492

#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qwalk/parrondo.hpp"
#include "qwalk/walk.hpp"

namespace qwalk::presets {

inline const double kRhoK3 = (5.0 - std::sqrt(5.0)) / 6.0;
inline const double kRhoK4 = (5.0 - std::sqrt(5.0)) / 8.0;

inline CoinParams hadamard() { return {0.5, 0.0, 0.0}; }

// Periodic reference coin C for the given cycle (3 or 4).
inline CoinParams reference_coin(int k) {
  if (k == 3) return {kRhoK3, 0.0, 0.0};
  if (k == 4) return {kRhoK4, 0.0, 0.0};
  throw InvalidSize("no reference coin for k = " + std::to_string(k));
}

// The chaotic pair (A, B) whose AABB schedule matches C. On the 3-cycle A is
// the smaller root, on the 4-cycle the larger one.
inline std::pair<CoinParams, CoinParams> chaotic_pair(int k) {
  const CoinParams c = reference_coin(k);
  const auto [plus, minus] = solve_aabb(c.rho);
  const ParrondoSolution& s = (k == 3) ? minus : plus;
  return {CoinParams{s.rho1, 0.0, 0.0}, CoinParams{s.rho2, 0.0, 0.0}};
}

// hadamard, k3-A/B/C, k4-A/B/C.
inline std::optional<CoinParams> lookup(std::string_view name) {
  if (name == "hadamard") return hadamard();
  for (int k : {3, 4}) {
    const std::string prefix = "k" + std::to_string(k) + "-";
    if (name.size() != prefix.size() + 1 || name.substr(0, prefix.size()) != prefix) {
      continue;
    }
    switch (name.back()) {
      case 'A': return chaotic_pair(k).first;
      case 'B': return chaotic_pair(k).second;
      case 'C': return reference_coin(k);
      default: return std::nullopt;
    }
  }
  return std::nullopt;
}

inline std::vector<std::string> names() {
  return {"hadamard",    "k3-A", "k3-B", "k3-C",
          "k4-A",  "k4-B", "k4-C"};
}

// Coin table {A, B, C} for the 3- and 4-cycles.
inline CoinSequence preset_sequence(int k, std::string pattern) {
  const auto [a, b] = chaotic_pair(k);
  return CoinSequence({{'A', a}, {'B', b}, {'C', reference_coin(k)}},
                      std::move(pattern));
}

}  // namespace qwalk::presets
