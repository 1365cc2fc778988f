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

// Command-line front end: walk | period | solve | lyapunov | crypto.
//
// Exit codes: 0 success, 1 usage error, 2 numerical or domain error.

#pragma once

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qwalk/qwalk.hpp"

namespace qwalk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNumeric = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// 12 significant digits; integral values keep a trailing ".0".
inline std::string format_probability(double p) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", p);
  std::string s(buf);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

inline double parse_double(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError("cannot parse " + what + " '" + text + "' as a number");
  }
}

// A coin spec is a preset name or "rho[,alpha[,beta]]".
inline CoinParams parse_coin(const std::string& spec) {
  if (auto p = presets::lookup(spec)) return *p;
  std::vector<double> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(parse_double(item, "coin"));
  if (parts.empty() || parts.size() > 3) {
    throw UsageError("coin spec '" + spec +
                     "' is neither a preset nor rho[,alpha[,beta]]");
  }
  parts.resize(3, 0.0);
  return {parts[0], parts[1], parts[2]};
}

struct WalkOptions {
  int k = 3;
  std::optional<double> rho;
  double alpha = 0.0;
  double beta = 0.0;
  std::string seq;
  std::vector<std::string> coins;  // L=SPEC
  bool wide_angles = false;
  bool json = false;
};

// Resolves the coin table. Without --seq the walk uses the single coin given
// by --rho/--alpha/--beta (Hadamard by default). Pattern letters take their
// coin from --coin L=SPEC; otherwise H means Hadamard and A, B, C on the 3-
// and 4-cycle mean the built-in chaotic pair and periodic reference.
inline CoinSequence build_sequence(const WalkOptions& o) {
  const AngleRange range = o.wide_angles ? AngleRange::kUnrestricted : AngleRange::kStandard;
  if (o.seq.empty()) {
    CoinParams c{o.rho.value_or(0.5), o.alpha, o.beta};
    return CoinSequence::single(c, 'C', range);
  }
  std::map<char, CoinParams> explicit_coins;
  for (const auto& entry : o.coins) {
    if (entry.size() < 3 || entry[1] != '=') {
      throw UsageError("--coin expects L=SPEC, got '" + entry + "'");
    }
    explicit_coins[entry[0]] = parse_coin(entry.substr(2));
  }
  std::map<char, CoinParams> table;
  for (char c : std::set<char>(o.seq.begin(), o.seq.end())) {
    if (auto it = explicit_coins.find(c); it != explicit_coins.end()) {
      table[c] = it->second;
    } else if (c == 'H') {
      table[c] = presets::hadamard();
    } else if ((o.k == 3 || o.k == 4) && (c == 'A' || c == 'B' || c == 'C')) {
      table[c] = *presets::lookup("k" + std::to_string(o.k) + "-" + c);
    } else if (o.rho) {
      table[c] = CoinParams{*o.rho, o.alpha, o.beta};
    } else {
      throw UsageError(std::string("no coin for pattern letter '") + c +
                       "' (use --coin " + c + "=SPEC)");
    }
  }
  return CoinSequence(std::move(table), o.seq, range);
}

inline nlohmann::json to_json(const PeriodReport& r) {
  auto opt = [](const std::optional<int>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  };
  return {{"verdict", to_string(r.verdict)},
          {"period", opt(r.period)},
          {"method", to_string(r.method)},
          {"n_max", r.n_max},
          {"tolerance", r.tolerance},
          {"brute_force_period", opt(r.brute_force_period)},
          {"spectral_period", opt(r.spectral_period)},
          {"concordant", r.concordant},
          {"drift", r.drift}};
}

inline nlohmann::json to_json(const ParrondoSolution& s, const MatchResidual<3>& res) {
  return {{"branch", s.branch == Branch::kPlus ? "plus" : "minus"},
          {"rho1", s.rho1},
          {"rho2", s.rho2},
          {"rho", s.rho},
          {"degenerate", s.degenerate},
          {"extraneous", s.extraneous},
          {"residuals", res.values}};
}

inline nlohmann::json to_json(const LyapunovReport& r) {
  return {{"label", r.label},       {"exponent", r.exponent}, {"t0", r.t0},
          {"t", r.t},               {"overlap", r.overlap},   {"distance", r.distance}};
}

inline int default_stride(const CoinSequence& seq, int k) {
  if (seq.length() == 4) return 4;
  if (seq.length() == 1 && k % 2 == 0) return 2;
  return 1;
}

struct WalkCommand {
  WalkOptions common;
  int steps = 40;
  std::optional<int> stride;
  std::string out_path;
  bool full_dist = false;
};

inline void write_walk(const WalkCommand& cmd, std::ostream& os) {
  const CoinSequence seq = build_sequence(cmd.common);
  const int k = cmd.common.k;
  const int stride = cmd.stride.value_or(default_stride(seq, k));
  if (stride < 1) throw UsageError("--stride must be >= 1");
  if (cmd.steps < 0) throw UsageError("--steps must be >= 0");
  const auto traj = evolve_sequence(WalkerState::basis(k, 0, 1), seq,
                                    static_cast<std::size_t>(cmd.steps));
  if (cmd.full_dist) {
    os << "step";
    for (int i = 0; i < k; ++i) os << ",p" << i;
    os << '\n';
  } else {
    os << "step,probability\n";
  }
  for (int t = 0; t <= cmd.steps; t += stride) {
    os << t;
    if (cmd.full_dist) {
      for (int i = 0; i < k; ++i) os << ',' << format_probability(site_probability(traj[t], i));
    } else {
      os << ',' << format_probability(site_probability(traj[t], 0));
    }
    os << '\n';
  }
}

inline std::string describe_state(const WalkerState& st) {
  std::ostringstream os;
  os.precision(6);
  for (int i = 0; i < st.cycle_size(); ++i) {
    for (int s = 0; s < 2; ++s) {
      const Complex a = st.amplitude(i, s);
      if (std::abs(a) < 1e-12) continue;
      os << "  |" << i << ">|" << s << ">: " << std::fixed << a.real()
         << (a.imag() < 0 ? " - " : " + ") << std::abs(a.imag()) << "i\n";
    }
  }
  return os.str();
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discrete-time quantum walks on cycle graphs"};
  app.require_subcommand(1);

  auto add_common = [](CLI::App* sub, WalkOptions& o) {
    sub->add_option("--k", o.k, "cycle size")->check(CLI::Range(1, 32));
    sub->add_option("--rho", o.rho, "coin bias for a single-coin walk");
    sub->add_option("--alpha", o.alpha, "coin phase alpha (radians)");
    sub->add_option("--beta", o.beta, "coin phase beta (radians)");
    sub->add_option("--seq", o.seq, "coin pattern, e.g. AABB");
    sub->add_option("--coin", o.coins, "coin for a pattern letter: L=preset or L=rho,alpha,beta");
    sub->add_flag("--wide-angles", o.wide_angles, "allow alpha, beta outside [0, pi]");
    sub->add_flag("--json", o.json, "machine-readable output");
  };

  WalkCommand walk;
  auto* walk_cmd = app.add_subcommand("walk", "return-probability series as CSV");
  add_common(walk_cmd, walk.common);
  walk_cmd->add_option("--steps", walk.steps, "number of coin steps");
  walk_cmd->add_option("--stride", walk.stride, "emit every stride-th step");
  walk_cmd->add_option("--out", walk.out_path, "output CSV path (default stdout)");
  walk_cmd->add_flag("--full-dist", walk.full_dist, "emit every site's probability");

  WalkOptions period;
  int n_max = kDefaultMaxPeriod;
  double tol = kIdentityTol;
  auto* period_cmd = app.add_subcommand("period", "minimal period of a walk");
  add_common(period_cmd, period);
  period_cmd->add_option("--nmax", n_max, "largest period searched")->check(CLI::PositiveNumber);
  period_cmd->add_option("--tol", tol, "identity tolerance (max-abs)")->check(CLI::PositiveNumber);

  double solve_rho = 0.0;
  bool solve_json = false;
  auto* solve_cmd = app.add_subcommand("solve", "chaotic coin pair whose AABB schedule matches rho");
  solve_cmd->add_option("--rho", solve_rho, "bias of the periodic reference coin")->required();
  solve_cmd->add_flag("--json", solve_json, "machine-readable output");

  WalkOptions lyap;
  int t0 = 0;
  int t_end = 20;
  auto* lyap_cmd = app.add_subcommand("lyapunov", "overlap Lyapunov exponent");
  add_common(lyap_cmd, lyap);
  lyap_cmd->add_option("--t0", t0, "start step");
  lyap_cmd->add_option("--t", t_end, "end step");

  int crypto_k = 3, crypto_m = 0, crypto_l = 0, crypto_s = 0;
  bool crypto_json = false;
  auto* crypto_cmd = app.add_subcommand("crypto", "encrypt and decrypt one message");
  crypto_cmd->add_option("--k", crypto_k, "cycle size (3 or 4)");
  crypto_cmd->add_option("--m", crypto_m, "message in 0..k-1");
  crypto_cmd->add_option("--l", crypto_l, "secret initial position");
  crypto_cmd->add_option("--s", crypto_s, "initial coin state (0 or 1)");
  crypto_cmd->add_flag("--json", crypto_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*walk_cmd) {
      if (walk.out_path.empty()) {
        write_walk(walk, out);
      } else {
        std::ostringstream buf;
        write_walk(walk, buf);
        std::ofstream file(walk.out_path, std::ios::binary | std::ios::trunc);
        if (!file || !(file << buf.str()) || !file.flush()) {
          err << "error: cannot write " << walk.out_path << "\n";
          return kExitNumeric;
        }
      }
    } else if (*period_cmd) {
      const CoinSequence seq = build_sequence(period);
      const PeriodReport rep = sequence_min_period(seq, period.k, n_max, tol);
      if (period.json) {
        nlohmann::json j = to_json(rep);
        j["k"] = period.k;
        j["pattern"] = seq.pattern();
        out << j.dump(2) << "\n";
      } else {
        out << "k=" << period.k << " pattern=" << seq.pattern() << ": "
            << to_string(rep.verdict);
        if (rep.period) out << ", period " << *rep.period << " coin steps";
        out << " (method " << to_string(rep.method) << ", n_max " << rep.n_max
            << ", tol " << rep.tolerance << ")\n";
      }
      if (!rep.concordant) {
        err << "warning: brute-force and spectral period searches disagree\n";
      }
    } else if (*solve_cmd) {
      const auto [plus, minus] = solve_aabb(solve_rho);
      if (solve_json) {
        nlohmann::json j = {
            {"rho", solve_rho},
            {"branches",
             {to_json(plus, aabb_residuals(plus.rho1, plus.rho2, solve_rho)),
              to_json(minus, aabb_residuals(minus.rho1, minus.rho2, solve_rho))}}};
        out << j.dump(2) << "\n";
      } else {
        char line[256];
        for (const ParrondoSolution& s : {plus, minus}) {
          const auto res = aabb_residuals(s.rho1, s.rho2, solve_rho);
          std::snprintf(line, sizeof line,
                        "%-5s rho1=%.6f rho2=%.6f residuals=[%.3g, %.3g, %.3g]%s%s\n",
                        s.branch == Branch::kPlus ? "plus" : "minus", s.rho1, s.rho2,
                        res.values[0], res.values[1], res.values[2],
                        s.degenerate ? " (degenerate)" : "",
                        s.extraneous ? " (extraneous)" : "");
          out << line;
        }
      }
    } else if (*lyap_cmd) {
      const CoinSequence seq = build_sequence(lyap);
      const LyapunovReport rep =
          lyapunov_exponent(seq, WalkerState::basis(lyap.k, 0, 1), t0, t_end);
      if (lyap.json) {
        nlohmann::json j = to_json(rep);
        j["k"] = lyap.k;
        out << j.dump(2) << "\n";
      } else {
        out << "k=" << lyap.k << " pattern=" << rep.label << " t0=" << rep.t0
            << " t=" << rep.t << ": lambda=" << rep.exponent
            << " bits/step (overlap " << rep.overlap << ", distance "
            << rep.distance << ")\n";
      }
    } else if (*crypto_cmd) {
      if (crypto_k != 3 && crypto_k != 4) throw UsageError("crypto supports k = 3 or 4");
      const ProtocolConfig cfg = ProtocolConfig::for_cycle(crypto_k);
      const PublicKey pk = gen_public_key(crypto_l, crypto_s, cfg);
      const WalkerState ct = encrypt(pk, crypto_m);
      const WalkerState pt = decrypt(ct, cfg);
      const int m_prime = measure_position(pt);
      const int m = recover_message(m_prime, crypto_l, crypto_k);
      if (crypto_json) {
        nlohmann::json j = {{"k", crypto_k},  {"l", crypto_l},         {"s", crypto_s},
                            {"message", crypto_m}, {"measured", m_prime}, {"recovered", m}};
        out << j.dump(2) << "\n";
      } else {
        out << "config: k=" << crypto_k << " A=rho " << cfg.coin_a.rho << " B=rho "
            << cfg.coin_b.rho << " (AABB)^" << cfg.pattern_period << " = I\n"
            << "public key BB|" << crypto_l << ">|" << crypto_s << ">:\n"
            << describe_state(pk.state) << "encrypt: T_" << crypto_m << " (x) I_c\n"
            << "decrypt: D = (AABB)^" << cfg.pattern_period - 1 << " AA\n"
            << describe_state(pt) << "measure: m' = " << m_prime << "\n"
            << "recovered message " << m << "\n";
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidParams& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidPosition& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidMessage& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidSequence& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const OutOfDomain& e) {
    err << "error: out of domain: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitOk;
}

}  // namespace qwalk::cli
