// Copyright 2026 The lifeframe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lifeframe/error.hpp"
#include "lifeframe/frame_kinematics.hpp"
#include "lifeframe/rational.hpp"

// Move-by-move token model: on each move a token either jumps one square
// or stays put. Used as a brute-force check of the parallel composition
// law, independent of the closed form.
namespace lifeframe::chess {

/// One token over P moves. Move indices are 0-based.
struct TokenRun {
  std::uint64_t total_moves = 0;
  std::vector<std::uint64_t> jump_moves;
  std::vector<std::uint64_t> rest_moves;
  std::int64_t displacement = 0;
  std::vector<std::int64_t> trace;  ///< position before move 0, then after each move; P + 1 entries
};

/// Replay a jump schedule. Throws on repeated or out-of-range indices.
inline TokenRun run_token(std::uint64_t total_moves, std::vector<std::uint64_t> jumps) {
  if (total_moves == 0) throw DomainError("a token run needs at least one move");
  std::sort(jumps.begin(), jumps.end());
  if (std::adjacent_find(jumps.begin(), jumps.end()) != jumps.end()) throw DomainError("a move index is scheduled twice");
  if (!jumps.empty() && jumps.back() >= total_moves) throw DomainError("jump scheduled after the last move");

  TokenRun run;
  run.total_moves = total_moves;
  run.trace.reserve(total_moves + 1);
  run.trace.push_back(0);
  std::size_t next = 0;
  for (std::uint64_t t = 0; t < total_moves; ++t) {
    bool jump = next < jumps.size() && jumps[next] == t;
    if (jump) {
      ++next;
      ++run.displacement;
      run.jump_moves.push_back(t);
    } else {
      run.rest_moves.push_back(t);
    }
    run.trace.push_back(run.displacement);
  }
  return run;
}

inline std::vector<std::uint64_t> earliest_moves(std::uint64_t count) {
  std::vector<std::uint64_t> out(count);
  for (std::uint64_t i = 0; i < count; ++i) out[i] = i;
  return out;
}

struct CarrierBulletRun {
  TokenRun carrier;
  std::vector<std::uint64_t> bullet_jumps;  ///< ground move indices where the bullet advances in the carrier
  std::vector<std::int64_t> bullet_trace;   ///< bullet ground position, P + 1 entries
  std::int64_t ground_displacement = 0;
  Rational v12;
};

/*!
 * Carrier jumps on `carrier_jumps`; the bullet advances relative to the
 * carrier on `bullet_jumps`, which must be rest moves of the carrier.
 * The bullet's ground position is carrier position plus its own offset,
 * replayed move by move.
 */
inline CarrierBulletRun run_carrier_bullet(std::uint64_t total_moves, const std::vector<std::uint64_t>& carrier_jumps,
                                           std::vector<std::uint64_t> bullet_jumps) {
  CarrierBulletRun out;
  out.carrier = run_token(total_moves, carrier_jumps);
  std::sort(bullet_jumps.begin(), bullet_jumps.end());
  if (std::adjacent_find(bullet_jumps.begin(), bullet_jumps.end()) != bullet_jumps.end()) {
    throw DomainError("a bullet move is scheduled twice");
  }
  for (auto t : bullet_jumps) {
    if (!std::binary_search(out.carrier.rest_moves.begin(), out.carrier.rest_moves.end(), t)) {
      throw DomainError("bullet move " + std::to_string(t) + " is not a rest move of the carrier");
    }
  }
  out.bullet_jumps = bullet_jumps;
  std::int64_t offset = 0;
  std::size_t next = 0;
  out.bullet_trace.push_back(0);
  for (std::uint64_t t = 0; t < total_moves; ++t) {
    if (next < bullet_jumps.size() && bullet_jumps[next] == t) {
      ++next;
      ++offset;
    }
    out.bullet_trace.push_back(out.carrier.trace[t + 1] + offset);
  }
  out.ground_displacement = out.bullet_trace.back();
  out.v12 = Rational(out.ground_displacement, static_cast<std::int64_t>(total_moves));
  return out;
}

/// Earliest-first placement: carrier jumps first, bullet uses the first n2 rest moves.
inline CarrierBulletRun run_carrier_bullet(std::uint64_t total_moves, std::uint64_t carrier_jumps, std::uint64_t bullet_jumps) {
  if (carrier_jumps > total_moves) throw DomainError("carrier cannot jump more often than it moves");
  if (bullet_jumps > total_moves - carrier_jumps) {
    throw DomainError("infeasible schedule: bullet needs " + std::to_string(bullet_jumps) + " rest moves, carrier has " +
                      std::to_string(total_moves - carrier_jumps));
  }
  std::vector<std::uint64_t> bullet(bullet_jumps);
  for (std::uint64_t i = 0; i < bullet_jumps; ++i) bullet[i] = carrier_jumps + i;
  return run_carrier_bullet(total_moves, earliest_moves(carrier_jumps), std::move(bullet));
}

struct DuelResult {
  TokenRun white;
  TokenRun black;
  std::int64_t closing = 0;  ///< total distance closed by both pawns
  Rational closing_speed;
  std::vector<std::int64_t> closed_trace;  ///< cumulative closing after each move, P + 1 entries
};

/// Two pawns approaching on one file; they alternate, never move on the same turn.
inline DuelResult run_pawn_duel(std::uint64_t total_moves, const std::vector<std::uint64_t>& white_jumps,
                                const std::vector<std::uint64_t>& black_jumps) {
  DuelResult out;
  out.white = run_token(total_moves, white_jumps);
  out.black = run_token(total_moves, black_jumps);
  for (auto t : out.black.jump_moves) {
    if (std::binary_search(out.white.jump_moves.begin(), out.white.jump_moves.end(), t)) {
      throw DomainError("both pawns scheduled to move on move " + std::to_string(t));
    }
  }
  for (std::size_t i = 0; i < out.white.trace.size(); ++i) out.closed_trace.push_back(out.white.trace[i] + out.black.trace[i]);
  out.closing = out.closed_trace.back();
  out.closing_speed = Rational(out.closing, static_cast<std::int64_t>(total_moves));
  return out;
}

struct Triple {
  std::uint64_t total_moves;
  std::uint64_t carrier_jumps;
  std::uint64_t bullet_jumps;

  friend bool operator==(const Triple&, const Triple&) = default;
};

struct OracleReport {
  std::uint64_t max_moves = 0;
  std::uint64_t triples_checked = 0;
  std::vector<Triple> counterexamples;
};

/// Co-moving bullet velocity n2 / (P - n1); zero when the carrier never rests.
inline Rational comoving_velocity(std::uint64_t total_moves, std::uint64_t carrier_jumps, std::uint64_t bullet_jumps) {
  if (carrier_jumps == total_moves) return Rational(0);
  return Rational(static_cast<std::int64_t>(bullet_jumps), static_cast<std::int64_t>(total_moves - carrier_jumps));
}

/// Token replay versus the closed form for every P <= max_moves, n1 <= P, n2 <= P - n1.
inline OracleReport exhaustive_check(std::uint64_t max_moves) {
  if (max_moves == 0) throw DomainError("exhaustive_check needs max_moves >= 1");
  OracleReport report;
  report.max_moves = max_moves;
  for (std::uint64_t p = 1; p <= max_moves; ++p) {
    for (std::uint64_t n1 = 0; n1 <= p; ++n1) {
      for (std::uint64_t n2 = 0; n2 <= p - n1; ++n2) {
        ++report.triples_checked;
        Rational replayed = run_carrier_bullet(p, n1, n2).v12;
        Rational v1(static_cast<std::int64_t>(n1), static_cast<std::int64_t>(p));
        Rational closed = compose_parallel(v1, comoving_velocity(p, n1, n2));
        if (replayed != closed) report.counterexamples.push_back({p, n1, n2});
      }
    }
  }
  return report;
}

}  // namespace lifeframe::chess
