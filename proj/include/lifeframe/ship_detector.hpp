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
#include <array>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "lifeframe/error.hpp"
#include "lifeframe/frame_kinematics.hpp"
#include "lifeframe/life_engine.hpp"
#include "lifeframe/rational.hpp"

namespace lifeframe {

enum class ShipKind { still_life, oscillator, ship };

inline std::string_view to_string(ShipKind kind) {
  switch (kind) {
    case ShipKind::still_life: return "still-life";
    case ShipKind::oscillator: return "oscillator";
    case ShipKind::ship: return "ship";
  }
  return "?";
}

/// Period, per-period displacement and velocity of a pattern that recurs modulo translation.
struct ShipReport {
  std::uint64_t period = 0;
  Offset displacement;
  Velocity2 velocity;
  Rational speed;               ///< Chebyshev
  std::vector<Pattern> phases;  ///< canonical, starting from the measured pattern
  ShipKind kind = ShipKind::still_life;
};

/// Growth limit applied while evolving an unknown pattern.
struct ExplosionBound {
  std::uint64_t population_factor = 10;
  std::int64_t max_extent = 10'000;

  bool exceeded(std::size_t initial_population, const Pattern& now) const {
    if (now.empty()) return false;
    if (now.size() > std::max<std::size_t>(initial_population, 1) * population_factor) return true;
    Box box = bounding_box(now);
    return box.width() > max_extent || box.height() > max_extent;
  }
};

struct NotPeriodic {
  bool exploded = false;  ///< stopped early on the explosion bound
  bool died = false;      ///< evolved to the empty pattern
  std::uint64_t generations_examined = 0;
};

using Detection = std::variant<ShipReport, NotPeriodic>;

/*!
 * Smallest t in [1, max_period] with step_n(p, t) equal to p up to
 * translation. Every t below the reported period is checked, so the
 * period is minimal.
 */
inline Detection detect_ship(const Pattern& p, std::uint64_t max_period, const ExplosionBound& bound = {}) {
  if (p.empty()) throw DomainError("cannot detect a ship in an empty pattern");
  if (max_period == 0) throw DomainError("max_period must be at least 1");

  Canonical start = canonicalize(p);
  std::vector<Pattern> phases{start.pattern.with_generation(0)};
  Pattern cur = p;
  for (std::uint64_t t = 1; t <= max_period; ++t) {
    cur = step(cur);
    if (cur.empty()) return NotPeriodic{false, true, t};
    if (bound.exceeded(p.size(), cur)) return NotPeriodic{true, false, t};
    Canonical now = canonicalize(cur);
    if (now.pattern.same_cells(start.pattern)) {
      ShipReport r;
      r.period = t;
      r.displacement = now.offset - start.offset;
      auto period = static_cast<std::int64_t>(t);
      r.velocity = {Rational(r.displacement.dx, period), Rational(r.displacement.dy, period)};
      r.speed = chebyshev_speed(r.velocity);
      r.phases = std::move(phases);
      if (r.displacement != Offset{}) r.kind = ShipKind::ship;
      else r.kind = t == 1 ? ShipKind::still_life : ShipKind::oscillator;
      return r;
    }
    phases.push_back(now.pattern.with_generation(0));
  }
  return NotPeriodic{false, false, max_period};
}

// ---------------------------------------------------------------------------
// Orientation and clustering helpers
// ---------------------------------------------------------------------------

/// One of the eight lattice symmetries fixing the origin: (x, y) -> (a x + b y, c x + d y).
struct Orientation {
  int a;
  int b;
  int c;
  int d;

  Cell apply(Cell p) const { return {a * p.x + b * p.y, c * p.x + d * p.y}; }
  Offset apply(Offset o) const { return {a * o.dx + b * o.dy, c * o.dx + d * o.dy}; }
};

inline constexpr std::array<Orientation, 8> kOrientations{{
    {1, 0, 0, 1},
    {0, -1, 1, 0},
    {-1, 0, 0, -1},
    {0, 1, -1, 0},
    {-1, 0, 0, 1},
    {1, 0, 0, -1},
    {0, 1, 1, 0},
    {0, -1, -1, 0},
}};

inline Pattern transform(const Pattern& p, const Orientation& o) {
  std::vector<Cell> out;
  out.reserve(p.size());
  for (const Cell& c : p.cells()) out.push_back(o.apply(c));
  return Pattern(std::move(out), p.generation());
}

/// Chebyshev gap between two boxes; 0 when they overlap or touch.
inline std::int64_t box_gap(const Box& a, const Box& b) {
  return std::max<std::int64_t>({0, a.min_x - b.max_x, b.min_x - a.max_x, a.min_y - b.max_y, b.min_y - a.max_y});
}

inline Box box_union(const Box& a, const Box& b) {
  return {std::min(a.min_x, b.min_x), std::min(a.min_y, b.min_y), std::max(a.max_x, b.max_x), std::max(a.max_y, b.max_y)};
}

/*!
 * Partition live cells into clusters: two cells share a cluster when they
 * are chained by cells at Chebyshev distance <= separation. Clusters come
 * back ordered by their first cell (row-major).
 */
inline std::vector<Pattern> components(const Pattern& p, std::int64_t separation = 2) {
  auto cells = p.cells();
  std::vector<std::size_t> parent(cells.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  };
  auto unite = [&](std::size_t i, std::size_t j) {
    i = find(i);
    j = find(j);
    if (i != j) parent[std::max(i, j)] = std::min(i, j);
  };
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const Cell c = cells[i];
    for (std::int64_t dy = 0; dy <= separation; ++dy) {
      Cell from{dy == 0 ? c.x + 1 : c.x - separation, c.y + dy};
      Cell to{c.x + separation, c.y + dy};
      auto it = std::lower_bound(cells.begin(), cells.end(), from);
      for (; it != cells.end() && !(to < *it); ++it) unite(i, static_cast<std::size_t>(it - cells.begin()));
    }
  }
  std::map<std::size_t, std::vector<Cell>> groups;
  for (std::size_t i = 0; i < cells.size(); ++i) groups[find(i)].push_back(cells[i]);
  std::vector<Pattern> out;
  out.reserve(groups.size());
  for (auto& [root, members] : groups) out.push_back(Pattern::from_sorted(std::move(members), p.generation()));
  return out;
}

// ---------------------------------------------------------------------------
// Emission detection
// ---------------------------------------------------------------------------

/// A ship that detached from its parent and was seen escaping.
struct EmissionEvent {
  std::uint64_t birth_generation = 0;      ///< first generation the ship was tracked as a separate cluster
  std::size_t ship = 0;                    ///< index into the catalog passed to detect_emissions
  Velocity2 ground_velocity;               ///< measured between two sightings one period apart
  Cell first_sighting;                     ///< bounding-box corner at birth_generation
  std::uint64_t confirmed_generation = 0;  ///< generation of the confirming sighting
};

namespace detail {

struct PhaseMatch {
  std::size_t ship;
  std::size_t orientation;
  std::uint64_t phase;
  std::uint64_t period;
  Offset displacement;  ///< per period, in this orientation

  bool same_phase(const PhaseMatch& o) const { return ship == o.ship && orientation == o.orientation && phase == o.phase; }
};

struct CellsLess {
  using is_transparent = void;
  bool operator()(std::span<const Cell> a, std::span<const Cell> b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

using PhaseTable = std::map<std::vector<Cell>, std::vector<PhaseMatch>, CellsLess>;

inline PhaseTable build_phase_table(std::span<const ShipReport> catalog) {
  PhaseTable table;
  for (std::size_t s = 0; s < catalog.size(); ++s) {
    const ShipReport& ship = catalog[s];
    if (ship.kind != ShipKind::ship || ship.phases.size() != ship.period) {
      throw DomainError("catalog entry " + std::to_string(s) + " is not a ship with all its phases");
    }
    for (std::size_t o = 0; o < kOrientations.size(); ++o) {
      for (std::uint64_t k = 0; k < ship.period; ++k) {
        Pattern shape = canonicalize(transform(ship.phases[k], kOrientations[o])).pattern;
        std::vector<Cell> key(shape.cells().begin(), shape.cells().end());
        table[key].push_back({s, o, k, ship.period, kOrientations[o].apply(ship.displacement)});
      }
    }
  }
  return table;
}

struct Sighting {
  std::uint64_t generation;
  Offset position;  ///< bounding-box corner
  Box box;
  std::optional<std::int64_t> body_gap;  ///< empty when there is no body
  const std::vector<PhaseMatch>* matches;
};

struct Track {
  std::uint64_t first_generation = 0;
  Offset first_position;
  std::deque<Sighting> history;  ///< consecutive generations, newest last, at most max period + 1
  bool confirmed = false;
};

inline bool escaping(const std::optional<std::int64_t>& before, const std::optional<std::int64_t>& now) {
  if (!now) return true;
  if (!before) return false;
  return *now > *before;
}

}  // namespace detail

/*!
 * Run `p` for `horizon` generations and report ships that leave it.
 *
 * Each generation the live cells are clustered (Chebyshev separation 2).
 * A cluster equal, up to translation, to some phase of a catalog ship in
 * any of the eight orientations is a ship candidate; the other clusters
 * form the body. Candidates are followed from generation to generation
 * (a ship's bounding box can grow by at most one cell per side per
 * generation). A track is confirmed, once, when it is seen in the same
 * phase one period later, displaced by the catalog displacement, and
 * further from the body's bounding box than before. The reported
 * velocity is the measured displacement over that period.
 */
inline std::vector<EmissionEvent> detect_emissions(const Pattern& p, std::uint64_t horizon, std::span<const ShipReport> catalog) {
  if (catalog.empty()) throw DomainError("emission catalog is empty");
  detail::PhaseTable table = detail::build_phase_table(catalog);
  std::uint64_t min_period = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t max_period = 0;
  for (const auto& s : catalog) {
    min_period = std::min(min_period, s.period);
    max_period = std::max(max_period, s.period);
  }
  if (horizon < min_period) throw DomainError("horizon shorter than one catalog period; nothing can be confirmed");

  std::vector<EmissionEvent> events;
  std::vector<detail::Track> tracks;
  Pattern cur = p;
  for (std::uint64_t t = 0; t <= horizon; ++t) {
    if (t > 0) cur = step(cur);
    const std::uint64_t gen = cur.generation();

    struct Candidate {
      Box box;
      Offset position;
      const std::vector<detail::PhaseMatch>* matches;
    };
    std::vector<Candidate> candidates;
    std::optional<Box> body;
    for (const Pattern& comp : components(cur)) {
      Canonical canon = canonicalize(comp);
      auto it = table.find(canon.pattern.cells());
      Box box = bounding_box(comp);
      if (it != table.end()) {
        candidates.push_back({box, canon.offset, &it->second});
      } else {
        body = body ? box_union(*body, box) : box;
      }
    }

    // Link candidates to tracks last seen one generation ago.
    std::vector<std::vector<std::size_t>> links_of_track(tracks.size());
    std::vector<std::vector<std::size_t>> links_of_cand(candidates.size());
    for (std::size_t ti = 0; ti < tracks.size(); ++ti) {
      const Box& last = tracks[ti].history.back().box;
      Box reach{last.min_x - 1, last.min_y - 1, last.max_x + 1, last.max_y + 1};
      for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
        const Box& b = candidates[ci].box;
        if (b.min_x >= reach.min_x && b.min_y >= reach.min_y && b.max_x <= reach.max_x && b.max_y <= reach.max_y) {
          links_of_track[ti].push_back(ci);
          links_of_cand[ci].push_back(ti);
        }
      }
    }

    std::vector<detail::Track> next_tracks;
    std::vector<bool> cand_taken(candidates.size(), false);
    for (std::size_t ti = 0; ti < tracks.size(); ++ti) {
      if (links_of_track[ti].size() != 1) continue;
      std::size_t ci = links_of_track[ti].front();
      if (links_of_cand[ci].size() != 1) continue;
      cand_taken[ci] = true;
      next_tracks.push_back(std::move(tracks[ti]));
      auto& track = next_tracks.back();
      std::optional<std::int64_t> gap;
      if (body) gap = box_gap(candidates[ci].box, *body);
      track.history.push_back({gen, candidates[ci].position, candidates[ci].box, gap, candidates[ci].matches});
      while (track.history.size() > max_period + 1) track.history.pop_front();
    }
    for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
      if (cand_taken[ci]) continue;
      detail::Track track;
      track.first_generation = gen;
      track.first_position = candidates[ci].position;
      std::optional<std::int64_t> gap;
      if (body) gap = box_gap(candidates[ci].box, *body);
      track.history.push_back({gen, candidates[ci].position, candidates[ci].box, gap, candidates[ci].matches});
      next_tracks.push_back(std::move(track));
    }
    tracks = std::move(next_tracks);

    for (auto& track : tracks) {
      if (track.confirmed) continue;
      const detail::Sighting& now = track.history.back();
      for (const auto& m : *now.matches) {
        if (track.history.size() <= m.period) continue;
        const detail::Sighting& then = track.history[track.history.size() - 1 - m.period];
        bool same_phase = std::any_of(then.matches->begin(), then.matches->end(), [&](const auto& o) { return o.same_phase(m); });
        if (!same_phase) continue;
        Offset moved = now.position - then.position;
        if (moved != m.displacement || !detail::escaping(then.body_gap, now.body_gap)) continue;

        auto period = static_cast<std::int64_t>(m.period);
        EmissionEvent e;
        e.birth_generation = track.first_generation;
        e.ship = m.ship;
        e.ground_velocity = {Rational(moved.dx, period), Rational(moved.dy, period)};
        e.first_sighting = {track.first_position.dx, track.first_position.dy};
        e.confirmed_generation = gen;
        events.push_back(e);
        track.confirmed = true;
        break;
      }
    }
  }
  return events;
}

}  // namespace lifeframe
