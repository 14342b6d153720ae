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
#include <compare>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "lifeframe/error.hpp"

namespace lifeframe {

/// A live cell. x grows rightward, y grows downward.
struct Cell {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
  // Row-major: rows first, then columns within a row.
  friend std::strong_ordering operator<=>(const Cell& a, const Cell& b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
};

struct Offset {
  std::int64_t dx = 0;
  std::int64_t dy = 0;

  friend bool operator==(const Offset&, const Offset&) = default;
  friend Offset operator-(const Offset& a, const Offset& b) { return {a.dx - b.dx, a.dy - b.dy}; }
  friend Offset operator+(const Offset& a, const Offset& b) { return {a.dx + b.dx, a.dy + b.dy}; }
};

/// Inclusive bounding box.
struct Box {
  std::int64_t min_x = 0;
  std::int64_t min_y = 0;
  std::int64_t max_x = 0;
  std::int64_t max_y = 0;

  std::int64_t width() const { return max_x - min_x + 1; }
  std::int64_t height() const { return max_y - min_y + 1; }

  friend bool operator==(const Box&, const Box&) = default;
};

/*!
 * A finite set of live cells on the unbounded plane plus its generation
 * counter. Cells are kept sorted row-major and duplicate-free.
 */
class Pattern {
 public:
  Pattern() = default;

  explicit Pattern(std::vector<Cell> cells, std::uint64_t generation = 0)
      : cells_(std::move(cells)), generation_(generation) {
    std::sort(cells_.begin(), cells_.end());
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
  }

  std::span<const Cell> cells() const noexcept { return cells_; }
  std::uint64_t generation() const noexcept { return generation_; }
  bool empty() const noexcept { return cells_.empty(); }
  std::size_t size() const noexcept { return cells_.size(); }

  bool contains(Cell c) const { return std::binary_search(cells_.begin(), cells_.end(), c); }

  Pattern with_generation(std::uint64_t generation) const {
    Pattern p = *this;
    p.generation_ = generation;
    return p;
  }

  /// Cell-set equality, ignoring the generation counter.
  bool same_cells(const Pattern& other) const { return cells_ == other.cells_; }

  friend bool operator==(const Pattern&, const Pattern&) = default;

  /// Adopt cells already sorted and unique. Internal fast path for the stepper.
  static Pattern from_sorted(std::vector<Cell> cells, std::uint64_t generation) {
    Pattern p;
    p.cells_ = std::move(cells);
    p.generation_ = generation;
    return p;
  }

 private:
  std::vector<Cell> cells_;
  std::uint64_t generation_ = 0;
};

inline std::size_t population(const Pattern& p) { return p.size(); }

inline Box bounding_box(const Pattern& p) {
  if (p.empty()) throw DomainError("bounding box of an empty pattern");
  auto cells = p.cells();
  Box box{cells.front().x, cells.front().y, cells.front().x, cells.back().y};
  for (const Cell& c : cells) {
    box.min_x = std::min(box.min_x, c.x);
    box.max_x = std::max(box.max_x, c.x);
  }
  return box;
}

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("cell coordinate overflow");
  return out;
}

}  // namespace detail

inline Pattern translate(const Pattern& p, Offset by) {
  std::vector<Cell> out;
  out.reserve(p.size());
  for (const Cell& c : p.cells()) out.push_back({detail::checked_add(c.x, by.dx), detail::checked_add(c.y, by.dy)});
  // Translation preserves row-major order.
  return Pattern::from_sorted(std::move(out), p.generation());
}

struct Canonical {
  Pattern pattern;
  Offset offset;  ///< what was subtracted: original = pattern + offset
};

/// Move the bounding-box corner to (0,0), returning the removed offset.
inline Canonical canonicalize(const Pattern& p) {
  if (p.empty()) throw DomainError("cannot canonicalize an empty pattern");
  Box box = bounding_box(p);
  Offset off{box.min_x, box.min_y};
  return {translate(p, {-off.dx, -off.dy}), off};
}

/*!
 * One B3/S23 generation.
 *
 * Row sweep over the sorted cell list: for each candidate output row the
 * three input rows above, on, and below it are merged, and a sliding
 * window of width three over the merged columns gives each candidate's
 * neighbourhood count (live centre included). A count of 3 gives a live
 * cell; a count of 4 keeps the centre's current state.
 */
inline Pattern step(const Pattern& p) {
  constexpr auto lo = std::numeric_limits<std::int64_t>::min();
  constexpr auto hi = std::numeric_limits<std::int64_t>::max();

  auto cells = p.cells();
  if (cells.empty()) return Pattern::from_sorted({}, p.generation() + 1);
  for (const Cell& c : cells) {
    if (c.x == lo || c.x == hi || c.y == lo || c.y == hi) throw OverflowError("cell coordinate overflow");
  }

  struct Row {
    std::int64_t y;
    std::size_t begin;
    std::size_t end;
  };
  std::vector<Row> rows;
  for (std::size_t i = 0; i < cells.size();) {
    std::size_t j = i;
    while (j < cells.size() && cells[j].y == cells[i].y) ++j;
    rows.push_back({cells[i].y, i, j});
    i = j;
  }

  std::vector<Cell> next;
  next.reserve(cells.size() + cells.size() / 4 + 8);
  std::vector<std::int64_t> above_below;
  std::vector<std::int64_t> merged;

  auto xs_of = [&](const Row* row) {
    if (row == nullptr) return std::span<const Cell>{};
    return cells.subspan(row->begin, row->end - row->begin);
  };

  std::size_t first = 0;  // first row with y >= r - 1
  bool have_last = false;
  std::int64_t last_r = 0;
  for (const Row& source : rows) {
    for (std::int64_t r = source.y - 1; r <= source.y + 1; ++r) {
      if (have_last && r <= last_r) continue;
      have_last = true;
      last_r = r;

      while (first < rows.size() && rows[first].y < r - 1) ++first;
      const Row* up = nullptr;
      const Row* mid = nullptr;
      const Row* down = nullptr;
      for (std::size_t k = first; k < rows.size() && rows[k].y <= r + 1; ++k) {
        if (rows[k].y == r - 1) up = &rows[k];
        else if (rows[k].y == r) mid = &rows[k];
        else down = &rows[k];
      }
      auto a = xs_of(up);
      auto b = xs_of(mid);
      auto c = xs_of(down);

      above_below.clear();
      std::size_t ia = 0;
      std::size_t ic = 0;
      while (ia < a.size() || ic < c.size()) {
        if (ic == c.size() || (ia < a.size() && a[ia].x <= c[ic].x)) above_below.push_back(a[ia++].x);
        else above_below.push_back(c[ic++].x);
      }
      merged.clear();
      std::size_t iu = 0;
      std::size_t ib = 0;
      while (iu < above_below.size() || ib < b.size()) {
        if (ib == b.size() || (iu < above_below.size() && above_below[iu] <= b[ib].x)) merged.push_back(above_below[iu++]);
        else merged.push_back(b[ib++].x);
      }

      // Candidates are every column within one of a merged entry, ascending.
      std::size_t win_lo = 0;
      std::size_t win_hi = 0;
      std::size_t centre = 0;
      bool have_cand = false;
      std::int64_t last_x = 0;
      for (std::int64_t m : merged) {
        for (std::int64_t x = m - 1; x <= m + 1; ++x) {
          if (have_cand && x <= last_x) continue;
          have_cand = true;
          last_x = x;
          while (win_lo < merged.size() && merged[win_lo] < x - 1) ++win_lo;
          if (win_hi < win_lo) win_hi = win_lo;
          while (win_hi < merged.size() && merged[win_hi] <= x + 1) ++win_hi;
          auto count = win_hi - win_lo;
          if (count != 3 && count != 4) continue;
          while (centre < b.size() && b[centre].x < x) ++centre;
          bool alive = centre < b.size() && b[centre].x == x;
          if (count == 3 || alive) next.push_back({x, r});
        }
      }
    }
  }
  return Pattern::from_sorted(std::move(next), p.generation() + 1);
}

inline Pattern step_n(const Pattern& p, std::uint64_t n) {
  Pattern cur = p;
  for (std::uint64_t i = 0; i < n; ++i) cur = step(cur);
  return cur;
}

}  // namespace lifeframe
