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

// Test-only reference evolver: a plain dense grid with a dead border wide
// enough that nothing can reach the edge in the requested generations.
// Shares no code with the sparse stepper.

#include <cstdint>
#include <random>
#include <vector>

#include "lifeframe/life_engine.hpp"

namespace lifeframe::dense {

class DenseGrid {
 public:
  DenseGrid(const Pattern& p, int generations) {
    if (p.empty()) {
      width_ = height_ = 1;
      origin_x_ = origin_y_ = 0;
      cells_.assign(1, 0);
      return;
    }
    Box box = bounding_box(p);
    int margin = generations + 2;
    origin_x_ = box.min_x - margin;
    origin_y_ = box.min_y - margin;
    width_ = static_cast<int>(box.width()) + 2 * margin;
    height_ = static_cast<int>(box.height()) + 2 * margin;
    cells_.assign(static_cast<std::size_t>(width_) * height_, 0);
    for (const Cell& c : p.cells()) at(static_cast<int>(c.x - origin_x_), static_cast<int>(c.y - origin_y_)) = 1;
  }

  void advance() {
    std::vector<std::uint8_t> next(cells_.size(), 0);
    for (int y = 1; y + 1 < height_; ++y) {
      for (int x = 1; x + 1 < width_; ++x) {
        int n = 0;
        for (int dy = -1; dy <= 1; ++dy)
          for (int dx = -1; dx <= 1; ++dx)
            if (dx != 0 || dy != 0) n += at(x + dx, y + dy);
        bool alive = at(x, y) != 0;
        next[static_cast<std::size_t>(y) * width_ + x] = (n == 3 || (alive && n == 2)) ? 1 : 0;
      }
    }
    cells_.swap(next);
  }

  std::vector<Cell> live() const {
    std::vector<Cell> out;
    for (int y = 0; y < height_; ++y)
      for (int x = 0; x < width_; ++x)
        if (cells_[static_cast<std::size_t>(y) * width_ + x]) out.push_back({x + origin_x_, y + origin_y_});
    return out;
  }

 private:
  std::uint8_t& at(int x, int y) { return cells_[static_cast<std::size_t>(y) * width_ + x]; }

  std::int64_t origin_x_ = 0;
  std::int64_t origin_y_ = 0;
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> cells_;
};

/// Uniformly random soup in a size x size box, each cell alive with probability density.
inline Pattern random_soup(std::mt19937_64& rng, int size, double density = 0.5) {
  std::bernoulli_distribution alive(density);
  std::vector<Cell> cells;
  for (int y = 0; y < size; ++y)
    for (int x = 0; x < size; ++x)
      if (alive(rng)) cells.push_back({x, y});
  return Pattern(std::move(cells));
}

}  // namespace lifeframe::dense
