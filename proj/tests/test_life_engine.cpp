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

#include "gtest/gtest.h"

#include <limits>
#include <random>

#include "dense_oracle.hpp"
#include "lifeframe/life_engine.hpp"

using namespace lifeframe;

namespace {

// The four glider phases, copied cell by cell from the published grid figure.
const Pattern kGlider0({{1, 0}, {2, 1}, {0, 2}, {1, 2}, {2, 2}});
const Pattern kGlider1({{0, 1}, {2, 1}, {1, 2}, {2, 2}, {1, 3}});
const Pattern kBlock({{0, 0}, {1, 0}, {0, 1}, {1, 1}});

}  // namespace

TEST(pattern, sorted_and_deduplicated) {
  Pattern p({{2, 0}, {0, 1}, {2, 0}, {1, 0}});
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(p.cells()[0], (Cell{1, 0}));
  EXPECT_EQ(p.cells()[1], (Cell{2, 0}));
  EXPECT_EQ(p.cells()[2], (Cell{0, 1}));
  EXPECT_TRUE(p.contains({0, 1}));
  EXPECT_FALSE(p.contains({1, 1}));
}

TEST(step, glider_phase_0_to_1) {
  Pattern next = step(kGlider0);
  EXPECT_TRUE(next.same_cells(kGlider1));
  EXPECT_EQ(next.generation(), 1u);
}

TEST(step, empty_stays_empty) {
  Pattern next = step(Pattern{});
  EXPECT_TRUE(next.empty());
  EXPECT_EQ(next.generation(), 1u);
}

TEST(step, blinker_rotates) {
  Pattern vertical({{1, 0}, {1, 1}, {1, 2}});
  Pattern horizontal({{0, 1}, {1, 1}, {2, 1}});
  EXPECT_TRUE(step(vertical).same_cells(horizontal));
  EXPECT_TRUE(step(horizontal).same_cells(vertical));
}

TEST(step, lonely_cells_die) {
  EXPECT_TRUE(step(Pattern({{0, 0}})).empty());
  EXPECT_TRUE(step(Pattern({{0, 0}, {1, 0}})).empty());
}

TEST(step, negative_coordinates) {
  Pattern blinker({{-5, -1}, {-5, 0}, {-5, 1}});
  EXPECT_TRUE(step(blinker).same_cells(Pattern({{-6, 0}, {-5, 0}, {-4, 0}})));
}

TEST(step, overflow_is_reported) {
  const auto hi = std::numeric_limits<std::int64_t>::max();
  EXPECT_THROW(step(Pattern({{hi, 0}})), OverflowError);
  EXPECT_THROW(step(Pattern({{0, std::numeric_limits<std::int64_t>::min()}})), OverflowError);
  EXPECT_NO_THROW(step(Pattern({{hi - 1, hi - 1}})));
}

TEST(step_n, glider_moves_diagonally) {
  Pattern four = step_n(kGlider0, 4);
  EXPECT_TRUE(four.same_cells(translate(kGlider0, {1, 1})));
  EXPECT_EQ(four.generation(), 4u);
}

TEST(step_n, zero_is_identity) { EXPECT_EQ(step_n(kGlider0, 0), kGlider0); }

TEST(step_n, block_is_fixed) { EXPECT_TRUE(step_n(kBlock, 1000).same_cells(kBlock)); }

TEST(canonicalize, cases) {
  Canonical single = canonicalize(Pattern({{5, 7}}));
  EXPECT_TRUE(single.pattern.same_cells(Pattern({{0, 0}})));
  EXPECT_EQ(single.offset, (Offset{5, 7}));

  Canonical g = canonicalize(kGlider0);
  EXPECT_TRUE(g.pattern.same_cells(kGlider0));
  EXPECT_EQ(g.offset, (Offset{0, 0}));

  Canonical moved = canonicalize(step_n(kGlider0, 4));
  EXPECT_TRUE(moved.pattern.same_cells(g.pattern));
  EXPECT_EQ(moved.offset - g.offset, (Offset{1, 1}));

  EXPECT_THROW(canonicalize(Pattern{}), DomainError);
}

TEST(population_and_box, cases) {
  EXPECT_EQ(population(kGlider0), 5u);
  EXPECT_EQ(population(Pattern{}), 0u);
  EXPECT_EQ(bounding_box(kBlock), (Box{0, 0, 1, 1}));
  EXPECT_EQ(bounding_box(kGlider1), (Box{0, 1, 2, 3}));
  EXPECT_THROW(bounding_box(Pattern{}), DomainError);
}

TEST(properties, light_speed_locality_and_translation) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> shift(-1'000'000, 1'000'000);
  for (int i = 0; i < 200; ++i) {
    Pattern p = dense::random_soup(rng, 10, 0.4);
    Pattern next = step(p);
    for (const Cell& c : next.cells()) {
      bool near = false;
      for (std::int64_t dy = -1; dy <= 1 && !near; ++dy)
        for (std::int64_t dx = -1; dx <= 1 && !near; ++dx) near = p.contains({c.x + dx, c.y + dy});
      ASSERT_TRUE(near) << "cell appeared out of reach at (" << c.x << "," << c.y << ")";
    }
    Offset v{shift(rng), shift(rng)};
    ASSERT_TRUE(step(translate(p, v)).same_cells(translate(next, v)));
  }
}

TEST(properties, agrees_with_dense_oracle) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    Pattern p = dense::random_soup(rng, 12);
    dense::DenseGrid grid(p, 10);
    Pattern cur = p;
    for (int g = 0; g < 10; ++g) {
      cur = step(cur);
      grid.advance();
      ASSERT_TRUE(cur.same_cells(Pattern(grid.live()))) << "seed " << i << " generation " << g + 1;
    }
  }
}
