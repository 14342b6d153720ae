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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lifeframe/error.hpp"
#include "lifeframe/life_engine.hpp"
#include "lifeframe/pattern_io.hpp"
#include "lifeframe/ship_detector.hpp"

namespace lifeframe {

struct ExpectedMotion {
  std::uint64_t period;
  Offset displacement;
};

struct CatalogEntry {
  std::string_view name;
  std::string_view rle;
  std::optional<ExpectedMotion> expected;
  std::string_view note;

  Pattern pattern() const { return parse_rle(rle).pattern(); }
};

// Canonical RLE for each entry, so emit_rle(parse_rle(rle)) == rle.
inline constexpr std::string_view kGliderRle = "x = 3, y = 3, rule = B3/S23\nbob$2bo$3o!";
inline constexpr std::string_view kLwssRle = "x = 5, y = 4, rule = B3/S23\nbo2bo$o4b$o3bo$4ob!";
inline constexpr std::string_view kMwssRle = "x = 6, y = 5, rule = B3/S23\n3bo2b$bo3bo$o5b$o4bo$5ob!";
inline constexpr std::string_view kHwssRle = "x = 7, y = 5, rule = B3/S23\n3b2o2b$bo4bo$o6b$o5bo$6ob!";
inline constexpr std::string_view kBlockRle = "x = 2, y = 2, rule = B3/S23\n2o$2o!";
inline constexpr std::string_view kBlinkerRle = "x = 3, y = 1, rule = B3/S23\n3o!";
inline constexpr std::string_view kBeehiveRle = "x = 4, y = 3, rule = B3/S23\nb2ob$o2bo$b2ob!";
inline constexpr std::string_view kEaterRle = "x = 4, y = 4, rule = B3/S23\n2o2b$obob$2bob$2b2o!";
inline constexpr std::string_view kGosperGunRle =
    "x = 36, y = 9, rule = B3/S23\n"
    "24bo11b$22bobo11b$12b2o6b2o12b2o$11bo3bo4b2o12b2o$2o8bo5bo3b2o14b$2o8b\n"
    "o3bob2o4bobo11b$10bo5bo7bo11b$11bo3bo20b$12b2o22b!";
// Gosper gun with an eater 40 right and 26 down from the gun's corner, which
// absorbs every glider: a period-30 oscillator after the first glider lands.
inline constexpr std::string_view kGunEaterRle =
    "x = 44, y = 30, rule = B3/S23\n"
    "24bo19b$22bobo19b$12b2o6b2o12b2o8b$11bo3bo4b2o12b2o8b$2o8bo5bo3b2o22b$\n"
    "2o8bo3bob2o4bobo19b$10bo5bo7bo19b$11bo3bo28b$12b2o30b18$40b2o2b$40bobo\n"
    "b$42bob$42b2o!";

inline std::span<const CatalogEntry> catalog() {
  static const CatalogEntry entries[] = {
      {"glider", kGliderRle, ExpectedMotion{4, {1, 1}}, "diagonal ship, one cell right and down every 4 generations"},
      {"lwss", kLwssRle, ExpectedMotion{4, {-2, 0}}, "lightweight spaceship, orthogonal, speed 1/2"},
      {"mwss", kMwssRle, ExpectedMotion{4, {-2, 0}}, "middleweight spaceship, orthogonal, speed 1/2"},
      {"hwss", kHwssRle, ExpectedMotion{4, {-2, 0}}, "heavyweight spaceship, orthogonal, speed 1/2"},
      {"block", kBlockRle, ExpectedMotion{1, {0, 0}}, "still life"},
      {"blinker", kBlinkerRle, ExpectedMotion{2, {0, 0}}, "period-2 oscillator"},
      {"beehive", kBeehiveRle, ExpectedMotion{1, {0, 0}}, "still life"},
      {"eater", kEaterRle, ExpectedMotion{1, {0, 0}}, "eater 1, absorbs gliders"},
      {"gosper_gun", kGosperGunRle, std::nullopt, "stationary gun, one glider every 30 generations"},
      {"gun_eater", kGunEaterRle, std::nullopt, "Gosper gun whose gliders are absorbed by an eater"},
  };
  return entries;
}

inline const CatalogEntry& catalog_entry(std::string_view name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return e;
  }
  throw DomainError("no catalog entry named '" + std::string(name) + "'");
}

/// Names of the entries used as emission templates.
inline constexpr std::string_view kEmissionShips[] = {"glider", "lwss", "mwss", "hwss"};

/// Measured ShipReports for the emission templates, in kEmissionShips order.
inline std::vector<ShipReport> emission_catalog() {
  std::vector<ShipReport> out;
  for (auto name : kEmissionShips) {
    Detection d = detect_ship(catalog_entry(name).pattern(), 16);
    if (!std::holds_alternative<ShipReport>(d)) throw Error("catalog ship '" + std::string(name) + "' is not periodic");
    out.push_back(std::get<ShipReport>(std::move(d)));
  }
  return out;
}

/*!
 * A columns x rows grid of gun_eater copies, 64 cells apart horizontally
 * and 48 vertically. The copies never interact; 24 copies start at 1032
 * cells and stay near that population.
 */
inline Pattern gun_battery(std::int64_t columns, std::int64_t rows) {
  Pattern unit = catalog_entry("gun_eater").pattern();
  std::vector<Cell> cells;
  cells.reserve(unit.size() * static_cast<std::size_t>(columns * rows));
  for (std::int64_t j = 0; j < rows; ++j) {
    for (std::int64_t i = 0; i < columns; ++i) {
      for (const Cell& c : unit.cells()) cells.push_back({c.x + 64 * i, c.y + 48 * j});
    }
  }
  return Pattern(std::move(cells));
}

}  // namespace lifeframe
