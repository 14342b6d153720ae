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

// Measures the gliders leaving a Gosper gun, then asks what a carrier
// moving at 1/4 along +x would have to launch to produce the same ground
// velocities.

#include <iostream>

#include "lifeframe/lifeframe.hpp"

int main() {
  using namespace lifeframe;

  auto ships = emission_catalog();
  auto events = detect_emissions(catalog_entry("gosper_gun").pattern(), 120, ships);

  const Rational carrier(1, 4);
  for (const auto& e : events) {
    Velocity2 embryo = invert_oblique(carrier, e.ground_velocity);
    CompositionResult back = compose_oblique({carrier, embryo});
    std::cout << "birth " << e.birth_generation << ": ground (" << e.ground_velocity.vx << ", " << e.ground_velocity.vy
              << "), carrier-frame (" << embryo.vx << ", " << embryo.vy << "), recomposed ("
              << back.v12.vx << ", " << back.v12.vy << ")\n";
  }

  CompositionResult sample = compose_oblique({carrier, {Rational(0), Rational(1, 3)}});
  std::cout << "bullet (0, 1/3) from a 1/4 carrier lands at (" << sample.v12.vx << ", " << sample.v12.vy << ")\n";
  return 0;
}
