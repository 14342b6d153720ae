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
#include <cstdio>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lifeframe/catalog.hpp"
#include "lifeframe/chess_oracle.hpp"
#include "lifeframe/frame_kinematics.hpp"
#include "lifeframe/ship_detector.hpp"

namespace lifeframe::verify {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Something measured that disagrees with a published value. Reported, never a failure.
struct Finding {
  std::string name;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  std::vector<Finding> findings;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }
  void check(std::string name, bool ok, std::string detail) { checks.push_back({std::move(name), ok, std::move(detail)}); }
};

inline constexpr std::string_view kSuites[] = {"catalog", "parallel", "oblique", "oracle", "deviation", "emissions"};

namespace detail {

inline std::string vec_str(const Velocity2& v) { return "(" + v.vx.str() + "," + v.vy.str() + ")"; }

inline std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace detail

/// Re-measure every catalog entry that declares its motion.
inline SuiteReport catalog_suite() {
  SuiteReport r{"catalog", {}, {}};
  for (const auto& e : catalog()) {
    if (!e.expected) continue;
    Detection d = detect_ship(e.pattern(), 64);
    const auto* rep = std::get_if<ShipReport>(&d);
    bool ok = rep != nullptr && rep->period == e.expected->period && rep->displacement == e.expected->displacement;
    std::string got = rep ? "P=" + std::to_string(rep->period) + " d=(" + std::to_string(rep->displacement.dx) + "," +
                                std::to_string(rep->displacement.dy) + ")"
                          : std::string("not periodic");
    r.check(std::string(e.name), ok, got);
  }
  return r;
}

inline SuiteReport parallel_suite() {
  SuiteReport r{"parallel", {}, {}};
  const Rational half(1, 2);
  const Rational two_fifths(2, 5);
  Rational same = compose_parallel(half, half);
  r.check("compose(1/2,1/2)", same == Rational(3, 4), same.str() + " expected 3/4");
  Rational ship = compose_parallel(two_fifths, half);
  r.check("compose(2/5,1/2)", ship == Rational(7, 10), ship.str() + " expected 7/10");
  Rational g = galilean(two_fifths, half);
  Rational l = lorentz(two_fifths, half);
  r.check("comparison laws at (2/5,1/2)", g == Rational(9, 10) && l == Rational(3, 4),
          "galilean " + g.str() + " expected 9/10, lorentz " + l.str() + " expected 3/4");
  return r;
}

inline SuiteReport oblique_suite() {
  SuiteReport r{"oblique", {}, {}};
  CompositionInput sample{Rational(1, 4), {Rational(0), Rational(1, 3)}};
  CompositionResult res = compose_oblique(sample);
  bool magnitudes = abs(res.v12.vx) == Rational(1, 4) && abs(res.v12.vy) == Rational(1, 4);
  r.check("sample v1=1/4 bullet=(0,1/3) magnitudes", magnitudes, "v12=" + detail::vec_str(res.v12) + " expected |.|=(1/4,1/4)");

  std::string tan = res.tan_chi && !res.tan_chi->vertical() ? res.tan_chi->value->str() : "vertical";
  r.findings.push_back({"published-sample-orientation",
                        "equations give v12=" + detail::vec_str(res.v12) + ", tan chi=" + tan + " (" +
                            detail::fixed(direction_degrees(res.v12), 1) +
                            " deg); the published sample lists v12x=-1/4 and chi=135 deg. Sign convention for the "
                            "carrier's course is undefined there; equations are followed as printed."});

  Velocity2 embryo = invert_oblique(sample.v1, res.v12);
  r.check("sample inverse", embryo == sample.bullet, "embryo=" + detail::vec_str(embryo) + " expected (0,1/3)");

  // Reduction and inverse over a grid of small-denominator velocities.
  std::size_t cases = 0;
  std::size_t reduction_bad = 0;
  std::size_t inverse_bad = 0;
  const std::int64_t m = 12;
  for (std::int64_t a = 0; a < m; ++a) {
    for (std::int64_t b = -m; b <= m; ++b) {
      for (std::int64_t c = -m; c <= m; ++c) {
        Rational v1(a, m);
        Velocity2 bullet{Rational(b, m), Rational(c, m)};
        ++cases;
        CompositionResult out = compose_oblique({v1, bullet});
        if (invert_oblique(v1, out.v12) != bullet) ++inverse_bad;
        if (c == 0 && b >= 0 && (out.v12.vx != compose_parallel(v1, bullet.vx) || out.v12.vy != Rational(0))) ++reduction_bad;
      }
    }
  }
  r.check("reduction to parallel law", reduction_bad == 0, std::to_string(reduction_bad) + " mismatches");
  r.check("inverse round trip", inverse_bad == 0, std::to_string(inverse_bad) + " mismatches over " + std::to_string(cases) + " cases");

  Velocity2 polar = polar_components(Rational(5, 12), Tangent::of(Rational(3, 4)));
  r.check("polar 5/12 at tan 3/4", polar == Velocity2{Rational(1, 3), Rational(1, 4)}, detail::vec_str(polar) + " expected (1/3,1/4)");
  return r;
}

inline SuiteReport oracle_suite(std::uint64_t max_moves = 48) {
  SuiteReport r{"oracle", {}, {}};
  chess::OracleReport rep = chess::exhaustive_check(max_moves);
  r.check("token replay vs composition law", rep.counterexamples.empty(),
          std::to_string(rep.counterexamples.size()) + " counterexamples / P <= " + std::to_string(max_moves) + " (" +
              std::to_string(rep.triples_checked) + " triples)");
  return r;
}

inline SuiteReport deviation_suite(const Rational& step = Rational(1, 1000)) {
  SuiteReport r{"deviation", {}, {}};
  std::size_t identity_bad = 0;
  const std::int64_t m = 40;
  for (std::int64_t i = 0; i <= m; ++i) {
    for (std::int64_t j = 0; j <= m; ++j) {
      Rational a(i, m);
      Rational b(j, m);
      if (deviation(a, b).delta != lorentz(a, b) - compose_parallel(a, b)) ++identity_bad;
    }
  }
  r.check("delta = lorentz - life", identity_bad == 0, std::to_string(identity_bad) + " mismatches on the 1/40 grid");

  Rational at_half = deviation(Rational(1, 2), Rational(1, 2)).delta;
  DeviationScan scan = max_deviation_scan(step);
  r.check("scan maximum >= delta(1/2,1/2)", scan.delta >= at_half,
          "max " + scan.delta.str() + " vs " + at_half.str());
  r.check("scan maximum consistent with deviation()", deviation(scan.v1, scan.v2).delta == scan.delta,
          "at v1=" + scan.v1.str() + " v2=" + scan.v2.str());

  const Rational bound(1, 20);
  std::string verdict = scan.delta > bound ? "exceeds" : "does not exceed";
  r.findings.push_back({"deviation-bound", "max delta on the " + step.str() + " grid = " + scan.delta.str() + " (~" +
                                               detail::fixed(scan.delta.to_double(), 6) + ") at v1=" + scan.v1.str() +
                                               " v2=" + scan.v2.str() + "; " + verdict + " the published bound 0.05 = 1/20"});
  return r;
}

inline SuiteReport emissions_suite(std::uint64_t horizon = 300) {
  SuiteReport r{"emissions", {}, {}};
  std::vector<ShipReport> ships = emission_catalog();
  std::vector<EmissionEvent> events = detect_emissions(catalog_entry("gosper_gun").pattern(), horizon, ships);
  r.check("gosper gun emits >= 9 ships in " + std::to_string(horizon) + " generations", events.size() >= 9,
          std::to_string(events.size()) + " events");

  bool all_quarter = !events.empty();
  bool identity = !events.empty();
  for (const auto& e : events) {
    all_quarter = all_quarter && abs(e.ground_velocity.vx) == Rational(1, 4) && abs(e.ground_velocity.vy) == Rational(1, 4);
    identity = identity && invert_oblique(Rational(0), e.ground_velocity) == e.ground_velocity &&
               compose_oblique({Rational(0), e.ground_velocity}).v12 == e.ground_velocity;
  }
  r.check("measured velocities are (+-1/4,+-1/4)", all_quarter,
          events.empty() ? "no events" : "first " + detail::vec_str(events.front().ground_velocity));
  r.check("carrier at rest: composition is the identity", identity, "invert_oblique(0, v) == v for every event");

  bool stride = events.size() >= 2;
  for (std::size_t i = 1; i < events.size(); ++i) stride = stride && events[i].birth_generation - events[i - 1].birth_generation == 30;
  r.check("births every 30 generations", stride,
          events.empty() ? "no events" : "first birth " + std::to_string(events.front().birth_generation));
  return r;
}

inline SuiteReport run_suite(std::string_view name) {
  if (name == "catalog") return catalog_suite();
  if (name == "parallel") return parallel_suite();
  if (name == "oblique") return oblique_suite();
  if (name == "oracle") return oracle_suite();
  if (name == "deviation") return deviation_suite();
  if (name == "emissions") return emissions_suite();
  throw DomainError("unknown suite '" + std::string(name) + "'");
}

}  // namespace lifeframe::verify
