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

// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "dense_oracle.hpp"
#include "lifeframe/catalog.hpp"
#include "lifeframe/chess_oracle.hpp"
#include "lifeframe/cli.hpp"
#include "lifeframe/frame_kinematics.hpp"
#include "lifeframe/pattern_io.hpp"
#include "lifeframe/ship_detector.hpp"

using namespace lifeframe;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok;
  std::string detail;
};

int failures = 0;

double seconds_since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

void report(const char* id, const char* title, const std::function<Outcome()>& body) {
  Outcome o{false, ""};
  auto start = Clock::now();
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double s = seconds_since(start);
  if (!o.ok) ++failures;
  std::printf("[%s] %s %s -- %s (%.3f s)\n", o.ok ? "PASS" : "FAIL", id, title, o.detail.c_str(), s);
  std::fflush(stdout);
}

Rational random_unit(std::mt19937_64& rng) {
  std::int64_t den = std::uniform_int_distribution<std::int64_t>(1, 1000)(rng);
  return Rational(std::uniform_int_distribution<std::int64_t>(0, den)(rng), den);
}

Rational random_signed_unit(std::mt19937_64& rng) {
  Rational r = random_unit(rng);
  return std::bernoulli_distribution(0.5)(rng) ? -r : r;
}

std::string ms(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f ms", s * 1000);
  return buf;
}

}  // namespace

int main() {
  report("AC1", "worked numbers", [] {
    auto start = Clock::now();
    bool ok = compose_parallel(Rational(1, 2), Rational(1, 2)) == Rational(3, 4) &&
              compose_parallel(Rational(2, 5), Rational(1, 2)) == Rational(7, 10) &&
              galilean(Rational(2, 5), Rational(1, 2)) == Rational(9, 10) && lorentz(Rational(2, 5), Rational(1, 2)) == Rational(3, 4);
    double s = seconds_since(start);
    return Outcome{ok && s < 1e-3, "3/4, 7/10, 9/10, 3/4 exact in " + ms(s) + " (limit 1 ms)"};
  });

  report("AC2", "oblique sample and reported orientation finding", [] {
    CompositionResult r = compose_oblique({Rational(1, 4), {Rational(0), Rational(1, 3)}});
    bool magnitudes = abs(r.v12.vx) == Rational(1, 4) && abs(r.v12.vy) == Rational(1, 4);
    std::ostringstream out;
    int code = cli::cmd_verify({"oblique", cli::Format::table}, out);
    bool finding = out.str().find("FINDING oblique: published-sample-orientation") != std::string::npos;
    return Outcome{magnitudes && finding && code == 0,
                   "v12=(" + r.v12.vx.str() + "," + r.v12.vy.str() + "), finding " + (finding ? "reported" : "missing")};
  });

  report("AC3", "deviation identity", [] {
    std::mt19937_64 rng(3);
    int bad = 0;
    for (int i = 0; i < 10'000; ++i) {
      Rational a = random_unit(rng);
      Rational b = random_unit(rng);
      if (deviation(a, b).delta != lorentz(a, b) - compose_parallel(a, b)) ++bad;
    }
    return Outcome{bad == 0, std::to_string(bad) + " mismatches over 10000 random pairs"};
  });

  report("AC4", "deviation maximum", [] {
    auto start = Clock::now();
    DeviationScan scan = max_deviation_scan(Rational(1, 1000));
    double s = seconds_since(start);
    Rational half = deviation(Rational(1, 2), Rational(1, 2)).delta;
    bool consistent = scan.delta >= half && half == Rational(1, 20) && deviation(scan.v1, scan.v2).delta == scan.delta;
    char approx[32];
    std::snprintf(approx, sizeof approx, "%.7f", scan.delta.to_double());
    std::string verdict = scan.delta > Rational(1, 20) ? "exceeds 0.05" : "within 0.05";
    return Outcome{consistent && s < 5.0, "max " + scan.delta.str() + " ~" + approx + " at (" + scan.v1.str() + "," +
                                              scan.v2.str() + "), " + verdict + ", " + ms(s) + " (limit 5 s)"};
  });

  report("AC5", "glider kinematics", [] {
    Pattern g = catalog_entry("glider").pattern();
    auto start = Clock::now();
    Detection d = detect_ship(g, 64);
    double s = seconds_since(start);
    const auto* r = std::get_if<ShipReport>(&d);
    bool ok = r && r->period == 4 && r->displacement == Offset{1, 1} && r->velocity == Velocity2{Rational(1, 4), Rational(1, 4)} &&
              r->speed == Rational(1, 4);
    return Outcome{ok && s < 0.05, std::string(ok ? "P=4 d=(1,1) v=(1/4,1/4) speed=1/4" : "wrong report") + " in " + ms(s) +
                                       " (limit 50 ms)"};
  });

  report("AC6", "LWSS kinematics", [] {
    Detection d = detect_ship(catalog_entry("lwss").pattern(), 64);
    const auto* r = std::get_if<ShipReport>(&d);
    bool ok = r && r->speed == Rational(1, 2) && r->displacement.dy == 0 && r->displacement.dx != 0;
    return Outcome{ok, r ? "speed " + r->speed.str() + " d=(" + std::to_string(r->displacement.dx) + "," +
                               std::to_string(r->displacement.dy) + ")"
                         : std::string("not periodic")};
  });

  report("AC7", "Gosper gun emission pipeline", [] {
    std::vector<ShipReport> ships = emission_catalog();
    auto events = detect_emissions(catalog_entry("gosper_gun").pattern(), 300, ships);
    bool ok = events.size() >= 9;
    for (const auto& e : events) {
      ok = ok && abs(e.ground_velocity.vx) == Rational(1, 4) && abs(e.ground_velocity.vy) == Rational(1, 4) &&
           invert_oblique(Rational(0), e.ground_velocity) == e.ground_velocity;
    }
    return Outcome{ok, std::to_string(events.size()) + " events (need >= 9), all |v|=(1/4,1/4), identity at v1=0"};
  });

  report("AC8", "token oracle equivalence", [] {
    auto start = Clock::now();
    chess::OracleReport rep = chess::exhaustive_check(48);
    double s = seconds_since(start);
    return Outcome{rep.counterexamples.empty() && s < 10.0, std::to_string(rep.counterexamples.size()) + " counterexamples over " +
                                                                std::to_string(rep.triples_checked) + " triples, " + ms(s) +
                                                                " (limit 10 s)"};
  });

  report("AC9", "algebraic properties", [] {
    const int n = 10'000;
    std::mt19937_64 rng(9);
    int closure = 0, commut = 0, assoc = 0, mono = 0, absorb = 0, reduce = 0, inverse = 0;
    for (int i = 0; i < n; ++i) {
      Rational a = random_unit(rng);
      Rational b = random_unit(rng);
      Rational c = random_unit(rng);
      Rational ab = compose_parallel(a, b);
      if (ab < Rational(0) || ab > Rational(1)) ++closure;
      if (ab != compose_parallel(b, a)) ++commut;
      if (compose_parallel(ab, c) != compose_parallel(a, compose_parallel(b, c))) ++assoc;
      Rational ac = compose_parallel(a, c);
      if ((c >= b && ac < ab) || (c < b && ac > ab)) ++mono;
      if (compose_parallel(a, Rational(1)) != Rational(1) || compose_parallel(Rational(1), a) != Rational(1)) ++absorb;
      Rational v1 = a == Rational(1) ? Rational(0) : a;
      CompositionResult par = compose_oblique({v1, {b, Rational(0)}});
      if (par.v12.vx != compose_parallel(v1, b) || par.v12.vy != Rational(0)) ++reduce;
      Velocity2 bullet{random_signed_unit(rng), random_signed_unit(rng)};
      if (invert_oblique(v1, compose_oblique({v1, bullet}).v12) != bullet) ++inverse;
    }
    int bad = closure + commut + assoc + mono + absorb + reduce + inverse;
    return Outcome{bad == 0, "7 properties x 10000 cases; failures: closure " + std::to_string(closure) + ", commutativity " +
                                 std::to_string(commut) + ", associativity " + std::to_string(assoc) + ", monotonicity " +
                                 std::to_string(mono) + ", absorbing " + std::to_string(absorb) + ", reduction " +
                                 std::to_string(reduce) + ", inverse " + std::to_string(inverse)};
  });

  report("AC10", "sparse engine vs dense reference", [] {
    std::mt19937_64 rng(10);
    int bad = 0;
    for (int seed = 0; seed < 1000; ++seed) {
      Pattern cur = dense::random_soup(rng, 12);
      dense::DenseGrid grid(cur, 10);
      for (int g = 0; g < 10; ++g) {
        cur = step(cur);
        grid.advance();
        if (!cur.same_cells(Pattern(grid.live()))) {
          ++bad;
          break;
        }
      }
    }
    return Outcome{bad == 0, std::to_string(bad) + " of 1000 random 12x12 seeds diverged within 10 generations"};
  });

  report("AC11", "desk-scale performance", [] {
    Pattern p = gun_battery(6, 4);
    std::size_t initial = p.size();
    std::size_t lo = initial;
    std::size_t hi = initial;
    auto start = Clock::now();
    for (int g = 0; g < 10'000; ++g) {
      p = step(p);
      lo = std::min(lo, p.size());
      hi = std::max(hi, p.size());
    }
    double s = seconds_since(start);
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu cells, population %zu..%zu over 10000 generations in %.2f s (limit 10 s)", initial, lo, hi, s);
    return Outcome{s < 10.0 && initial >= 900 && initial <= 1100, buf};
  });

  report("AC12", "catalog format round trip", [] {
    int bad = 0;
    for (const auto& e : catalog()) {
      PatternDocument first = parse_rle(e.rle);
      std::string once = emit_rle(first);
      PatternDocument second = parse_rle(once);
      std::string twice = emit_rle(second);
      if (second.cells != first.cells || twice != once) ++bad;
    }
    return Outcome{bad == 0, std::to_string(bad) + " of " + std::to_string(catalog().size()) + " entries not a fixed point"};
  });

  std::printf("%s: %d of 12 criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
