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

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include "lifeframe/error.hpp"
#include "lifeframe/rational.hpp"

/*!
 * Velocity composition between a carrier frame moving along +x and a
 * bullet launched inside it, on the Life lattice with c = 1 cell per
 * generation.
 *
 * A carrier with velocity v1 = n/P spends P - n of every P generations at
 * rest, and a bullet only advances relative to the carrier on those rest
 * moves. Along the course that gives
 *
 *     v12 = v1 + v2 - v1 v2  =  1 - (1 - v1)(1 - v2)
 *
 * and for a bullet with co-moving components (v2x, v2y)
 *
 *     v12x = v1 + (1 - v1) v2x,    v12y = (1 - v1) v2y.
 *
 * Speeds are Chebyshev (max-norm): a diagonal step costs the same as an
 * orthogonal one. Everything here is exact rational arithmetic.
 */
namespace lifeframe {

struct Velocity2 {
  Rational vx;
  Rational vy;

  friend bool operator==(const Velocity2&, const Velocity2&) = default;
};

inline Rational chebyshev_speed(const Velocity2& v) { return max(abs(v.vx), abs(v.vy)); }

enum class Law { life, galilean, lorentz };

inline std::string_view to_string(Law law) {
  switch (law) {
    case Law::life: return "life";
    case Law::galilean: return "galilean";
    case Law::lorentz: return "lorentz";
  }
  return "?";
}

inline Law parse_law(std::string_view text) {
  if (text == "life") return Law::life;
  if (text == "galilean") return Law::galilean;
  if (text == "lorentz") return Law::lorentz;
  throw DomainError("unknown law '" + std::string(text) + "'");
}

/// tan of a direction angle; empty when the direction is vertical.
struct Tangent {
  std::optional<Rational> value;

  bool vertical() const { return !value.has_value(); }
  static Tangent of(Rational t) { return {t}; }
  static Tangent vertical_direction() { return {}; }

  friend bool operator==(const Tangent&, const Tangent&) = default;
};

struct CompositionInput {
  Rational v1;       ///< carrier velocity along +x, 0 <= v1 < 1
  Velocity2 bullet;  ///< bullet velocity in the carrier's co-moving frame
};

struct CompositionResult {
  Velocity2 v12;  ///< ground frame
  Law law = Law::life;
  std::optional<Tangent> tan_chi;  ///< empty when v12 is zero
};

struct DeviationReport {
  Rational v1;
  Rational v2;
  Rational delta;
};

struct DeviationScan {
  Rational v1;
  Rational v2;
  Rational delta;
  std::uint64_t points = 0;
};

namespace detail {

inline void require_unit_interval(const Rational& v, const char* name) {
  if (v < Rational(0) || v > Rational(1)) throw DomainError(std::string(name) + " = " + v.str() + " is outside [0,1]");
}

inline void require_subluminal(const Velocity2& v, const char* name) {
  if (chebyshev_speed(v) > Rational(1)) {
    throw DomainError(std::string(name) + " (" + v.vx.str() + ", " + v.vy.str() + ") exceeds the speed of light");
  }
}

inline void require_carrier(const Rational& v1) {
  if (v1 < Rational(0) || v1 >= Rational(1)) throw DomainError("carrier velocity v1 = " + v1.str() + " must satisfy 0 <= v1 < 1");
}

}  // namespace detail

/// Composition along the carrier's course: v1 + v2 - v1 v2.
inline Rational compose_parallel(const Rational& v1, const Rational& v2) {
  detail::require_unit_interval(v1, "v1");
  detail::require_unit_interval(v2, "v2");
  return v1 + v2 - v1 * v2;
}

inline Rational galilean(const Rational& v1, const Rational& v2) { return v1 + v2; }

inline Rational lorentz(const Rational& v1, const Rational& v2) {
  Rational denom = Rational(1) + v1 * v2;
  if (denom == Rational(0)) throw DomainError("lorentz composition undefined for v1 v2 = -1");
  return (v1 + v2) / denom;
}

/// tan chi = v12y / v12x. Throws when the velocity is zero.
inline Tangent direction_tangent(const Velocity2& v) {
  if (v.vx == Rational(0)) {
    if (v.vy == Rational(0)) throw DomainError("zero velocity has no direction");
    return Tangent::vertical_direction();
  }
  return Tangent::of(v.vy / v.vx);
}

inline Tangent direction_tangent(const CompositionResult& result) { return direction_tangent(result.v12); }

/// Display only. Quadrant-aware angle from +x in degrees, in (-180, 180].
inline double direction_degrees(const Velocity2& v) {
  constexpr double kPi = 3.14159265358979323846;
  return std::atan2(v.vy.to_double(), v.vx.to_double()) * 180.0 / kPi;
}

/// The Life-lattice oblique law.
inline CompositionResult compose_oblique(const CompositionInput& in) {
  detail::require_carrier(in.v1);
  detail::require_subluminal(in.bullet, "bullet velocity");
  Rational rest = Rational(1) - in.v1;  // fraction of moves the carrier spends at rest
  CompositionResult out;
  out.law = Law::life;
  out.v12 = {in.v1 + rest * in.bullet.vx, rest * in.bullet.vy};
  if (out.v12.vx != Rational(0) || out.v12.vy != Rational(0)) out.tan_chi = direction_tangent(out.v12);
  return out;
}

/*!
 * Oblique composition under any of the three laws.
 *
 * galilean: (v1 + v2x, v2y).
 * lorentz: ((v1 + v2x) / (1 + v1 v2x), v2y sqrt(1 - v1^2) / (1 + v1 v2x));
 * throws IrrationalError when sqrt(1 - v1^2) is irrational and v2y != 0.
 */
inline CompositionResult compose(Law law, const CompositionInput& in) {
  if (law == Law::life) return compose_oblique(in);
  detail::require_carrier(in.v1);
  detail::require_subluminal(in.bullet, "bullet velocity");
  CompositionResult out;
  out.law = law;
  if (law == Law::galilean) {
    out.v12 = {galilean(in.v1, in.bullet.vx), in.bullet.vy};
  } else {
    Rational denom = Rational(1) + in.v1 * in.bullet.vx;
    Rational vy = 0;
    if (in.bullet.vy != Rational(0)) {
      auto root = exact_sqrt(Rational(1) - in.v1 * in.v1);
      if (!root) throw IrrationalError("lorentz transverse component is irrational for v1 = " + in.v1.str());
      vy = in.bullet.vy * *root / denom;
    }
    out.v12 = {lorentz(in.v1, in.bullet.vx), vy};
  }
  if (out.v12.vx != Rational(0) || out.v12.vy != Rational(0)) out.tan_chi = direction_tangent(out.v12);
  return out;
}

/*!
 * Nominal speed and direction to components, (v2 cos psi, v2 sin psi),
 * with psi taken in (-90, 90] degrees.
 *
 * Only exact when cos and sin are rational, i.e. tan psi = p/q with
 * p^2 + q^2 a perfect square, or psi on an axis. Otherwise throws
 * IrrationalError: supply the components directly.
 */
inline Velocity2 polar_components(const Rational& v2, const Tangent& tan_psi) {
  detail::require_unit_interval(v2, "v2");
  if (tan_psi.vertical()) return {Rational(0), v2};
  const Rational& t = *tan_psi.value;
  __extension__ using int128 = __int128;
  int128 hyp2 = int128(t.num()) * t.num() + int128(t.den()) * t.den();
  if (hyp2 > std::numeric_limits<std::int64_t>::max()) throw OverflowError("tan psi too large");
  auto hyp = detail::exact_isqrt(static_cast<std::int64_t>(hyp2));
  if (!hyp) throw IrrationalError("cos psi and sin psi are irrational for tan psi = " + t.str() + "; give components directly");
  return {v2 * Rational(t.den(), *hyp), v2 * Rational(t.num(), *hyp)};
}

/// Carrier-frame velocity of a bullet from its ground-frame velocity.
inline Velocity2 invert_oblique(const Rational& v1, const Velocity2& v12) {
  if (v1 == Rational(1)) throw DomainError("a carrier at the speed of light has no rest frame");
  detail::require_carrier(v1);
  Rational rest = Rational(1) - v1;
  Velocity2 bullet{(v12.vx - v1) / rest, v12.vy / rest};
  detail::require_subluminal(bullet, "reconstructed bullet velocity");
  return bullet;
}

/// Lorentz minus Life composition: v1 v2 (1 - v1 - v2 + v1 v2) / (1 + v1 v2).
inline DeviationReport deviation(const Rational& v1, const Rational& v2) {
  detail::require_unit_interval(v1, "v1");
  detail::require_unit_interval(v2, "v2");
  Rational product = v1 * v2;
  return {v1, v2, product * (Rational(1) - v1 - v2 + product) / (Rational(1) + product)};
}

/*!
 * Exhaustive maximum of the deviation over the grid {0, s, 2s, ..., 1}^2.
 * s must be 1/m for a positive integer m. Ties go to the lexicographically
 * smallest (v1, v2).
 *
 * With v1 = i/m, v2 = j/m the deviation is
 *     i j (m - i)(m - j) / (m^2 (m^2 + i j)),
 * compared by cross-multiplication so only the winner is reduced.
 */
inline DeviationScan max_deviation_scan(const Rational& step) {
  if (step <= Rational(0) || step.num() != 1) throw DomainError("scan step " + step.str() + " must be 1/m for a positive integer m");
  const std::int64_t m = step.den();
  if (m > 10'000) throw DomainError("scan step finer than 1/10000");
  __extension__ using int128 = __int128;

  const int128 m2 = int128(m) * m;
  int128 best_num = 0;
  int128 best_den = 1;
  std::int64_t best_i = 0;
  std::int64_t best_j = 0;
  for (std::int64_t i = 0; i <= m; ++i) {
    for (std::int64_t j = 0; j <= m; ++j) {
      int128 num = int128(i) * j * (m - i) * (m - j);
      int128 den = m2 * (m2 + int128(i) * j);
      if (num * best_den > best_num * den) {
        best_num = num;
        best_den = den;
        best_i = i;
        best_j = j;
      }
    }
  }
  std::uint64_t points = static_cast<std::uint64_t>(m + 1) * static_cast<std::uint64_t>(m + 1);
  return {Rational(best_i, m), Rational(best_j, m), Rational::from_wide(best_num, best_den), points};
}

}  // namespace lifeframe
