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

#include <charconv>
#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "lifeframe/error.hpp"

namespace lifeframe {

namespace detail {

__extension__ using int128 = __int128;
__extension__ using uint128 = unsigned __int128;

inline uint128 gcd128(uint128 a, uint128 b) {
  while (b != 0) {
    uint128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline constexpr std::int64_t kRationalLimit = std::numeric_limits<std::int64_t>::max();

}  // namespace detail

/*!
 * Exact fraction of two 64-bit integers, always in lowest terms with a
 * positive denominator.
 *
 * Intermediate products are formed in 128 bits and reduced before being
 * narrowed; a result whose reduced parts do not fit in [-2^63+1, 2^63-1]
 * throws OverflowError.
 */
class Rational {
 public:
  constexpr Rational() noexcept = default;
  constexpr Rational(std::int64_t value) noexcept : num_(value), den_(1) {}  // NOLINT: implicit by intent
  Rational(std::int64_t numerator, std::int64_t denominator) {
    *this = make(numerator, denominator);
  }

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  bool is_integer() const noexcept { return den_ == 1; }
  int sign() const noexcept { return (num_ > 0) - (num_ < 0); }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// "p/q", or just "p" when the denominator is 1.
  std::string str() const {
    std::string out = std::to_string(num_);
    if (den_ != 1) out += "/" + std::to_string(den_);
    return out;
  }

  /// Always "p/q", including "p/1". Used by the key=value output.
  std::string fraction_str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  /// Parse "p/q" or "p". Decimal notation is rejected.
  static Rational parse(std::string_view text) {
    auto fail = [&](const char* why) -> Rational {
      throw DomainError("cannot parse rational '" + std::string(text) + "': " + why);
    };
    if (text.empty()) return fail("empty");
    if (text.find_first_of(".eE") != std::string_view::npos) return fail("decimal notation is not exact; write p/q");
    auto slash = text.find('/');
    auto parse_int = [&](std::string_view part, std::int64_t& out) {
      if (!part.empty() && part.front() == '+') part.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), out);
      return !part.empty() && ec == std::errc{} && ptr == part.data() + part.size();
    };
    std::int64_t n = 0;
    std::int64_t d = 1;
    if (!parse_int(text.substr(0, slash), n)) return fail("bad numerator");
    if (slash != std::string_view::npos && !parse_int(text.substr(slash + 1), d)) return fail("bad denominator");
    if (d == 0) return fail("zero denominator");
    return Rational(n, d);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return from_wide(detail::int128(a.num_) + b.num_, a.den_);
    return from_wide(detail::int128(a.num_) * b.den_ + detail::int128(b.num_) * a.den_,
                     detail::int128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_wide(detail::int128(a.num_) * b.num_, detail::int128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw DomainError("division by zero rational");
    return from_wide(detail::int128(a.num_) * b.den_, detail::int128(a.den_) * b.num_);
  }
  Rational operator-() const noexcept {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    detail::int128 lhs = detail::int128(a.num_) * b.den_;
    detail::int128 rhs = detail::int128(b.num_) * a.den_;
    return lhs <=> rhs;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

  /// Reduce a 128-bit fraction; throws when the reduced form leaves 64 bits.
  static Rational from_wide(detail::int128 n, detail::int128 d) {
    if (d == 0) throw DomainError("zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    detail::uint128 mag = n < 0 ? detail::uint128(-n) : detail::uint128(n);
    detail::uint128 g = detail::gcd128(mag, detail::uint128(d));
    if (g > 1) {
      n /= detail::int128(g);
      d /= detail::int128(g);
    }
    if (n > detail::kRationalLimit || n < -detail::kRationalLimit || d > detail::kRationalLimit) {
      throw OverflowError("rational result exceeds 64-bit range");
    }
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }

 private:
  static Rational make(std::int64_t n, std::int64_t d) {
    if (n == std::numeric_limits<std::int64_t>::min() || d == std::numeric_limits<std::int64_t>::min()) {
      throw OverflowError("rational component out of range");
    }
    return from_wide(n, d);
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }

namespace detail {

inline std::optional<std::int64_t> exact_isqrt(std::int64_t v) {
  if (v < 0) return std::nullopt;
  auto r = static_cast<std::int64_t>(__builtin_sqrtl(static_cast<long double>(v)));
  while (r > 0 && int128(r) * r > v) --r;
  while (int128(r + 1) * (r + 1) <= v) ++r;
  if (int128(r) * r != v) return std::nullopt;
  return r;
}

}  // namespace detail

/// Square root when it is itself rational (numerator and denominator perfect squares).
inline std::optional<Rational> exact_sqrt(const Rational& r) {
  auto n = detail::exact_isqrt(r.num());
  auto d = detail::exact_isqrt(r.den());
  if (!n || !d) return std::nullopt;
  return Rational(*n, *d);
}

}  // namespace lifeframe
