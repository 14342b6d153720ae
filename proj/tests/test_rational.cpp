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

#include "lifeframe/rational.hpp"

using namespace lifeframe;

TEST(rational, lowest_terms) {
  Rational r(6, -8);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 4);
  EXPECT_EQ(Rational(0, 5), Rational(0));
  EXPECT_EQ(Rational(0, -5).den(), 1);
}

TEST(rational, arithmetic) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) - Rational(1, 3), Rational(1, 6));
  EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
  EXPECT_EQ(-Rational(1, 2), Rational(-1, 2));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
  EXPECT_EQ(abs(Rational(-3, 7)), Rational(3, 7));
}

TEST(rational, errors) {
  EXPECT_THROW(Rational(1, 0), DomainError);
  EXPECT_THROW(Rational(1) / Rational(0), DomainError);
  const auto big = std::numeric_limits<std::int64_t>::max();
  EXPECT_THROW(Rational(big) + Rational(1), OverflowError);
  EXPECT_THROW(Rational(1, big) * Rational(1, big - 1), OverflowError);
  EXPECT_THROW(Rational(std::numeric_limits<std::int64_t>::min(), 1), OverflowError);
  // Large intermediates that reduce back into range are fine.
  EXPECT_EQ(Rational(big, 3) * Rational(3, big), Rational(1));
}

TEST(rational, parse) {
  EXPECT_EQ(Rational::parse("2/5"), Rational(2, 5));
  EXPECT_EQ(Rational::parse("-3"), Rational(-3));
  EXPECT_EQ(Rational::parse("4/8"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("+1/4"), Rational(1, 4));
  EXPECT_THROW(Rational::parse("0.5"), DomainError);
  EXPECT_THROW(Rational::parse("1e3"), DomainError);
  EXPECT_THROW(Rational::parse("1/0"), DomainError);
  EXPECT_THROW(Rational::parse("a/b"), DomainError);
  EXPECT_THROW(Rational::parse(""), DomainError);
  EXPECT_THROW(Rational::parse("1/"), DomainError);
}

TEST(rational, formatting) {
  EXPECT_EQ(Rational(3, 4).str(), "3/4");
  EXPECT_EQ(Rational(2).str(), "2");
  EXPECT_EQ(Rational(2).fraction_str(), "2/1");
  EXPECT_EQ(Rational(-1, 4).fraction_str(), "-1/4");
}

TEST(rational, exact_sqrt) {
  EXPECT_EQ(exact_sqrt(Rational(16, 25)), Rational(4, 5));
  EXPECT_EQ(exact_sqrt(Rational(0)), Rational(0));
  EXPECT_FALSE(exact_sqrt(Rational(1, 2)).has_value());
  EXPECT_FALSE(exact_sqrt(Rational(-1)).has_value());
}
