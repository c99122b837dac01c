// Copyright 2026 The GeoFPE Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "geofpe/range_constraint.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "geofpe/decimal.h"
#include "geofpe/errors.h"

namespace geofpe {
namespace {

constexpr std::array<RangeType, 5> kConstrained = {
    RangeType::kLonUnits, RangeType::kLonTens, RangeType::kLonHundreds,
    RangeType::kLatUnits, RangeType::kLatTens};

TEST(ClassifyRangeTest, Examples) {
  EXPECT_EQ(ClassifyRange(15, true, true), RangeType::kLonTens);
  EXPECT_EQ(ClassifyRange(116, true, true), RangeType::kLonHundreds);
  EXPECT_EQ(ClassifyRange(5, false, true), RangeType::kLatUnits);
  EXPECT_EQ(ClassifyRange(35, true, false), RangeType::kPassthrough);
}

TEST(ClassifyRangeTest, Boundaries) {
  EXPECT_EQ(ClassifyRange(0, true, true), RangeType::kLonUnits);
  EXPECT_EQ(ClassifyRange(9, true, true), RangeType::kLonUnits);
  EXPECT_EQ(ClassifyRange(10, true, true), RangeType::kLonTens);
  EXPECT_EQ(ClassifyRange(99, true, true), RangeType::kLonTens);
  EXPECT_EQ(ClassifyRange(100, true, true), RangeType::kLonHundreds);
  EXPECT_EQ(ClassifyRange(179, true, true), RangeType::kLonHundreds);
  EXPECT_EQ(ClassifyRange(180, true, true), RangeType::kLonHundreds);
  EXPECT_EQ(ClassifyRange(181, true, true), RangeType::kPassthrough);
  EXPECT_EQ(ClassifyRange(0, false, true), RangeType::kLatUnits);
  EXPECT_EQ(ClassifyRange(10, false, true), RangeType::kLatTens);
  EXPECT_EQ(ClassifyRange(89, false, true), RangeType::kLatTens);
  EXPECT_EQ(ClassifyRange(90, false, true), RangeType::kLatTens);
  EXPECT_EQ(ClassifyRange(91, false, true), RangeType::kPassthrough);
  EXPECT_EQ(ClassifyRange(5, false, false), RangeType::kPassthrough);
}

TEST(ConstrainRangeTest, Examples) {
  EXPECT_EQ(ConstrainRange(37, RangeType::kLonUnits), 7u);
  EXPECT_EQ(ConstrainRange(123, RangeType::kLonTens), 43u);
  EXPECT_EQ(ConstrainRange(523, RangeType::kLonHundreds), 143u);
  EXPECT_EQ(ConstrainRange(999, RangeType::kPassthrough), 999u);
  EXPECT_EQ(ConstrainRange(123, RangeType::kLatTens), 53u);
  EXPECT_EQ(ConstrainRange(123, RangeType::kLatUnits), 3u);
}

TEST(ConstrainRangeTest, ClosureOverSixteenBits) {
  for (RangeType rt : kConstrained) {
    const RangeInterval iv = TargetInterval(rt);
    for (std::uint64_t v = 0; v < (1u << 16); ++v) {
      const std::uint64_t c = ConstrainRange(v, rt);
      ASSERT_GE(c, iv.lo);
      ASSERT_LT(c, iv.hi);
    }
  }
  EXPECT_THROW(TargetInterval(RangeType::kPassthrough), DomainError);
}

TEST(ConstrainRangeTest, KeepsDigitCountClass) {
  auto digits = [](std::uint64_t v) { return std::to_string(v).size(); };
  for (std::uint64_t v = 0; v < (1u << 16); ++v) {
    EXPECT_EQ(digits(ConstrainRange(v, RangeType::kLonUnits)), 1u);
    EXPECT_EQ(digits(ConstrainRange(v, RangeType::kLatUnits)), 1u);
    EXPECT_EQ(digits(ConstrainRange(v, RangeType::kLonTens)), 2u);
    EXPECT_EQ(digits(ConstrainRange(v, RangeType::kLatTens)), 2u);
    EXPECT_EQ(digits(ConstrainRange(v, RangeType::kLonHundreds)), 3u);
  }
}

TEST(ConstrainRangeTest, ResiduesAreBalanced) {
  constexpr std::uint64_t kN = 1u << 16;
  for (RangeType rt : kConstrained) {
    const RangeInterval iv = TargetInterval(rt);
    std::vector<std::uint64_t> counts(iv.hi - iv.lo, 0);
    for (std::uint64_t v = 0; v < kN; ++v) ++counts[ConstrainRange(v, rt) - iv.lo];
    const std::uint64_t m = counts.size();
    const auto [lo, hi] = std::minmax_element(counts.begin(), counts.end());
    EXPECT_LE(*hi - *lo, (kN + m - 1) / m - kN / m);
  }
}

TEST(MaskWidthTest, Examples) {
  EXPECT_EQ(MaskWidth(116, true, 0), 16);
  EXPECT_EQ(MaskWidth(73, false, 2), 8);
  EXPECT_EQ(MaskWidth(523, false, 3), 10);
  EXPECT_EQ(MaskWidth(92123, false, 5), 17);
  EXPECT_GE(1u << 17, 100000u);
  EXPECT_LT(1u << 16, 100000u);
}

// Smallest w with 2^w >= 10^d, found by doubling.
int MinimalBits(int d) {
  const std::uint64_t target = Pow10(d);
  int w = 0;
  while ((std::uint64_t{1} << w) < target) ++w;
  return w;
}

TEST(MaskWidthTest, TiersForEveryDigitCountUpToNine) {
  for (int d = 1; d <= 9; ++d) {
    const std::uint64_t limit = Pow10(d);
    const std::uint64_t step = std::max<std::uint64_t>(1, limit / 4096);
    for (std::uint64_t v = 0; v < limit; v += step) {
      const int expected = v < 100 ? 8 : v < 1000 ? 10 : MinimalBits(d);
      ASSERT_EQ(MaskWidth(v, false, d), expected) << v << " d=" << d;
    }
    ASSERT_EQ(BitsForDecimalDigits(d), MinimalBits(d));
  }
}

TEST(MaskWidthTest, WideFractionsStillFitTheirDomain) {
  for (int d = 4; d <= 18; ++d) {
    const int w = MaskWidth(Pow10(d) - 1, false, d);
    EXPECT_EQ(w, static_cast<int>(std::ceil(d * std::log2(10.0))));
  }
}

TEST(ConstrainFractionTest, Examples) {
  EXPECT_EQ(ConstrainFraction(131071, 5), 31071u);
  EXPECT_EQ(ConstrainFraction(42, 5), 42u);
  EXPECT_EQ(ConstrainFraction(7, 0), 0u);
}

}  // namespace
}  // namespace geofpe
