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

#include "geofpe/metrics/haversine.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

namespace geofpe {
namespace {

// Chord length between unit vectors, turned back into an arc.
double VectorArcKm(const LonLat& a, const LonLat& b) {
  const double d = std::numbers::pi / 180.0;
  auto unit = [d](const LonLat& p) {
    return std::array<double, 3>{std::cos(p.lat * d) * std::cos(p.lon * d),
                                 std::cos(p.lat * d) * std::sin(p.lon * d),
                                 std::sin(p.lat * d)};
  };
  const auto u = unit(a);
  const auto v = unit(b);
  const double chord = std::sqrt((u[0] - v[0]) * (u[0] - v[0]) +
                                 (u[1] - v[1]) * (u[1] - v[1]) +
                                 (u[2] - v[2]) * (u[2] - v[2]));
  return 2.0 * kEarthRadiusKm * std::asin(std::min(1.0, chord / 2.0));
}

LonLat RandomPoint(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> lon(-180.0, 180.0);
  std::uniform_real_distribution<double> lat(-90.0, 90.0);
  return {lon(rng), lat(rng)};
}

TEST(HaversineTest, KnownArcs) {
  EXPECT_NEAR(HaversineKm(LonLat{0, 0}, LonLat{90, 0}), 10007.543, 0.001);
  EXPECT_NEAR(HaversineKm(LonLat{0, 0}, LonLat{0, 90}), 10007.543, 0.001);
  EXPECT_NEAR(HaversineKm(LonLat{0, 0}, LonLat{180, 0}), 20015.087, 0.001);
  EXPECT_NEAR(HaversineKm(LonLat{0, 90}, LonLat{0, -90}), 20015.087, 0.001);
  EXPECT_NEAR(HaversineKm(LonLat{179.5, 0}, LonLat{-179.5, 0}),
              HaversineKm(LonLat{0, 0}, LonLat{1, 0}), 1e-9);
  EXPECT_DOUBLE_EQ(HaversineKm({0, 0}, {90, 0}, 1.0), std::numbers::pi / 2);
}

TEST(HaversineTest, SymmetricAndZeroOnDiagonal) {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 100000; ++k) {
    const LonLat a = RandomPoint(rng);
    const LonLat b = RandomPoint(rng);
    ASSERT_EQ(HaversineKm(a, a), 0.0);
    ASSERT_EQ(HaversineKm(a, b), HaversineKm(b, a));
    ASSERT_GE(HaversineKm(a, b), 0.0);
  }
}

TEST(HaversineTest, TriangleInequality) {
  std::mt19937_64 rng(2);
  for (int k = 0; k < 100000; ++k) {
    const LonLat a = RandomPoint(rng);
    const LonLat b = RandomPoint(rng);
    const LonLat c = RandomPoint(rng);
    ASSERT_LE(HaversineKm(a, c), HaversineKm(a, b) + HaversineKm(b, c) + 1e-9);
  }
}

TEST(HaversineTest, AgreesWithVectorForm) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 20000; ++k) {
    const LonLat a = RandomPoint(rng);
    const LonLat b = RandomPoint(rng);
    ASSERT_NEAR(HaversineKm(a, b), VectorArcKm(a, b), 1e-6);
  }
}

TEST(EuclideanDegreesTest, PlaneDistance) {
  EXPECT_DOUBLE_EQ(EuclideanDegrees({0, 0}, {3, 4}), 5.0);
  EXPECT_DOUBLE_EQ(EuclideanDegrees({116.1, 39.9}, {116.1, 39.9}), 0.0);
}

}  // namespace
}  // namespace geofpe
