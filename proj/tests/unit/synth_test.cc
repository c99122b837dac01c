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

#include "geofpe/synth.h"

#include <gtest/gtest.h>

#include <set>

#include "geofpe/errors.h"
#include "geofpe/metrics/dbscan.h"
#include "test_util.h"

namespace geofpe {
namespace {

std::vector<LonLat> AllPoints(const std::vector<Trajectory>& ts) {
  std::vector<LonLat> pts;
  for (const auto& t : ts) {
    for (const auto& r : t.records) pts.push_back(ToLonLat(r.point));
  }
  return pts;
}

std::size_t ClusterCount(const std::vector<int>& labels) {
  std::set<int> ids(labels.begin(), labels.end());
  ids.erase(kNoise);
  return ids.size();
}

TEST(SynthTest, ShapeAndFormat) {
  SynthConfig cfg;
  cfg.n_vehicles = 4;
  cfg.points_per_vehicle = 250;
  cfg.centers = {{116.4, 39.9}, {116.6, 40.0}};
  const auto ts = SynthTrajectories(cfg);
  ASSERT_EQ(ts.size(), 4u);
  for (std::size_t v = 0; v < ts.size(); ++v) {
    EXPECT_EQ(ts[v].vehicle_id, std::to_string(v + 1));
    ASSERT_EQ(ts[v].records.size(), 250u);
    for (const auto& r : ts[v].records) {
      EXPECT_EQ(r.vehicle_id, ts[v].vehicle_id);
      EXPECT_EQ(r.point.lon.frac_digits, 5);
      EXPECT_EQ(r.point.lat.frac_digits, 5);
      EXPECT_EQ(ValidatePoint(r.point), PointValidity::kValid);
    }
  }
  EXPECT_EQ(ts[0].records[0].timestamp, "2008-02-02 05:30:00");
  EXPECT_EQ(ts[0].records[1].timestamp, "2008-02-02 05:32:57");
}

TEST(SynthTest, DeterministicBytes) {
  testing::TempDir a;
  testing::TempDir b;
  SynthConfig cfg;
  cfg.n_vehicles = 5;
  cfg.points_per_vehicle = 300;
  cfg.centers = RandomCenters(6, cfg.region, 0.05, 9);
  cfg.seed = 77;
  SynthGenerate(cfg, a.path());
  SynthGenerate(cfg, b.path());
  for (int v = 1; v <= 5; ++v) {
    const std::string name = std::to_string(v) + ".txt";
    EXPECT_EQ(testing::ReadFile(a / name), testing::ReadFile(b / name));
    EXPECT_FALSE(testing::ReadFile(a / name).empty());
  }
  cfg.seed = 78;
  testing::TempDir c;
  SynthGenerate(cfg, c.path());
  EXPECT_NE(testing::ReadFile(a / "1.txt"), testing::ReadFile(c / "1.txt"));
}

TEST(SynthTest, PlantedHotspotsAreFoundByDbscan) {
  SynthConfig cfg;
  cfg.n_vehicles = 10;
  cfg.points_per_vehicle = 400;
  cfg.centers = {{116.3, 39.8}, {116.5, 40.1}, {116.8, 39.95}};
  cfg.hotspot_stddev_deg = 0.001;
  cfg.walk_step_deg = 0.05;  // sparse transit between centers
  const auto pts = AllPoints(SynthTrajectories(cfg));
  EXPECT_GE(ClusterCount(Dbscan(pts, 0.005, 10)), 3u);
}

TEST(SynthTest, PureWalkHasNoDenseClusters) {
  SynthConfig cfg;
  cfg.n_vehicles = 10;
  cfg.points_per_vehicle = 300;
  cfg.walk_step_deg = 0.01;
  const auto pts = AllPoints(SynthTrajectories(cfg));
  for (const auto& p : pts) {
    EXPECT_GE(p.lon, cfg.region.min_lon);
    EXPECT_LE(p.lon, cfg.region.max_lon);
    EXPECT_GE(p.lat, cfg.region.min_lat);
    EXPECT_LE(p.lat, cfg.region.max_lat);
  }
  EXPECT_EQ(ClusterCount(Dbscan(pts, 0.005, 50)), 0u);
}

TEST(SynthTest, RandomCentersRespectSeparation) {
  const BoundingBox box;
  const auto c = RandomCenters(40, box, 0.08, 3);
  ASSERT_EQ(c.size(), 40u);
  for (std::size_t i = 0; i < c.size(); ++i) {
    EXPECT_GE(c[i].lon, box.min_lon);
    EXPECT_LE(c[i].lon, box.max_lon);
    for (std::size_t j = 0; j < i; ++j) {
      EXPECT_GE(std::hypot(c[i].lon - c[j].lon, c[i].lat - c[j].lat), 0.08);
    }
  }
  EXPECT_EQ(c, RandomCenters(40, box, 0.08, 3));
}

TEST(SynthTest, RejectsBadConfig) {
  SynthConfig cfg;
  cfg.n_vehicles = 0;
  EXPECT_THROW(SynthTrajectories(cfg), DomainError);
  cfg = SynthConfig{};
  cfg.points_per_vehicle = -1;
  EXPECT_THROW(ValidateSynthConfig(cfg), DomainError);
  cfg = SynthConfig{};
  cfg.centers = {{190.0, 0.0}};
  EXPECT_THROW(ValidateSynthConfig(cfg), DomainError);
  cfg = SynthConfig{};
  cfg.min_dwell = 10;
  cfg.max_dwell = 5;
  EXPECT_THROW(ValidateSynthConfig(cfg), DomainError);
}

TEST(FormatTimestampTest, Utc) {
  EXPECT_EQ(FormatTimestamp(0), "1970-01-01 00:00:00");
  EXPECT_EQ(FormatTimestamp(1201930200), "2008-02-02 05:30:00");
  EXPECT_EQ(FormatTimestamp(951782400), "2000-02-29 00:00:00");
}

TEST(DecimalFromDoubleTest, RoundsToDigits) {
  EXPECT_EQ(Recombine(DecimalFromDouble(116.512345, 5)), "116.51235");
  EXPECT_EQ(Recombine(DecimalFromDouble(39.9, 5)), "39.90000");
  EXPECT_EQ(Recombine(DecimalFromDouble(-0.000004, 5)), "0.00000");
  EXPECT_EQ(Recombine(DecimalFromDouble(0.999996, 5)), "1.00000");
  EXPECT_EQ(Recombine(DecimalFromDouble(7.4, 0)), "7");
}

}  // namespace
}  // namespace geofpe
