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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "geofpe/errors.h"
#include "geofpe/random.h"

namespace geofpe {
namespace {

std::uint64_t VehicleSeed(std::uint64_t seed, std::uint64_t vehicle) {
  std::uint64_t x = seed + 0x9E3779B97F4A7C15ULL * (vehicle + 1);
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double Reflect(double x, double lo, double hi) {
  if (hi <= lo) return lo;
  const double span = hi - lo;
  double t = std::fmod(x - lo, 2.0 * span);
  if (t < 0) t += 2.0 * span;
  return t <= span ? lo + t : hi - (t - span);
}

class TrackWriter {
 public:
  TrackWriter(const SynthConfig& cfg, std::string vehicle_id, Trajectory& out)
      : cfg_(cfg), vehicle_id_(std::move(vehicle_id)), out_(out) {}

  bool full() const {
    return out_.records.size() >=
           static_cast<std::size_t>(cfg_.points_per_vehicle);
  }

  void Emit(double lon, double lat) {
    if (full()) return;
    TrajectoryRecord r;
    r.vehicle_id = vehicle_id_;
    r.timestamp = FormatTimestamp(
        cfg_.start_epoch_seconds +
        static_cast<std::int64_t>(out_.records.size()) * cfg_.interval_seconds);
    r.point.lon = DecimalFromDouble(std::clamp(lon, -180.0, 180.0),
                                    cfg_.frac_digits);
    r.point.lat = DecimalFromDouble(std::clamp(lat, -90.0, 90.0),
                                    cfg_.frac_digits);
    out_.records.push_back(std::move(r));
  }

 private:
  const SynthConfig& cfg_;
  std::string vehicle_id_;
  Trajectory& out_;
};

void HotspotTour(const SynthConfig& cfg, Rng& rng, TrackWriter& w) {
  const auto n_centers = static_cast<std::uint64_t>(cfg.centers.size());
  std::uint64_t current = rng.Below(n_centers);
  while (!w.full()) {
    const LonLat& c = cfg.centers[current];
    const auto dwell = cfg.min_dwell + static_cast<int>(rng.Below(
                           static_cast<std::uint64_t>(cfg.max_dwell -
                                                      cfg.min_dwell + 1)));
    for (int k = 0; k < dwell; ++k) {
      const double lon = rng.Normal(c.lon, cfg.hotspot_stddev_deg);
      const double lat = rng.Normal(c.lat, cfg.hotspot_stddev_deg);
      w.Emit(lon, lat);
    }
    if (n_centers == 1) continue;
    std::uint64_t next = rng.Below(n_centers - 1);
    if (next >= current) ++next;
    const LonLat& d = cfg.centers[next];
    const double dist = std::hypot(d.lon - c.lon, d.lat - c.lat);
    const auto steps =
        std::max(1, static_cast<int>(std::ceil(dist / cfg.walk_step_deg)));
    for (int k = 1; k < steps; ++k) {
      const double f = static_cast<double>(k) / steps;
      w.Emit(c.lon + (d.lon - c.lon) * f +
                 rng.Normal(0.0, cfg.travel_jitter_deg),
             c.lat + (d.lat - c.lat) * f +
                 rng.Normal(0.0, cfg.travel_jitter_deg));
    }
    current = next;
  }
}

void RandomWalk(const SynthConfig& cfg, Rng& rng, TrackWriter& w) {
  const BoundingBox& b = cfg.region;
  double lon = rng.Uniform(b.min_lon, b.max_lon);
  double lat = rng.Uniform(b.min_lat, b.max_lat);
  while (!w.full()) {
    w.Emit(lon, lat);
    lon = Reflect(lon + rng.Normal(0.0, cfg.walk_step_deg), b.min_lon,
                  b.max_lon);
    lat = Reflect(lat + rng.Normal(0.0, cfg.walk_step_deg), b.min_lat,
                  b.max_lat);
  }
}

}  // namespace

void ValidateSynthConfig(const SynthConfig& cfg) {
  if (cfg.n_vehicles <= 0) throw DomainError("vehicle count must be positive");
  if (cfg.points_per_vehicle <= 0) {
    throw DomainError("points per vehicle must be positive");
  }
  if (cfg.frac_digits < 0 || cfg.frac_digits > 9) {
    throw DomainError("fraction digits must be in [0, 9]");
  }
  if (cfg.min_dwell <= 0 || cfg.max_dwell < cfg.min_dwell) {
    throw DomainError("dwell bounds must satisfy 0 < min <= max");
  }
  if (!(cfg.hotspot_stddev_deg >= 0.0) || !(cfg.walk_step_deg > 0.0) ||
      !(cfg.travel_jitter_deg >= 0.0)) {
    throw DomainError("spreads must be non-negative and the walk step positive");
  }
  if (cfg.interval_seconds <= 0) {
    throw DomainError("fix interval must be positive");
  }
  for (const LonLat& c : cfg.centers) {
    if (!(std::abs(c.lon) <= 180.0) || !(std::abs(c.lat) <= 90.0)) {
      throw DomainError("hotspot center outside valid coordinate range");
    }
  }
}

std::vector<LonLat> RandomCenters(int count, const BoundingBox& region,
                                  double min_separation, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<LonLat> centers;
  for (int i = 0; i < count; ++i) {
    LonLat best{};
    double best_gap = -1.0;
    for (int attempt = 0; attempt < 200; ++attempt) {
      const LonLat c{rng.Uniform(region.min_lon, region.max_lon),
                     rng.Uniform(region.min_lat, region.max_lat)};
      double gap = INFINITY;
      for (const LonLat& o : centers) {
        gap = std::min(gap, std::hypot(c.lon - o.lon, c.lat - o.lat));
      }
      if (gap > best_gap) {
        best = c;
        best_gap = gap;
      }
      if (gap >= min_separation) break;
    }
    centers.push_back(best);
  }
  return centers;
}

std::vector<Trajectory> SynthTrajectories(const SynthConfig& cfg) {
  ValidateSynthConfig(cfg);
  std::vector<Trajectory> out(static_cast<std::size_t>(cfg.n_vehicles));
  for (int v = 0; v < cfg.n_vehicles; ++v) {
    Trajectory& t = out[static_cast<std::size_t>(v)];
    t.vehicle_id = std::to_string(v + 1);
    t.records.reserve(static_cast<std::size_t>(cfg.points_per_vehicle));
    Rng rng(VehicleSeed(cfg.seed, static_cast<std::uint64_t>(v)));
    TrackWriter writer(cfg, t.vehicle_id, t);
    if (cfg.centers.empty()) {
      RandomWalk(cfg, rng, writer);
    } else {
      HotspotTour(cfg, rng, writer);
    }
  }
  return out;
}

void SynthGenerate(const SynthConfig& cfg,
                   const std::filesystem::path& out_dir) {
  const auto trajectories = SynthTrajectories(cfg);
  std::filesystem::create_directories(out_dir);
  for (const Trajectory& t : trajectories) {
    const auto path = out_dir / (t.vehicle_id + ".txt");
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw Error("cannot write " + path.string());
    for (const auto& r : t.records) out << FormatLine(r) << '\n';
    if (!out) throw Error("failed writing " + path.string());
  }
}

std::string FormatTimestamp(std::int64_t epoch_seconds) {
  using namespace std::chrono;
  const sys_seconds tp{seconds{epoch_seconds}};
  const auto day = floor<days>(tp);
  const year_month_day ymd{day};
  const hh_mm_ss<seconds> tod{tp - day};
  char buf[64];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u %02ld:%02ld:%02ld",
                static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()),
                static_cast<unsigned>(ymd.day()),
                static_cast<long>(tod.hours().count()),
                static_cast<long>(tod.minutes().count()),
                static_cast<long>(tod.seconds().count()));
  return buf;
}

DecimalNumber DecimalFromDouble(double value, int frac_digits) {
  const std::uint64_t scale = Pow10(frac_digits);
  const auto scaled = static_cast<std::uint64_t>(
      std::llround(std::abs(value) * static_cast<double>(scale)));
  DecimalNumber n;
  n.sign = (value < 0 && scaled != 0) ? -1 : 1;
  n.int_part = scaled / scale;
  n.frac_value = scaled % scale;
  n.frac_digits = frac_digits;
  return n;
}

}  // namespace geofpe
