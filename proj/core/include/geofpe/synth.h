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

#ifndef GEOFPE_SYNTH_H_
#define GEOFPE_SYNTH_H_

#include <cstdint>
#include <filesystem>
#include <vector>

#include "geofpe/dataset.h"
#include "geofpe/lonlat.h"

namespace geofpe {

// Desk-scale stand-in for a taxi fleet. Each vehicle alternates between
// dwelling at a hotspot (Gaussian scatter around its center) and driving to
// another hotspot along a jittered straight line. With no hotspots every
// vehicle performs a reflected Gaussian random walk inside `region`.
struct SynthConfig {
  int n_vehicles = 100;
  int points_per_vehicle = 1000;
  std::vector<LonLat> centers;
  double hotspot_stddev_deg = 0.002;
  double walk_step_deg = 0.004;
  double travel_jitter_deg = 0.0005;
  int min_dwell = 20;  // points per hotspot visit, uniform in [min, max]
  int max_dwell = 60;
  BoundingBox region;
  int frac_digits = 5;
  std::uint64_t seed = 1;
  // First fix of every vehicle; later fixes follow every `interval_seconds`.
  std::int64_t start_epoch_seconds = 1201930200;  // 2008-02-02 05:30:00 UTC
  int interval_seconds = 177;
};

// Throws DomainError when counts are not positive, a center is not a valid
// coordinate, or dwell bounds are inconsistent.
void ValidateSynthConfig(const SynthConfig& cfg);

// `count` centers drawn uniformly inside `region`, at least `min_separation`
// degrees apart (best effort after a bounded number of attempts).
std::vector<LonLat> RandomCenters(int count, const BoundingBox& region,
                                  double min_separation, std::uint64_t seed);

// Vehicle ids are "1".."n"; output is a pure function of the config.
std::vector<Trajectory> SynthTrajectories(const SynthConfig& cfg);

// Writes one "<vehicle_id>.txt" per vehicle in the plain 4-column layout.
void SynthGenerate(const SynthConfig& cfg, const std::filesystem::path& out_dir);

// "YYYY-MM-DD hh:mm:ss" in UTC.
std::string FormatTimestamp(std::int64_t epoch_seconds);

// Rounds to `frac_digits` decimals and carries the result as exact text.
DecimalNumber DecimalFromDouble(double value, int frac_digits);

}  // namespace geofpe

#endif  // GEOFPE_SYNTH_H_
