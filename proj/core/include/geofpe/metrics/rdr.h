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

#ifndef GEOFPE_METRICS_RDR_H_
#define GEOFPE_METRICS_RDR_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "geofpe/dataset.h"
#include "geofpe/lonlat.h"

namespace geofpe {

// Relative distance retention rate.
//
// A draw picks two point pairs (i, j) and (m, n). With r_o the ratio of the
// pair distances on the original trajectory and r_e the same ratio on the
// encrypted images of those indices, the draw's error is |r_o - r_e| / r_o.
// RDR = 1 - min(mean error, 1): 1 means distance ratios survive, 0 means
// they are destroyed.

struct RdrDraw {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t m = 0;
  std::size_t n = 0;
};

struct RdrOptions {
  int n_samples = 100;
  // Attempts per draw before a degenerate draw is given up.
  int max_retries = 10;
  std::uint64_t seed = 42;
};

// Error of one draw, or nullopt when the draw is degenerate (a zero
// denominator or a zero original ratio).
std::optional<double> RdrDrawError(std::span<const LonLat> orig,
                                   std::span<const LonLat> enc,
                                   const RdrDraw& draw);

// Mean error over the non-degenerate draws; nullopt when none remain.
std::optional<double> MeanRdrError(std::span<const LonLat> orig,
                                   std::span<const LonLat> enc,
                                   std::span<const RdrDraw> draws);

inline double RdrFromMeanError(double mean_error) {
  return 1.0 - (mean_error < 1.0 ? mean_error : 1.0);
}

struct RdrTrajectoryResult {
  std::string vehicle_id;
  std::size_t points = 0;
  std::size_t draws_used = 0;
  std::optional<double> rdr;    // absent when the trajectory was skipped
  double mean_error = 0.0;
  std::string skip_reason;
};

// Per-vehicle draw seed: options.seed xor FNV-1a(vehicle id).
std::uint64_t RdrSeedFor(std::uint64_t seed, std::string_view vehicle_id);

// Samples `n_samples` draws of four distinct indices. Trajectories shorter
// than four points, or of unequal length, are skipped with a reason.
RdrTrajectoryResult RdrTrajectory(std::string_view vehicle_id,
                                  std::span<const LonLat> orig,
                                  std::span<const LonLat> enc,
                                  const RdrOptions& options);

struct HistogramBin {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t count = 0;
};

struct CdfPoint {
  double value = 0.0;
  double fraction = 0.0;  // share of values <= value
};

struct RdrSummary {
  std::size_t count = 0;
  double mean = 0.0;
  double stddev = 0.0;  // population
  double min = 0.0;
  double max = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  std::size_t zero_count = 0;
  double zero_ratio = 0.0;
  std::vector<HistogramBin> histogram;
  std::vector<CdfPoint> cdf;
};

// Linear-interpolation quantile of sorted data (position p * (n - 1)).
double Quantile(std::span<const double> sorted, double p);

// Throws DomainError on an empty input. Bins are [k w, (k+1) w), with the
// last bin closed so 1.0 is counted.
RdrSummary SummarizeRdr(std::span<const double> values,
                        double bin_width = 0.02);

struct RdrReport {
  std::vector<RdrTrajectoryResult> trajectories;
  RdrSummary summary;
  std::size_t evaluated = 0;
  std::size_t skipped = 0;
};

// Pairs trajectories index-wise; `workers` only changes throughput.
RdrReport EvaluateRdr(std::span<const Trajectory> orig,
                      std::span<const Trajectory> enc,
                      const RdrOptions& options, double bin_width = 0.02,
                      int workers = 1);

std::vector<LonLat> Positions(const Trajectory& t);

}  // namespace geofpe

#endif  // GEOFPE_METRICS_RDR_H_
