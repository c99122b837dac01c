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

#include "geofpe/metrics/rdr.h"

#include <algorithm>
#include <cmath>

#include "geofpe/errors.h"
#include "geofpe/metrics/haversine.h"
#include "geofpe/random.h"
#include "../parallel.h"

namespace geofpe {

std::optional<double> RdrDrawError(std::span<const LonLat> orig,
                                   std::span<const LonLat> enc,
                                   const RdrDraw& d) {
  const double den_o = HaversineKm(orig[d.m], orig[d.n]);
  const double den_e = HaversineKm(enc[d.m], enc[d.n]);
  if (den_o == 0.0 || den_e == 0.0) return std::nullopt;
  const double r_o = HaversineKm(orig[d.i], orig[d.j]) / den_o;
  if (r_o == 0.0) return std::nullopt;
  const double r_e = HaversineKm(enc[d.i], enc[d.j]) / den_e;
  return std::abs(r_o - r_e) / r_o;
}

std::optional<double> MeanRdrError(std::span<const LonLat> orig,
                                   std::span<const LonLat> enc,
                                   std::span<const RdrDraw> draws) {
  double sum = 0.0;
  std::size_t used = 0;
  for (const RdrDraw& d : draws) {
    if (auto e = RdrDrawError(orig, enc, d)) {
      sum += *e;
      ++used;
    }
  }
  if (used == 0) return std::nullopt;
  return sum / static_cast<double>(used);
}

std::uint64_t RdrSeedFor(std::uint64_t seed, std::string_view vehicle_id) {
  return seed ^ Fnv1a64(vehicle_id);
}

RdrTrajectoryResult RdrTrajectory(std::string_view vehicle_id,
                                  std::span<const LonLat> orig,
                                  std::span<const LonLat> enc,
                                  const RdrOptions& options) {
  RdrTrajectoryResult result;
  result.vehicle_id = std::string(vehicle_id);
  result.points = orig.size();
  if (orig.size() != enc.size()) {
    result.skip_reason = "point count mismatch (" +
                         std::to_string(orig.size()) + " vs " +
                         std::to_string(enc.size()) + ")";
    return result;
  }
  if (orig.size() < 4) {
    result.skip_reason = "fewer than 4 points";
    return result;
  }

  Rng rng(RdrSeedFor(options.seed, vehicle_id));
  const std::uint64_t n = orig.size();
  auto distinct_draw = [&] {
    std::size_t idx[4];
    for (int k = 0; k < 4; ++k) {
      bool clash;
      do {
        idx[k] = static_cast<std::size_t>(rng.Below(n));
        clash = false;
        for (int q = 0; q < k; ++q) clash = clash || idx[q] == idx[k];
      } while (clash);
    }
    return RdrDraw{idx[0], idx[1], idx[2], idx[3]};
  };

  double sum = 0.0;
  for (int s = 0; s < options.n_samples; ++s) {
    for (int attempt = 0; attempt < std::max(options.max_retries, 1);
         ++attempt) {
      if (auto e = RdrDrawError(orig, enc, distinct_draw())) {
        sum += *e;
        ++result.draws_used;
        break;
      }
    }
  }
  if (result.draws_used == 0) {
    result.skip_reason = "every draw was degenerate";
    return result;
  }
  result.mean_error = sum / static_cast<double>(result.draws_used);
  result.rdr = RdrFromMeanError(result.mean_error);
  return result;
}

double Quantile(std::span<const double> sorted, double p) {
  if (sorted.empty()) throw DomainError("quantile of empty data");
  const double pos = p * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + (sorted[hi] - sorted[lo]) * frac;
}

RdrSummary SummarizeRdr(std::span<const double> values, double bin_width) {
  if (values.empty()) throw DomainError("RDR summary needs at least one value");
  if (!(bin_width > 0.0)) throw DomainError("histogram bin width must be > 0");

  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());

  RdrSummary s;
  s.count = sorted.size();
  const auto n = static_cast<double>(s.count);
  double sum = 0.0;
  for (double v : sorted) sum += v;
  s.mean = sum / n;
  double sq = 0.0;
  for (double v : sorted) sq += (v - s.mean) * (v - s.mean);
  s.stddev = std::sqrt(sq / n);
  s.min = sorted.front();
  s.max = sorted.back();
  s.q1 = Quantile(sorted, 0.25);
  s.median = Quantile(sorted, 0.5);
  s.q3 = Quantile(sorted, 0.75);
  s.zero_count = static_cast<std::size_t>(
      std::count(sorted.begin(), sorted.end(), 0.0));
  s.zero_ratio = static_cast<double>(s.zero_count) / n;

  const auto bins = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::ceil(1.0 / bin_width - 1e-9)));
  s.histogram.resize(bins);
  for (std::size_t b = 0; b < bins; ++b) {
    s.histogram[b].lo = static_cast<double>(b) * bin_width;
    s.histogram[b].hi = std::min(1.0, static_cast<double>(b + 1) * bin_width);
  }
  for (double v : sorted) {
    auto b = static_cast<std::size_t>(std::max(0.0, std::floor(v / bin_width)));
    ++s.histogram[std::min(b, bins - 1)].count;
  }

  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (k + 1 < sorted.size() && sorted[k + 1] == sorted[k]) continue;
    s.cdf.push_back({sorted[k], static_cast<double>(k + 1) / n});
  }
  return s;
}

std::vector<LonLat> Positions(const Trajectory& t) {
  std::vector<LonLat> out;
  out.reserve(t.records.size());
  for (const auto& r : t.records) out.push_back(ToLonLat(r.point));
  return out;
}

RdrReport EvaluateRdr(std::span<const Trajectory> orig,
                      std::span<const Trajectory> enc,
                      const RdrOptions& options, double bin_width,
                      int workers) {
  if (orig.size() != enc.size()) {
    throw DomainError("RDR needs aligned datasets: " +
                      std::to_string(orig.size()) + " original vs " +
                      std::to_string(enc.size()) + " encrypted trajectories");
  }
  RdrReport report;
  report.trajectories.resize(orig.size());
  internal::ParallelFor(orig.size(), workers, [&](std::size_t i) {
    const auto a = Positions(orig[i]);
    const auto b = Positions(enc[i]);
    report.trajectories[i] = RdrTrajectory(orig[i].vehicle_id, a, b, options);
  });

  std::vector<double> values;
  for (const auto& t : report.trajectories) {
    if (t.rdr) {
      values.push_back(*t.rdr);
    } else {
      ++report.skipped;
    }
  }
  report.evaluated = values.size();
  if (!values.empty()) report.summary = SummarizeRdr(values, bin_width);
  return report;
}

}  // namespace geofpe
