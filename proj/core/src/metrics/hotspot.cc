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

#include "geofpe/metrics/hotspot.h"

#include <algorithm>
#include <tuple>

#include "geofpe/errors.h"
#include "geofpe/metrics/haversine.h"

namespace geofpe {
namespace {

struct Extent {
  double lon = 0.0;
  double lat = 0.0;
};

Extent RangeOf(std::span<const LonLat> pts) {
  auto [lo_lon, hi_lon] = std::minmax_element(
      pts.begin(), pts.end(),
      [](const LonLat& a, const LonLat& b) { return a.lon < b.lon; });
  auto [lo_lat, hi_lat] = std::minmax_element(
      pts.begin(), pts.end(),
      [](const LonLat& a, const LonLat& b) { return a.lat < b.lat; });
  return {hi_lon->lon - lo_lon->lon, hi_lat->lat - lo_lat->lat};
}

ClusterStats RunClustering(std::span<const LonLat> pts, double eps,
                           std::size_t min_pts) {
  ClusterStats s;
  s.eps = eps;
  const auto labels = Dbscan(pts, eps, min_pts);
  s.clusters = SummarizeClusters(pts, labels);
  s.cluster_count = s.clusters.size();
  s.noise_count = static_cast<std::size_t>(
      std::count(labels.begin(), labels.end(), kNoise));
  return s;
}

}  // namespace

double AdaptiveEps(std::span<const LonLat> original,
                   std::span<const LonLat> encrypted, double eps) {
  if (original.empty() || encrypted.empty()) return eps;
  const Extent o = RangeOf(original);
  const Extent e = RangeOf(encrypted);
  double sum = 0.0;
  int axes = 0;
  if (o.lon > 0.0) {
    sum += e.lon / o.lon;
    ++axes;
  }
  if (o.lat > 0.0) {
    sum += e.lat / o.lat;
    ++axes;
  }
  if (axes == 0) return eps;
  const double scaled = eps * sum / axes;
  return scaled > 0.0 ? scaled : eps;
}

std::vector<HotspotMatch> MatchClusters(std::span<const Cluster> original,
                                        std::span<const Cluster> decrypted,
                                        double radius_km) {
  std::vector<std::tuple<double, int, int>> candidates;
  for (const Cluster& a : original) {
    for (const Cluster& b : decrypted) {
      const double d = HaversineKm(a.centroid, b.centroid);
      if (d <= radius_km) candidates.emplace_back(d, a.label, b.label);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  std::vector<bool> used_a(original.size(), false);
  std::vector<bool> used_b(decrypted.size(), false);
  std::vector<HotspotMatch> matches;
  for (const auto& [d, a, b] : candidates) {
    if (used_a[static_cast<std::size_t>(a)] ||
        used_b[static_cast<std::size_t>(b)]) {
      continue;
    }
    used_a[static_cast<std::size_t>(a)] = true;
    used_b[static_cast<std::size_t>(b)] = true;
    matches.push_back({a, b, d});
  }
  std::sort(matches.begin(), matches.end(),
            [](const HotspotMatch& x, const HotspotMatch& y) {
              return x.original < y.original;
            });
  return matches;
}

HotspotReport AnalyzeHotspots(std::span<const LonLat> original,
                              std::span<const LonLat> encrypted,
                              std::span<const LonLat> decrypted,
                              const HotspotOptions& options) {
  if (original.empty()) throw DomainError("hotspot analysis on an empty sample");
  if (encrypted.size() != original.size() ||
      decrypted.size() != original.size()) {
    throw DomainError("hotspot samples are not index-aligned");
  }

  HotspotReport r;
  r.sample_size = original.size();
  r.original = RunClustering(original, options.eps_deg, options.min_pts);
  r.decrypted = RunClustering(decrypted, options.eps_deg, options.min_pts);
  r.encrypted =
      RunClustering(encrypted, AdaptiveEps(original, encrypted, options.eps_deg),
                    options.min_pts);

  if (r.original.cluster_count > 0) {
    r.reduction_pct =
        100.0 * (1.0 - static_cast<double>(r.encrypted.cluster_count) /
                           static_cast<double>(r.original.cluster_count));
  }

  r.matches = MatchClusters(r.original.clusters, r.decrypted.clusters,
                            options.match_radius_km);
  r.matched = r.matches.size();
  if (r.matched > 0) {
    double sum = 0.0;
    for (const auto& m : r.matches) sum += m.distance_km;
    r.mean_match_distance_km = sum / static_cast<double>(r.matched);
  }
  if (r.original.cluster_count > 0) {
    r.match_accuracy = static_cast<double>(r.matched) /
                       static_cast<double>(r.original.cluster_count);
  } else {
    r.match_accuracy = r.decrypted.cluster_count == 0 ? 1.0 : 0.0;
  }
  return r;
}

}  // namespace geofpe
