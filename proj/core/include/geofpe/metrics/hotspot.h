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

#ifndef GEOFPE_METRICS_HOTSPOT_H_
#define GEOFPE_METRICS_HOTSPOT_H_

#include <cstddef>
#include <span>
#include <vector>

#include "geofpe/lonlat.h"
#include "geofpe/metrics/dbscan.h"

namespace geofpe {

struct HotspotOptions {
  double eps_deg = 0.005;
  std::size_t min_pts = 10;
  // Original/decrypted centroids closer than this (km) may be paired.
  double match_radius_km = 0.1;
};

struct ClusterStats {
  double eps = 0.0;
  std::size_t cluster_count = 0;
  std::size_t noise_count = 0;
  std::vector<Cluster> clusters;
};

struct HotspotMatch {
  int original = 0;
  int decrypted = 0;
  double distance_km = 0.0;
};

struct HotspotReport {
  std::size_t sample_size = 0;
  ClusterStats original;
  ClusterStats encrypted;
  ClusterStats decrypted;
  // Encrypted / original cluster count, as a reduction in percent.
  double reduction_pct = 0.0;
  std::vector<HotspotMatch> matches;
  std::size_t matched = 0;
  double mean_match_distance_km = 0.0;
  double match_accuracy = 0.0;  // matched / original cluster count
};

// eps scaled by the mean of the per-axis range ratios (encrypted over
// original). Axes with zero original range are left out; with none left the
// base eps is returned.
double AdaptiveEps(std::span<const LonLat> original,
                   std::span<const LonLat> encrypted, double eps);

// Greedy pairing: candidate pairs within `radius_km`, shortest first, each
// cluster used at most once.
std::vector<HotspotMatch> MatchClusters(std::span<const Cluster> original,
                                        std::span<const Cluster> decrypted,
                                        double radius_km);

// Clusters the three index-aligned samples in degree space. Original and
// decrypted use options.eps_deg; encrypted uses AdaptiveEps. Throws
// DomainError on empty or misaligned samples.
HotspotReport AnalyzeHotspots(std::span<const LonLat> original,
                              std::span<const LonLat> encrypted,
                              std::span<const LonLat> decrypted,
                              const HotspotOptions& options);

}  // namespace geofpe

#endif  // GEOFPE_METRICS_HOTSPOT_H_
