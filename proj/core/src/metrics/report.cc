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

#include "geofpe/metrics/report.h"

#include <fstream>

#include "geofpe/component.h"
#include "geofpe/errors.h"

namespace geofpe {
namespace {

using nlohmann::json;

json ToJson(const Cluster& c) {
  return {{"label", c.label},
          {"centroid", {{"lon", c.centroid.lon}, {"lat", c.centroid.lat}}},
          {"size", c.size}};
}

json ToJson(const ClusterStats& s) {
  json clusters = json::array();
  for (const auto& c : s.clusters) clusters.push_back(ToJson(c));
  return {{"eps", s.eps},
          {"cluster_count", s.cluster_count},
          {"noise_count", s.noise_count},
          {"clusters", std::move(clusters)}};
}

json ToJson(const FileSummary& f) {
  return {{"file_name", f.file_name}, {"records", f.records},
          {"errors", f.errors}};
}

}  // namespace

json ToJson(const RdrSummary& s) {
  json histogram = json::array();
  for (const auto& b : s.histogram) {
    histogram.push_back({{"lo", b.lo}, {"hi", b.hi}, {"count", b.count}});
  }
  json cdf = json::array();
  for (const auto& p : s.cdf) {
    cdf.push_back({{"value", p.value}, {"fraction", p.fraction}});
  }
  return {{"count", s.count},
          {"mean", s.mean},
          {"stddev", s.stddev},
          {"min", s.min},
          {"max", s.max},
          {"q1", s.q1},
          {"median", s.median},
          {"q3", s.q3},
          {"zero_count", s.zero_count},
          {"zero_ratio", s.zero_ratio},
          {"histogram", std::move(histogram)},
          {"cdf", std::move(cdf)}};
}

json ToJson(const RdrReport& r) {
  json per = json::array();
  for (const auto& t : r.trajectories) {
    json item = {{"vehicle_id", t.vehicle_id},
                 {"points", t.points},
                 {"draws_used", t.draws_used}};
    if (t.rdr) {
      item["rdr"] = *t.rdr;
      item["mean_error"] = t.mean_error;
    } else {
      item["rdr"] = nullptr;
      item["skip_reason"] = t.skip_reason;
    }
    per.push_back(std::move(item));
  }
  json out = {{"evaluated", r.evaluated},
              {"skipped", r.skipped},
              {"trajectories", std::move(per)}};
  out["summary"] = r.evaluated > 0 ? ToJson(r.summary) : json(nullptr);
  return out;
}

json ToJson(const HotspotReport& r) {
  json matches = json::array();
  for (const auto& m : r.matches) {
    matches.push_back({{"original", m.original},
                       {"decrypted", m.decrypted},
                       {"distance_km", m.distance_km}});
  }
  return {{"sample_size", r.sample_size},
          {"original", ToJson(r.original)},
          {"encrypted", ToJson(r.encrypted)},
          {"decrypted", ToJson(r.decrypted)},
          {"reduction_pct", r.reduction_pct},
          {"matches", std::move(matches)},
          {"matched", r.matched},
          {"mean_match_distance_km", r.mean_match_distance_km},
          {"match_accuracy", r.match_accuracy}};
}

json ToJson(const AccuracyReport& r) {
  json files = json::array();
  for (const auto& f : r.files) {
    files.push_back({{"file_name", f.file_name},
                     {"points", f.points},
                     {"matched", f.matched},
                     {"fmr", f.fmr},
                     {"missing", f.missing}});
  }
  return {{"total_points", r.total_points},
          {"exact_matches", r.exact_matches},
          {"mismatched", r.mismatched},
          {"omr", r.omr},
          {"mmr", r.mmr},
          {"file_count", r.file_count},
          {"fully_matched_files", r.fully_matched_files},
          {"files", std::move(files)},
          {"missing_files", r.missing_files}};
}

json ToJson(const EncryptSummary& s) {
  json conflicts = json::object();
  json rates = json::object();
  for (ComponentKind k : kAllComponentKinds) {
    const auto i = static_cast<std::size_t>(k);
    const std::string tag(ComponentTag(k));
    conflicts[tag] = s.conflicts[i];
    rates[tag] = {{"conflicted", s.conflict_rates[i].conflicted},
                  {"distinct", s.conflict_rates[i].distinct},
                  {"rate", s.conflict_rates[i].value()}};
  }
  json per = json::array();
  for (const auto& f : s.per_file) per.push_back(ToJson(f));
  return {{"files", s.files},
          {"records_in", s.records_in},
          {"records_out", s.records_out},
          {"parse_errors", s.parse_errors},
          {"dropped_invalid", s.dropped_invalid},
          {"passthrough", s.passthrough},
          {"conflicts", std::move(conflicts)},
          {"conflict_rates", std::move(rates)},
          {"elapsed_seconds", s.elapsed_seconds},
          {"per_file", std::move(per)}};
}

json ToJson(const DecryptSummary& s) {
  json per = json::array();
  for (const auto& f : s.per_file) per.push_back(ToJson(f));
  return {{"files", s.files},
          {"records", s.records},
          {"restored", s.restored},
          {"failures", s.failures},
          {"fuzzy_recoveries", s.fuzzy_recoveries},
          {"elapsed_seconds", s.elapsed_seconds},
          {"per_file", std::move(per)}};
}

void WriteJson(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << j.dump(2) << '\n';
  if (!out) throw Error("failed writing " + path.string());
}

json ReadJson(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return json::parse(in);
}

void WriteHistogramCsv(const std::filesystem::path& path,
                       const RdrSummary& s) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << "lo,hi,count\n";
  for (const auto& b : s.histogram) {
    out << b.lo << ',' << b.hi << ',' << b.count << '\n';
  }
}

void WriteCdfCsv(const std::filesystem::path& path, const RdrSummary& s) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out.precision(17);
  out << "value,fraction\n";
  for (const auto& p : s.cdf) out << p.value << ',' << p.fraction << '\n';
}

}  // namespace geofpe
