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

// geofpe: key generation, dataset encryption/decryption, synthetic data and
// evaluation reports.

#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <limits>
#include <string>

#include "CLI11.hpp"
#include "cli_util.h"
#include "geofpe/component.h"
#include "geofpe/errors.h"
#include "geofpe/mapping_store.h"
#include "geofpe/metrics/accuracy.h"
#include "geofpe/metrics/hotspot.h"
#include "geofpe/metrics/rdr.h"
#include "geofpe/metrics/report.h"
#include "geofpe/pipeline.h"
#include "geofpe/synth.h"

namespace geofpe::cli {
namespace {

namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitPartial = 1;
constexpr int kExitUsage = 2;

void SetUpLogging() {
  auto logger = spdlog::stderr_logger_st("geofpe");
  logger->set_pattern("geofpe: %l: %v");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::err);
  if (const char* env = std::getenv("GEOFPE_LOG")) {
    const std::string level = env;
    if (level == "debug") {
      spdlog::set_level(spdlog::level::debug);
    } else if (level == "info") {
      spdlog::set_level(spdlog::level::info);
    } else if (level != "error") {
      spdlog::warn("ignoring GEOFPE_LOG={}", level);
    }
  }
}

struct KeygenArgs {
  fs::path out;
  bool hex = false;
  bool force = false;
};

struct CryptArgs {
  fs::path input;
  fs::path output;
  fs::path key;
  fs::path map;
  int rounds = 8;
  int workers = 1;
  fs::path export_csv;
  fs::path summary_json;
};

struct SynthArgs {
  fs::path output;
  int vehicles = 100;
  int points = 1000;
  std::string centers;
  int hotspots = 0;
  double min_separation = 0.05;
  double stddev = 0.002;
  double walk_step = 0.004;
  int digits = 5;
  std::uint64_t seed = 1;
};

struct EvalArgs {
  fs::path original;
  fs::path encrypted;
  fs::path decrypted;
  fs::path out = ".";
  int samples = 100;
  std::uint64_t seed = 42;
  int workers = 1;
  double bin_width = 0.02;
  double eps = 0.005;
  int min_pts = 10;
  double match_radius = 0.1;
  std::size_t sample_size = 0;
};

void PrintRate(const char* label, std::size_t num, std::size_t den) {
  std::printf("%s %zu / %zu\n", label, num, den);
}

int RunKeygen(const KeygenArgs& a) {
  WriteNewKey(a.out, a.hex, a.force);
  std::printf("wrote %s key to %s\n", a.hex ? "hex" : "raw",
              a.out.string().c_str());
  return kExitOk;
}

int RunEncrypt(const CryptArgs& a) {
  const MasterKey key = ReadKeyFile(a.key);
  PipelineOptions options;
  options.params.rounds = a.rounds;
  options.workers = a.workers;
  MappingStore store;
  spdlog::info("encrypting {} -> {}", a.input.string(), a.output.string());
  const EncryptSummary s = EncryptDataset(a.input, a.output, key, options, store);
  store.Save(a.map);
  if (!a.export_csv.empty()) store.ExportCsv(a.export_csv);
  if (!a.summary_json.empty()) WriteJson(a.summary_json, ToJson(s));

  std::printf("files            %zu\n", s.files);
  std::printf("records read     %zu\n", s.records_in);
  std::printf("records written  %zu\n", s.records_out);
  std::printf("parse errors     %zu\n", s.parse_errors);
  std::printf("dropped invalid  %zu\n", s.dropped_invalid);
  std::printf("passthrough      %zu\n", s.passthrough);
  for (ComponentKind k : kAllComponentKinds) {
    const auto i = static_cast<std::size_t>(k);
    const auto& cr = s.conflict_rates[i];
    std::printf("%-9s conflicts %llu  CR %.6f (%zu / %zu)\n",
                std::string(ComponentTag(k)).c_str(),
                static_cast<unsigned long long>(s.conflicts[i]), cr.value(),
                cr.conflicted, cr.distinct);
  }
  std::printf("elapsed          %.3f s\n", s.elapsed_seconds);
  return kExitOk;
}

int RunDecrypt(const CryptArgs& a) {
  const MasterKey key = ReadKeyFile(a.key);
  PipelineOptions options;
  options.params.rounds = a.rounds;
  options.workers = a.workers;
  const MappingStore store = MappingStore::Load(a.map);
  spdlog::info("decrypting {} -> {}", a.input.string(), a.output.string());
  const DecryptSummary s =
      DecryptDataset(a.input, a.output, key, options, store);
  if (!a.summary_json.empty()) WriteJson(a.summary_json, ToJson(s));

  std::printf("files            %zu\n", s.files);
  std::printf("records read     %zu\n", s.records);
  std::printf("records restored %zu\n", s.restored);
  std::printf("failures         %zu\n", s.failures);
  std::printf("fuzzy recoveries %zu\n", s.fuzzy_recoveries);
  std::printf("elapsed          %.3f s\n", s.elapsed_seconds);
  if (!s.ok()) {
    for (const auto& f : s.per_file) {
      if (f.errors > 0) {
        std::fprintf(stderr, "%s: %zu errors, see %s.errors\n",
                     f.file_name.c_str(), f.errors, f.file_name.c_str());
      }
    }
    return kExitPartial;
  }
  return kExitOk;
}

int RunSynth(const SynthArgs& a) {
  SynthConfig cfg;
  cfg.n_vehicles = a.vehicles;
  cfg.points_per_vehicle = a.points;
  cfg.hotspot_stddev_deg = a.stddev;
  cfg.walk_step_deg = a.walk_step;
  cfg.frac_digits = a.digits;
  cfg.seed = a.seed;
  cfg.centers = ParseCenters(a.centers);
  if (a.hotspots > 0) {
    const auto extra =
        RandomCenters(a.hotspots, cfg.region, a.min_separation, a.seed);
    cfg.centers.insert(cfg.centers.end(), extra.begin(), extra.end());
  }
  SynthGenerate(cfg, a.output);
  std::printf("wrote %d vehicles x %d points (%zu hotspots) to %s\n",
              cfg.n_vehicles, cfg.points_per_vehicle, cfg.centers.size(),
              a.output.string().c_str());
  return kExitOk;
}

int RunEvalRdr(const EvalArgs& a) {
  const auto [orig, enc] = LoadAligned(a.original, a.encrypted);
  RdrOptions options;
  options.n_samples = a.samples;
  options.seed = a.seed;
  const RdrReport r = EvaluateRdr(orig, enc, options, a.bin_width, a.workers);
  fs::create_directories(a.out);
  WriteJson(a.out / "rdr.json", ToJson(r));
  if (r.evaluated > 0) {
    WriteHistogramCsv(a.out / "rdr_histogram.csv", r.summary);
    WriteCdfCsv(a.out / "rdr_cdf.csv", r.summary);
  }
  std::printf("trajectories evaluated %zu, skipped %zu\n", r.evaluated,
              r.skipped);
  if (r.evaluated == 0) {
    std::printf("no trajectory with at least 4 points\n");
    return kExitPartial;
  }
  const RdrSummary& s = r.summary;
  std::printf("mean RDR   %.6f\n", s.mean);
  std::printf("std-dev    %.6f\n", s.stddev);
  std::printf("min / max  %.6f / %.6f\n", s.min, s.max);
  std::printf("Q1 / median / Q3  %.6f / %.6f / %.6f\n", s.q1, s.median, s.q3);
  std::printf("zero ratio %.6f (%zu of %zu)\n", s.zero_ratio, s.zero_count,
              s.count);
  return kExitOk;
}

std::vector<LonLat> Gather(const std::vector<Trajectory>& ts,
                           const std::vector<SampleIndex>& idx) {
  std::vector<LonLat> out;
  out.reserve(idx.size());
  for (const auto& i : idx) {
    out.push_back(ToLonLat(ts[i.trajectory].records[i.record].point));
  }
  return out;
}

int RunEvalHotspots(const EvalArgs& a) {
  const auto [orig, enc] = LoadAligned(a.original, a.encrypted);
  const auto dec = LoadAligned(a.original, a.decrypted).second;
  std::vector<std::size_t> sizes;
  std::size_t population = 0;
  for (std::size_t t = 0; t < orig.size(); ++t) {
    const std::size_t n = orig[t].records.size();
    if (enc[t].records.size() != n || dec[t].records.size() != n) {
      throw DomainError("trajectory " + orig[t].vehicle_id +
                        " has different point counts across datasets");
    }
    sizes.push_back(n);
    population += n;
  }
  const std::size_t n =
      a.sample_size == 0 ? population : std::min(a.sample_size, population);
  const auto idx = StratifiedSample(sizes, n, a.seed);

  HotspotOptions options;
  options.eps_deg = a.eps;
  options.min_pts = static_cast<std::size_t>(a.min_pts);
  options.match_radius_km = a.match_radius;
  const HotspotReport r = AnalyzeHotspots(Gather(orig, idx), Gather(enc, idx),
                                          Gather(dec, idx), options);
  fs::create_directories(a.out);
  WriteJson(a.out / "hotspots.json", ToJson(r));

  std::printf("sample size        %zu\n", r.sample_size);
  std::printf("original hotspots  %zu (eps %.6g)\n", r.original.cluster_count,
              r.original.eps);
  std::printf("encrypted hotspots %zu (eps %.6g)\n", r.encrypted.cluster_count,
              r.encrypted.eps);
  std::printf("decrypted hotspots %zu\n", r.decrypted.cluster_count);
  std::printf("reduction          %.2f%%\n", r.reduction_pct);
  PrintRate("matched           ", r.matched, r.original.cluster_count);
  std::printf("match accuracy     %.2f%%\n", 100.0 * r.match_accuracy);
  std::printf("mean distance      %.6f km\n", r.mean_match_distance_km);
  return kExitOk;
}

int RunEvalAccuracy(const EvalArgs& a) {
  const AccuracyReport r = EvaluateAccuracy(a.original, a.decrypted);
  fs::create_directories(a.out);
  WriteJson(a.out / "accuracy.json", ToJson(r));
  std::printf("total points   %zu\n", r.total_points);
  std::printf("exact matches  %zu\n", r.exact_matches);
  std::printf("OMR            %.4f%%\n", 100.0 * r.omr);
  std::printf("MMR            %.4f%%\n", 100.0 * r.mmr);
  PrintRate("files matched ", r.fully_matched_files, r.file_count);
  for (const auto& f : r.missing_files) {
    std::fprintf(stderr, "missing decrypted file %s\n", f.c_str());
  }
  return r.exact_matches == r.total_points ? kExitOk : kExitPartial;
}

void AddCryptOptions(CLI::App* cmd, CryptArgs& a, const char* input_help) {
  cmd->add_option("-i,--input", a.input, input_help)
      ->required()
      ->check(CLI::ExistingDirectory);
  cmd->add_option("-o,--output", a.output, "Output directory")->required();
  cmd->add_option("-k,--key", a.key, "Key file (.key raw or .hex)")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--rounds", a.rounds, "Cipher rounds")
      ->check(CLI::Range(1, 64))
      ->capture_default_str();
  cmd->add_option("--workers", a.workers, "Files processed concurrently")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
  cmd->add_option("--summary-json", a.summary_json,
                  "Also write the run summary as JSON");
}

}  // namespace

int Main(int argc, char** argv) {
  SetUpLogging();
  CLI::App app{"Format-preserving encryption of GPS trajectory datasets"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "geofpe 0.1.0");

  KeygenArgs keygen;
  auto* kg = app.add_subcommand("keygen", "Generate a 128-bit master key");
  kg->add_option("out", keygen.out, "Key file to create")->required();
  kg->add_flag("--hex", keygen.hex, "Write 32 hex digits instead of raw bytes");
  kg->add_flag("--force", keygen.force, "Overwrite an existing file");

  CryptArgs enc;
  auto* ec = app.add_subcommand("encrypt", "Encrypt a trajectory directory");
  AddCryptOptions(ec, enc, "Directory of id,datetime,lon,lat *.txt files");
  ec->add_option("-m,--map", enc.map, "Mapping store file to write")
      ->required();
  ec->add_option("--export-csv", enc.export_csv,
                 "Also export the mapping store as CSV");

  CryptArgs dec;
  auto* dc = app.add_subcommand("decrypt", "Decrypt an encrypted directory");
  AddCryptOptions(dc, dec, "Directory written by encrypt");
  dc->add_option("-m,--map", dec.map, "Mapping store written by encrypt")
      ->required()
      ->check(CLI::ExistingFile);

  SynthArgs synth;
  auto* sy = app.add_subcommand("synth", "Generate synthetic trajectories");
  sy->add_option("-o,--output", synth.output, "Output directory")->required();
  sy->add_option("--vehicles", synth.vehicles, "Number of vehicles")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sy->add_option("--points", synth.points, "Points per vehicle")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sy->add_option("--centers", synth.centers,
                 "Hotspot centers as \"lon,lat;lon,lat\"");
  sy->add_option("--hotspots", synth.hotspots,
                 "Additional random hotspot centers")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  sy->add_option("--min-separation", synth.min_separation,
                 "Minimum distance between random centers (degrees)")
      ->capture_default_str();
  sy->add_option("--stddev", synth.stddev, "Hotspot scatter (degrees)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sy->add_option("--walk-step", synth.walk_step,
                 "Random-walk step (degrees)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sy->add_option("--digits", synth.digits, "Fraction digits per coordinate")
      ->check(CLI::Range(0, 9))
      ->capture_default_str();
  sy->add_option("--seed", synth.seed, "Random seed")->capture_default_str();

  EvalArgs eval;
  auto* ev = app.add_subcommand("eval", "Evaluation reports");
  ev->require_subcommand(1);

  auto* er = ev->add_subcommand("rdr", "Relative distance retention");
  er->add_option("--original", eval.original, "Plaintext directory")
      ->required()
      ->check(CLI::ExistingDirectory);
  er->add_option("--encrypted", eval.encrypted, "Encrypted directory")
      ->required()
      ->check(CLI::ExistingDirectory);
  er->add_option("--samples", eval.samples, "Draws per trajectory")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  er->add_option("--seed", eval.seed, "Sampling seed")->capture_default_str();
  er->add_option("--workers", eval.workers, "Trajectories in parallel")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
  er->add_option("--bin-width", eval.bin_width, "Histogram bin width")
      ->check(CLI::Range(1e-6, 1.0))
      ->capture_default_str();
  er->add_option("--out", eval.out, "Report directory")->capture_default_str();

  auto* eh = ev->add_subcommand("hotspots", "DBSCAN hotspot comparison");
  eh->add_option("--original", eval.original, "Plaintext directory")
      ->required()
      ->check(CLI::ExistingDirectory);
  eh->add_option("--encrypted", eval.encrypted, "Encrypted directory")
      ->required()
      ->check(CLI::ExistingDirectory);
  eh->add_option("--decrypted", eval.decrypted, "Decrypted directory")
      ->required()
      ->check(CLI::ExistingDirectory);
  eh->add_option("--eps", eval.eps, "Neighborhood radius (degrees)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  eh->add_option("--min-pts", eval.min_pts, "Core point threshold")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  eh->add_option("--match-radius", eval.match_radius,
                 "Centroid matching radius (km)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  eh->add_option("--sample-size", eval.sample_size,
                 "Stratified sample size, 0 for every point")
      ->capture_default_str();
  eh->add_option("--seed", eval.seed, "Sampling seed")->capture_default_str();
  eh->add_option("--out", eval.out, "Report directory")->capture_default_str();

  auto* ea = ev->add_subcommand("accuracy", "Point-to-point exact matching");
  ea->add_option("--original", eval.original, "Plaintext directory")
      ->required()
      ->check(CLI::ExistingDirectory);
  ea->add_option("--decrypted", eval.decrypted, "Decrypted directory")
      ->required()
      ->check(CLI::ExistingDirectory);
  ea->add_option("--out", eval.out, "Report directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*kg) return RunKeygen(keygen);
    if (*ec) return RunEncrypt(enc);
    if (*dc) return RunDecrypt(dec);
    if (*sy) return RunSynth(synth);
    if (*er) return RunEvalRdr(eval);
    if (*eh) return RunEvalHotspots(eval);
    if (*ea) return RunEvalAccuracy(eval);
  } catch (const ParseError& e) {
    spdlog::error("{}", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return kExitPartial;
  }
  return kExitUsage;
}

}  // namespace geofpe::cli

int main(int argc, char** argv) { return geofpe::cli::Main(argc, argv); }
