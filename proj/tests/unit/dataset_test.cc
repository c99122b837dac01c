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

#include "geofpe/dataset.h"

#include <gtest/gtest.h>

#include <charconv>
#include <cstring>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "geofpe/errors.h"
#include "test_util.h"

namespace geofpe {
namespace {

TEST(ParseLineTest, TdriveSample) {
  const std::string line = "1,2008-02-02 15:36:08,116.51172,39.92123";
  const TrajectoryRecord r = ParseLine(line);
  EXPECT_EQ(r.vehicle_id, "1");
  EXPECT_EQ(r.timestamp, "2008-02-02 15:36:08");
  EXPECT_EQ(r.point.lon, (DecimalNumber{1, 116, 51172, 5}));
  EXPECT_EQ(r.point.lat, (DecimalNumber{1, 39, 92123, 5}));

  // Cross-check against the standard library's own decimal reader.
  for (const char* text : {"116.51172", "39.92123"}) {
    double expect = 0;
    std::from_chars(text, text + std::strlen(text), expect);
    EXPECT_DOUBLE_EQ(ToDouble(Decompose(text)), expect);
  }
  EXPECT_EQ(FormatLine(r), line);
}

TEST(ParseLineTest, Errors) {
  EXPECT_THROW(ParseLine("1,t,116.5"), ParseError);
  EXPECT_THROW(ParseLine("1,t,abc,39.9"), ParseError);
  EXPECT_THROW(ParseLine("1,t,116.5,39.9,7"), ParseError);
  EXPECT_THROW(ParseLine(",t,116.5,39.9"), ParseError);
  EXPECT_THROW(ParseLine(""), ParseError);
}

TEST(ParseLineTest, IgnoresCarriageReturn) {
  EXPECT_EQ(ParseLine("7,t,1.5,2.25\r").point.lat.frac_value, 25u);
}

TEST(ParseEncryptedLineTest, RoundTrip) {
  const std::string line = "42,1,2008-02-02 15:36:08,124.69185,68.71026";
  const TrajectoryRecord r = ParseEncryptedLine(line);
  EXPECT_EQ(r.coord_id, 42u);
  EXPECT_EQ(r.vehicle_id, "1");
  EXPECT_EQ(FormatEncryptedLine(r), line);
  EXPECT_THROW(ParseEncryptedLine("x,1,t,1.0,2.0"), ParseError);
  EXPECT_THROW(ParseEncryptedLine("-1,1,t,1.0,2.0"), ParseError);
  EXPECT_THROW(ParseEncryptedLine("1,t,1.0,2.0"), ParseError);
}

TrajectoryRecord Rec(const char* lon, const char* lat) {
  TrajectoryRecord r;
  r.vehicle_id = "v";
  r.timestamp = "t";
  r.point = {Decompose(lon), Decompose(lat)};
  return r;
}

TEST(CleanTest, Examples) {
  auto res = Clean({Rec("116.5", "39.9"), Rec("181", "0")});
  EXPECT_EQ(res.kept.size(), 1u);
  EXPECT_EQ(res.dropped, 1u);
  EXPECT_EQ(res.kept[0], Rec("116.5", "39.9"));

  res = Clean({Rec("1", "2"), Rec("-3", "-4")});
  EXPECT_EQ(res.kept.size(), 2u);
  EXPECT_EQ(res.dropped, 0u);

  res = Clean({});
  EXPECT_TRUE(res.kept.empty());
  EXPECT_EQ(res.dropped, 0u);
}

TEST(ReadTrajectoryFileTest, CollectsErrorsWithLineNumbers) {
  testing::TempDir dir;
  testing::WriteFile(dir / "3.txt",
                     "3,t1,116.1,39.1\n"
                     "3,t2,bad,39.1\n"
                     "\n"
                     "3,t3,181.0,39.1\n"
                     "3,t4,116.2,39.2\n");
  const ParsedFile f = ReadTrajectoryFile(dir / "3.txt");
  EXPECT_EQ(f.file_name, "3.txt");
  ASSERT_EQ(f.records.size(), 2u);
  EXPECT_EQ(f.line_numbers, (std::vector<std::size_t>{1, 5}));
  EXPECT_EQ(f.parse_errors, 1u);
  EXPECT_EQ(f.dropped_invalid, 1u);
  ASSERT_EQ(f.errors.size(), 2u);
  EXPECT_EQ(f.errors[0].line_number, 2u);
  EXPECT_EQ(f.errors[1].line_number, 4u);
  EXPECT_EQ(f.errors[1].reason, "longitude out of range");
}

TEST(ErrorSidecarTest, WritesAndClears) {
  testing::TempDir dir;
  const std::vector<LineError> errors = {{2, "bad"}, {9, "worse"}};
  WriteErrorSidecar(dir.path(), "a.txt", errors);
  EXPECT_EQ(testing::ReadFile(dir / "a.txt.errors"), "2: bad\n9: worse\n");
  WriteErrorSidecar(dir.path(), "a.txt", {});
  EXPECT_FALSE(std::filesystem::exists(dir / "a.txt.errors"));
}

TEST(ListTrajectoryFilesTest, SortedTxtOnly) {
  testing::TempDir dir;
  for (const char* name : {"b.txt", "a.txt", "10.txt", "2.txt", "x.errors",
                           "y.csv"}) {
    testing::WriteFile(dir / name, "");
  }
  std::filesystem::create_directories(dir / "sub.txt");
  std::vector<std::string> names;
  for (const auto& p : ListTrajectoryFiles(dir.path())) {
    names.push_back(p.filename().string());
  }
  EXPECT_EQ(names, (std::vector<std::string>{"10.txt", "2.txt", "a.txt",
                                             "b.txt"}));
}

TEST(LoadTrajectoriesTest, MixedLayoutsAndEmptyFiles) {
  testing::TempDir dir;
  testing::WriteFile(dir / "1.txt", "1,t,116.1,39.1\n1,t,116.2,39.2\n");
  testing::WriteFile(dir / "2.txt", "0,2,t,116.1,39.1\n");
  testing::WriteFile(dir / "3.txt", "");
  const auto ts = LoadTrajectories(dir.path());
  ASSERT_EQ(ts.size(), 3u);
  EXPECT_EQ(ts[0].records.size(), 2u);
  EXPECT_EQ(ts[1].vehicle_id, "2");
  EXPECT_EQ(ts[1].records.size(), 1u);
  EXPECT_EQ(ts[2].vehicle_id, "3");
  EXPECT_TRUE(ts[2].records.empty());
}

TEST(ProportionalQuotasTest, Examples) {
  const std::vector<std::size_t> equal = {50, 50};
  EXPECT_EQ(ProportionalQuotas(equal, 10), (std::vector<std::size_t>{5, 5}));
  const std::vector<std::size_t> one = {7};
  EXPECT_EQ(ProportionalQuotas(one, 7), (std::vector<std::size_t>{7}));
  const std::vector<std::size_t> thirds = {1, 1, 1};
  EXPECT_EQ(ProportionalQuotas(thirds, 2), (std::vector<std::size_t>{1, 1, 0}));
  EXPECT_THROW(ProportionalQuotas(equal, 101), DomainError);
  const std::vector<std::size_t> none;
  EXPECT_TRUE(ProportionalQuotas(none, 0).empty());
}

// Largest remainder in exact integer arithmetic: every quota is the floor or
// the floor plus one of n*s/N, and no stratum that missed the extra unit has
// a strictly larger remainder than one that got it.
TEST(ProportionalQuotasTest, LargestRemainderOracle) {
  std::mt19937_64 rng(8);
  for (int iter = 0; iter < 500; ++iter) {
    std::vector<std::size_t> sizes(1 + rng() % 20);
    for (auto& s : sizes) s = rng() % 1000;
    const std::size_t pop = std::accumulate(sizes.begin(), sizes.end(),
                                            std::size_t{0});
    const std::size_t n = pop == 0 ? 0 : rng() % (pop + 1);
    const auto q = ProportionalQuotas(sizes, n);
    ASSERT_EQ(std::accumulate(q.begin(), q.end(), std::size_t{0}), n);
    if (pop == 0) continue;
    std::uint64_t max_rem_missed = 0;
    std::uint64_t min_rem_bumped = UINT64_MAX;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      const std::uint64_t scaled = std::uint64_t{n} * sizes[i];
      const std::uint64_t floor = scaled / pop;
      const std::uint64_t rem = scaled % pop;
      ASSERT_TRUE(q[i] == floor || q[i] == floor + 1);
      ASSERT_LE(q[i], sizes[i]);
      if (q[i] == floor) {
        max_rem_missed = std::max(max_rem_missed, rem);
      } else {
        min_rem_bumped = std::min(min_rem_bumped, rem);
      }
    }
    if (min_rem_bumped != UINT64_MAX) {
      ASSERT_GE(min_rem_bumped, max_rem_missed);
    }
  }
}

TEST(StratifiedSampleTest, EqualStrata) {
  const std::vector<std::size_t> sizes = {50, 50};
  const auto s = StratifiedSample(sizes, 10, 123);
  ASSERT_EQ(s.size(), 10u);
  std::map<std::size_t, std::set<std::size_t>> per;
  for (const auto& i : s) {
    ASSERT_LT(i.record, 50u);
    per[i.trajectory].insert(i.record);
  }
  EXPECT_EQ(per[0].size(), 5u);
  EXPECT_EQ(per[1].size(), 5u);
}

TEST(StratifiedSampleTest, FullPopulationIsIdentity) {
  const std::vector<std::size_t> sizes = {17};
  const auto s = StratifiedSample(sizes, 17, 5);
  ASSERT_EQ(s.size(), 17u);
  for (std::size_t k = 0; k < 17; ++k) EXPECT_EQ(s[k], (SampleIndex{0, k}));
}

TEST(StratifiedSampleTest, ReproducibleAndSeedSensitive) {
  const std::vector<std::size_t> sizes = {100, 250, 3, 40};
  const auto a = StratifiedSample(sizes, 120, 42);
  EXPECT_EQ(a, StratifiedSample(sizes, 120, 42));
  EXPECT_NE(a, StratifiedSample(sizes, 120, 43));
  // Sorted, distinct.
  for (std::size_t k = 1; k < a.size(); ++k) {
    EXPECT_TRUE(a[k - 1].trajectory < a[k].trajectory ||
                (a[k - 1].trajectory == a[k].trajectory &&
                 a[k - 1].record < a[k].record));
  }
}

TEST(StratifiedSampleTest, WithinStratumDrawIsUniform) {
  const std::vector<std::size_t> sizes = {10};
  std::vector<int> hits(10, 0);
  constexpr int kTrials = 20000;
  for (int seed = 0; seed < kTrials; ++seed) {
    ++hits[StratifiedSample(sizes, 1, static_cast<std::uint64_t>(seed))[0].record];
  }
  // Chi-square with 9 degrees of freedom; 27.9 is the 0.999 quantile.
  double chi2 = 0;
  for (int h : hits) chi2 += (h - kTrials / 10.0) * (h - kTrials / 10.0) / (kTrials / 10.0);
  EXPECT_LT(chi2, 27.9);
}

TEST(StratifiedSampleTest, OversizedRequestFails) {
  const std::vector<std::size_t> sizes = {3, 4};
  EXPECT_THROW(StratifiedSample(sizes, 8, 1), DomainError);
}

}  // namespace
}  // namespace geofpe
