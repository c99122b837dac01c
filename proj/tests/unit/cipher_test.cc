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

#include "geofpe/cipher.h"

#include <gtest/gtest.h>

#include <bit>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "geofpe/decimal.h"
#include "geofpe/errors.h"
#include "geofpe/range_constraint.h"

namespace geofpe {
namespace {

// Frozen from the first build that passed the reference comparison.
constexpr std::uint64_t kGoldenCipher = 7837;

MasterKey ZeroKey() { return MasterKey(MasterKey::Bytes{}); }

MasterKey TestKey() {
  return MasterKey::FromHex("0123456789ABCDEFFEDCBA9876543210");
}

std::string Hex(const Md5Digest& d) {
  static const char* kDigits = "0123456789abcdef";
  std::string s;
  for (auto b : d) {
    s += kDigits[b >> 4];
    s += kDigits[b & 15];
  }
  return s;
}

TEST(Md5Test, RfcVectors) {
  EXPECT_EQ(Hex(Md5("")), "d41d8cd98f00b204e9800998ecf8427e");
  EXPECT_EQ(Hex(Md5("abc")), "900150983cd24fb0d6963f7d28e17f72");
  EXPECT_EQ(Hex(Md5("message digest")), "f96b697d7cb7938d525a2f31aaf161d0");
}

TEST(TweakTest, GoldenValues) {
  // First four bytes of MD5("lon_int:116" || MD5(0^16)), from hashlib.
  EXPECT_EQ(ComputeTweak("lon_int", "116", ZeroKey()), 0x315E5B1Eu);
  EXPECT_EQ(ComputeTweak("lat_int", "116", ZeroKey()), 0x33366D50u);
}

TEST(TweakTest, DeterministicAndTagSeparated) {
  const MasterKey k = TestKey();
  EXPECT_EQ(ComputeTweak("lon_frac", "92123", k),
            ComputeTweak("lon_frac", "92123", k));
  EXPECT_NE(ComputeTweak("lon_int", "116", k), ComputeTweak("lat_int", "116", k));
  const ComponentCipher c(k);
  EXPECT_EQ(c.TweakFor(ComponentKind::kLonInt, 116),
            ComputeTweak("lon_int", "116", k));
  EXPECT_EQ(c.TweakFor(ComponentKind::kLatFrac, 4),
            ComputeTweak("lat_frac", "4", k));
}

TEST(KeyIndexTest, Examples) {
  EXPECT_EQ(KeyIndex(0, 0), 0u);
  EXPECT_EQ(KeyIndex(3, 30), 1u);
  EXPECT_EQ(KeyIndex(3, 0xFFFFFFE0u | 30u), 1u);
  EXPECT_EQ(KeyIndex(0, 0x12345678u), 0x18u);
  EXPECT_EQ(KeyIndex(0, 0x87654321u), 0x01u);
  for (std::uint32_t i = 0; i < 32; ++i) {
    EXPECT_NE(KeyIndex(i, 0x12345678u), KeyIndex(i, 0x87654321u));
  }
}

TEST(ShiftAmountTest, Examples) {
  EXPECT_EQ(ShiftAmount(0, 0), 1);
  EXPECT_EQ(ShiftAmount(6, 6), 1);
  for (std::uint32_t i = 0; i < 64; ++i) {
    for (Tweak t = 0; t < 8; ++t) {
      const int s = ShiftAmount(i, t);
      EXPECT_GE(s, 1);
      EXPECT_LE(s, 7);
      EXPECT_EQ(s, static_cast<int>(((i ^ t) % 7) + 1));
    }
  }
}

// Straight transcription of the round description, used as an oracle.
std::uint64_t ReferenceEncrypt(std::uint64_t v, int w, Tweak t,
                               const RoundKeySchedule& ks, int rounds) {
  const std::uint64_t mask = (std::uint64_t{1} << w) - 1;
  std::uint64_t x = (v ^ t) & mask;
  for (int i = 0; i < rounds; ++i) {
    x = (x ^ (ks[(i + t % 32) % 32] & mask));
    int s = static_cast<int>(((static_cast<std::uint32_t>(i) ^ (t % 8)) % 7) + 1) % w;
    if (s == 0) s = 1;
    std::uint64_t r = x;
    for (int k = 0; k < s; ++k) r = ((r << 1) | (r >> (w - 1))) & mask;
    x = r;
  }
  return x;
}

TEST(EncryptRoundsTest, MatchesReference) {
  const auto ks = DeriveRoundKeys(TestKey());
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 5000; ++iter) {
    const int w = 3 + static_cast<int>(rng() % 61);
    const std::uint64_t v = rng() & ((std::uint64_t{1} << w) - 1);
    const auto t = static_cast<Tweak>(rng());
    const int rounds = static_cast<int>(rng() % 12);
    ASSERT_EQ(EncryptRounds(v, w, t, ks, {rounds}),
              ReferenceEncrypt(v, w, t, ks, rounds));
  }
}

TEST(EncryptRoundsTest, ZeroRoundsIsInitialMix) {
  const auto ks = DeriveRoundKeys(TestKey());
  const CipherParams none{0};
  for (std::uint64_t v = 0; v < 256; ++v) {
    EXPECT_EQ(EncryptRounds(v, 8, 0xDEADBEEFu, ks, none), (v ^ 0xEFu) & 0xFFu);
    EXPECT_EQ(DecryptRounds(v, 8, 0xDEADBEEFu, ks, none), (v ^ 0xEFu) & 0xFFu);
  }
}

TEST(EncryptRoundsTest, GoldenTriple) {
  const auto ks = DeriveRoundKeys(TestKey());
  EXPECT_EQ(EncryptRounds(92123, 17, 0x315E5B1Eu, ks, {}), kGoldenCipher);
}

TEST(EncryptRoundsTest, PermutationForSmallWidths) {
  const auto ks = DeriveRoundKeys(TestKey());
  std::mt19937_64 rng(3);
  for (int w = 3; w <= 10; ++w) {
    for (int k = 0; k < 16; ++k) {
      const auto t = static_cast<Tweak>(rng());
      const std::uint64_t n = std::uint64_t{1} << w;
      std::vector<bool> seen(n, false);
      for (std::uint64_t v = 0; v < n; ++v) {
        const std::uint64_t c = EncryptRounds(v, w, t, ks, {});
        ASSERT_LT(c, n);
        ASSERT_FALSE(seen[c]) << "w=" << w << " collision";
        seen[c] = true;
        ASSERT_EQ(DecryptRounds(c, w, t, ks, {}), v);
      }
    }
  }
}

TEST(EncryptRoundsTest, InverseOnRandomSamples) {
  const auto ks = DeriveRoundKeys(MasterKey::FromHex("00112233445566778899aabbccddeeff"));
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 1000; ++iter) {
    const int w = 3 + static_cast<int>(rng() % 61);
    const std::uint64_t v = rng() & ((std::uint64_t{1} << w) - 1);
    const auto t = static_cast<Tweak>(rng());
    const CipherParams p{1 + static_cast<int>(rng() % 16)};
    ASSERT_EQ(DecryptRounds(EncryptRounds(v, w, t, ks, p), w, t, ks, p), v);
  }
}

TEST(EncryptRoundsTest, RejectsOutOfDomain) {
  const auto ks = DeriveRoundKeys(TestKey());
  EXPECT_THROW(EncryptRounds(256, 8, 0, ks, {}), DomainError);
  EXPECT_THROW(EncryptRounds(1, 2, 0, ks, {}), DomainError);
  EXPECT_THROW(EncryptRounds(1, 64, 0, ks, {}), DomainError);
  EXPECT_THROW(DecryptRounds(256, 8, 0, ks, {}), DomainError);
}

// Tweak bits at or above w are discarded by the initial mask and never
// reach the round keys or shifts, so only bits below w are examined.
TEST(EncryptRoundsTest, TweakBitAvalanche) {
  const auto ks = DeriveRoundKeys(TestKey());
  constexpr int kWidth = 16;
  const Tweak base = 0x5A3C96E1u;
  for (int bit = 0; bit < kWidth; ++bit) {
    const Tweak flipped = base ^ (Tweak{1} << bit);
    int changed = 0;
    for (std::uint64_t v = 0; v < (1u << kWidth); ++v) {
      changed += EncryptRounds(v, kWidth, base, ks, {}) !=
                 EncryptRounds(v, kWidth, flipped, ks, {});
    }
    EXPECT_GE(changed, 0.95 * (1u << kWidth)) << "bit " << bit;
  }
}

TEST(ComponentCipherTest, IntegerClosure) {
  const ComponentCipher c(TestKey());
  for (std::uint64_t v = 0; v <= 180; ++v) {
    const auto e = c.EncryptComponent(v, ComponentKind::kLonInt, 0);
    const auto iv = TargetInterval(ClassifyRange(v, true, true));
    EXPECT_GE(e, iv.lo);
    EXPECT_LT(e, iv.hi);
  }
  for (std::uint64_t v = 0; v <= 90; ++v) {
    const auto e = c.EncryptComponent(v, ComponentKind::kLatInt, 0);
    const auto iv = TargetInterval(ClassifyRange(v, false, true));
    EXPECT_GE(e, iv.lo);
    EXPECT_LT(e, iv.hi);
  }
  const auto e = c.EncryptComponent(116, ComponentKind::kLonInt, 0);
  EXPECT_GE(e, 100u);
  EXPECT_LT(e, 180u);
}

TEST(ComponentCipherTest, FractionClosure) {
  const ComponentCipher c(TestKey());
  EXPECT_LT(c.EncryptComponent(92123, ComponentKind::kLatFrac, 5), 100000u);
  std::mt19937_64 rng(5);
  for (int d = 0; d <= 18; ++d) {
    for (int k = 0; k < 200; ++k) {
      const std::uint64_t v = rng() % Pow10(d);
      ASSERT_LT(c.EncryptComponent(v, ComponentKind::kLonFrac, d), Pow10(d));
    }
  }
  EXPECT_THROW(c.EncryptComponent(100000, ComponentKind::kLatFrac, 5),
               DomainError);
}

TEST(ComponentCipherTest, ComposesTheStages) {
  const MasterKey key = TestKey();
  const ComponentCipher c(key);
  const auto ks = DeriveRoundKeys(key);
  std::mt19937_64 rng(17);
  for (int k = 0; k < 2000; ++k) {
    const int d = 1 + static_cast<int>(rng() % 9);
    const std::uint64_t v = rng() % Pow10(d);
    const int w = MaskWidth(v, false, d);
    const Tweak t = ComputeTweak("lat_frac", std::to_string(v), key);
    const std::uint64_t expect = ConstrainFraction(
        ReferenceEncrypt(v & ((std::uint64_t{1} << w) - 1), w, t, ks, 8), d);
    ASSERT_EQ(c.EncryptComponent(v, ComponentKind::kLatFrac, d), expect);
  }
  for (std::uint64_t v = 0; v <= 180; ++v) {
    const Tweak t = ComputeTweak("lon_int", std::to_string(v), key);
    const std::uint64_t expect = ConstrainRange(
        ReferenceEncrypt(v, 16, t, ks, 8), ClassifyRange(v, true, true));
    ASSERT_EQ(c.EncryptComponent(v, ComponentKind::kLonInt, 0), expect);
  }
}

TEST(ComponentCipherTest, PointKeepsSignsAndDigits) {
  const ComponentCipher c(TestKey());
  const GeoPoint p{Decompose("-116.51172"), Decompose("-39.004")};
  const GeoPoint e = c.EncryptPoint(p);
  EXPECT_TRUE(e.lon.negative());
  EXPECT_TRUE(e.lat.negative());
  EXPECT_EQ(e.lon.frac_digits, 5);
  EXPECT_EQ(e.lat.frac_digits, 3);
  EXPECT_EQ(ValidatePoint(e), PointValidity::kValid);
  EXPECT_EQ(c.EncryptPoint(p), e);
  EXPECT_EQ(std::to_string(e.lon.int_part).size(), 3u);
  EXPECT_EQ(std::to_string(e.lat.int_part).size(), 2u);
}

TEST(ComponentCipherTest, KeyChangesOutput) {
  const ComponentCipher a(TestKey());
  const ComponentCipher b(ZeroKey());
  int differ = 0;
  for (std::uint64_t v = 0; v < 1000; ++v) {
    differ += a.EncryptComponent(v, ComponentKind::kLonFrac, 5) !=
              b.EncryptComponent(v, ComponentKind::kLonFrac, 5);
  }
  EXPECT_GT(differ, 950);
}

}  // namespace
}  // namespace geofpe
