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

#include <openssl/evp.h>

#include <string>

#include "geofpe/errors.h"
#include "geofpe/range_constraint.h"

namespace geofpe {
namespace {

std::uint64_t WidthMask(int width) { return (std::uint64_t{1} << width) - 1; }

void CheckDomain(std::uint64_t value, int width) {
  if (width < kMinMaskWidth || width > kMaxMaskWidth) {
    throw DomainError("mask width " + std::to_string(width) +
                      " outside [3, 63]");
  }
  if (value > WidthMask(width)) {
    throw DomainError("value " + std::to_string(value) + " does not fit in " +
                      std::to_string(width) + " bits");
  }
}

int RotationFor(std::uint32_t round, Tweak t, int width) {
  const int s = ShiftAmount(round, t) % width;
  return s == 0 ? 1 : s;
}

std::uint64_t RotateLeft(std::uint64_t x, int s, int width) {
  return ((x << s) | (x >> (width - s))) & WidthMask(width);
}

std::uint64_t RotateRight(std::uint64_t x, int s, int width) {
  return ((x >> s) | (x << (width - s))) & WidthMask(width);
}

}  // namespace

Md5Digest Md5(std::string_view data) {
  Md5Digest out{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_md5(),
                 nullptr) != 1 ||
      len != out.size()) {
    throw Error("MD5 digest failed");
  }
  return out;
}

Tweak ComputeTweak(std::string_view tag, std::string_view value_text,
                   const Md5Digest& key_digest) {
  std::string buf;
  buf.reserve(tag.size() + 1 + value_text.size() + key_digest.size());
  buf.append(tag);
  buf.push_back(':');
  buf.append(value_text);
  buf.append(reinterpret_cast<const char*>(key_digest.data()),
             key_digest.size());
  const Md5Digest h = Md5(buf);
  return (Tweak{h[0]} << 24) | (Tweak{h[1]} << 16) | (Tweak{h[2]} << 8) |
         Tweak{h[3]};
}

Tweak ComputeTweak(std::string_view tag, std::string_view value_text,
                   const MasterKey& key) {
  const auto& kb = key.bytes();
  return ComputeTweak(
      tag, value_text,
      Md5(std::string_view(reinterpret_cast<const char*>(kb.data()),
                           kb.size())));
}

std::uint64_t EncryptRounds(std::uint64_t value, int width, Tweak t,
                            const RoundKeySchedule& ks,
                            const CipherParams& params) {
  CheckDomain(value, width);
  const std::uint64_t mask = WidthMask(width);
  std::uint64_t x = (value ^ t) & mask;
  for (int i = 0; i < params.rounds; ++i) {
    const auto round = static_cast<std::uint32_t>(i);
    x ^= ks[KeyIndex(round, t)] & mask;
    x = RotateLeft(x, RotationFor(round, t, width), width);
  }
  return x;
}

std::uint64_t DecryptRounds(std::uint64_t value, int width, Tweak t,
                            const RoundKeySchedule& ks,
                            const CipherParams& params) {
  CheckDomain(value, width);
  const std::uint64_t mask = WidthMask(width);
  std::uint64_t x = value;
  for (int i = params.rounds - 1; i >= 0; --i) {
    const auto round = static_cast<std::uint32_t>(i);
    x = RotateRight(x, RotationFor(round, t, width), width);
    x ^= ks[KeyIndex(round, t)] & mask;
  }
  return (x ^ t) & mask;
}

ComponentCipher::ComponentCipher(const MasterKey& key, CipherParams params)
    : key_(key),
      key_digest_(Md5(std::string_view(
          reinterpret_cast<const char*>(key.bytes().data()),
          key.bytes().size()))),
      schedule_(DeriveRoundKeys(key)),
      params_(params) {
  if (params_.rounds < 0) throw DomainError("round count must be >= 0");
}

Tweak ComponentCipher::TweakFor(ComponentKind kind, std::uint64_t value) const {
  return ComputeTweak(ComponentTag(kind), std::to_string(value), key_digest_);
}

std::uint64_t ComponentCipher::EncryptComponent(std::uint64_t value,
                                                ComponentKind kind,
                                                int frac_digits) const {
  const bool is_int = IsIntegerPart(kind);
  if (!is_int && value >= Pow10(frac_digits)) {
    throw DomainError("fraction value " + std::to_string(value) +
                      " does not fit in " + std::to_string(frac_digits) +
                      " digits");
  }
  const int width = MaskWidth(value, is_int, frac_digits);
  const Tweak t = TweakFor(kind, value);
  const std::uint64_t c =
      EncryptRounds(value & WidthMask(width), width, t, schedule_, params_);
  if (is_int) {
    return ConstrainRange(c, ClassifyRange(value, IsLongitude(kind), true));
  }
  return ConstrainFraction(c, frac_digits);
}

GeoPoint ComponentCipher::EncryptPoint(const GeoPoint& p) const {
  GeoPoint out = p;
  out.lon.int_part =
      EncryptComponent(p.lon.int_part, ComponentKind::kLonInt, 0);
  out.lon.frac_value = EncryptComponent(p.lon.frac_value,
                                        ComponentKind::kLonFrac,
                                        p.lon.frac_digits);
  out.lat.int_part =
      EncryptComponent(p.lat.int_part, ComponentKind::kLatInt, 0);
  out.lat.frac_value = EncryptComponent(p.lat.frac_value,
                                        ComponentKind::kLatFrac,
                                        p.lat.frac_digits);
  return out;
}

}  // namespace geofpe
