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

#ifndef GEOFPE_CIPHER_H_
#define GEOFPE_CIPHER_H_

#include <array>
#include <cstdint>
#include <string_view>

#include "geofpe/component.h"
#include "geofpe/decimal.h"
#include "geofpe/sm4_key_schedule.h"

namespace geofpe {

using Tweak = std::uint32_t;
using Md5Digest = std::array<std::uint8_t, 16>;

Md5Digest Md5(std::string_view data);

// Big-endian first four bytes of
//   MD5(tag || ':' || value_text || MD5(key_bytes))
// where the key hash is the raw 16-byte digest.
Tweak ComputeTweak(std::string_view tag, std::string_view value_text,
                   const MasterKey& key);
// Same, with MD5(key_bytes) already computed.
Tweak ComputeTweak(std::string_view tag, std::string_view value_text,
                   const Md5Digest& key_digest);

// Round-key index for round `round`: (round + tweak mod 32) mod 32.
constexpr std::size_t KeyIndex(std::uint32_t round, Tweak t) {
  return (round + (t & 31u)) & 31u;
}

// Rotation amount in [1, 7]: ((round xor tweak mod 8) mod 7) + 1.
constexpr int ShiftAmount(std::uint32_t round, Tweak t) {
  return static_cast<int>(((round ^ (t & 7u)) % 7u) + 1u);
}

struct CipherParams {
  int rounds = 8;
};

inline constexpr int kMinMaskWidth = 3;
inline constexpr int kMaxMaskWidth = 63;

// Tweak-keyed round network on [0, 2^width). The input is first XORed with
// the tweak, then each round XORs a tweak-selected round key and rotates left
// inside `width` bits. Throws DomainError when value or width is out of range.
std::uint64_t EncryptRounds(std::uint64_t value, int width, Tweak t,
                            const RoundKeySchedule& ks,
                            const CipherParams& params);

// Exact inverse of EncryptRounds.
std::uint64_t DecryptRounds(std::uint64_t value, int width, Tweak t,
                            const RoundKeySchedule& ks,
                            const CipherParams& params);

// Encrypts coordinate components under one master key. Immutable after
// construction and safe to share between threads.
class ComponentCipher {
 public:
  explicit ComponentCipher(const MasterKey& key, CipherParams params = {});

  // Masks, encrypts and constrains one component. `frac_digits` is only
  // meaningful for fraction kinds, whose value must be < 10^frac_digits.
  // Integer kinds keep the plaintext's digit class; fraction kinds stay
  // below 10^frac_digits.
  std::uint64_t EncryptComponent(std::uint64_t value, ComponentKind kind,
                                 int frac_digits) const;

  // Encrypts both axes of a point. Signs pass through unchanged.
  GeoPoint EncryptPoint(const GeoPoint& p) const;

  Tweak TweakFor(ComponentKind kind, std::uint64_t value) const;

  const RoundKeySchedule& schedule() const { return schedule_; }
  const CipherParams& params() const { return params_; }

 private:
  MasterKey key_;
  Md5Digest key_digest_;
  RoundKeySchedule schedule_;
  CipherParams params_;
};

}  // namespace geofpe

#endif  // GEOFPE_CIPHER_H_
