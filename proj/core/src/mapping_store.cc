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

#include "geofpe/mapping_store.h"

#include <zlib.h>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iterator>
#include <mutex>
#include <string>
#include <unordered_map>

#include "geofpe/errors.h"

namespace geofpe {
namespace {

constexpr std::size_t kShards = 64;
constexpr char kMagic[] = "GFPEMAP1";
constexpr std::size_t kMagicLen = 8;
constexpr std::size_t kEntryBytes = 1 + 8 + 8 + 8 + 1;

std::uint64_t Mix(std::uint64_t x) {
  // splitmix64 finalizer
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

struct CompositeKey {
  std::uint64_t coord_id;
  std::uint64_t enc_value;
  friend bool operator==(const CompositeKey&, const CompositeKey&) = default;
};

struct CompositeKeyHash {
  std::size_t operator()(const CompositeKey& k) const {
    return static_cast<std::size_t>(Mix(k.coord_id ^ Mix(k.enc_value)));
  }
};

struct Stored {
  std::uint64_t orig_value;
  std::uint8_t frac_digits;
};

void PutLe(std::string& out, std::uint64_t v, int bytes) {
  for (int i = 0; i < bytes; ++i) {
    out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
  }
}

std::uint64_t GetLe(const std::string& in, std::size_t pos, int bytes) {
  std::uint64_t v = 0;
  for (int i = 0; i < bytes; ++i) {
    v |= std::uint64_t{static_cast<unsigned char>(in[pos + i])} << (8 * i);
  }
  return v;
}

std::uint32_t Crc32(const char* data, std::size_t len) {
  uLong crc = crc32(0L, Z_NULL, 0);
  while (len > 0) {
    const auto chunk = static_cast<uInt>(std::min<std::size_t>(len, 1u << 30));
    crc = crc32(crc, reinterpret_cast<const Bytef*>(data), chunk);
    data += chunk;
    len -= chunk;
  }
  return static_cast<std::uint32_t>(crc);
}

}  // namespace

struct MappingStore::KindTable {
  struct Shard {
    mutable std::mutex mu;
    std::unordered_map<CompositeKey, Stored, CompositeKeyHash> exact;
    // enc value -> distinct originals, in insertion order.
    std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> by_enc;
  };
  std::array<Shard, kShards> shards;
  std::atomic<std::uint64_t> conflicts{0};

  Shard& ShardFor(std::uint64_t enc_value) {
    return shards[Mix(enc_value) % kShards];
  }
  const Shard& ShardFor(std::uint64_t enc_value) const {
    return shards[Mix(enc_value) % kShards];
  }
};

MappingStore::MappingStore() {
  for (auto& t : tables_) t = std::make_unique<KindTable>();
}

MappingStore::~MappingStore() = default;
MappingStore::MappingStore(MappingStore&&) noexcept = default;
MappingStore& MappingStore::operator=(MappingStore&&) noexcept = default;

MappingStore::KindTable& MappingStore::table(ComponentKind kind) const {
  return *tables_[static_cast<std::size_t>(kind)];
}

MappingStore::RecordOutcome MappingStore::Record(ComponentKind kind,
                                                 std::uint64_t coord_id,
                                                 std::uint64_t enc_value,
                                                 std::uint64_t orig_value,
                                                 int frac_digits) {
  KindTable& t = table(kind);
  // Both maps for an enc value live in the same shard, so the integrity check
  // and the conflict decision happen under one lock.
  auto& shard = t.ShardFor(enc_value);
  std::lock_guard<std::mutex> lock(shard.mu);

  const CompositeKey key{coord_id, enc_value};
  auto [it, inserted] = shard.exact.try_emplace(
      key, Stored{orig_value, static_cast<std::uint8_t>(frac_digits)});
  if (!inserted) {
    if (it->second.orig_value != orig_value) {
      throw IntegrityError(
          std::string("composite key (") + std::to_string(coord_id) + ", " +
          std::to_string(enc_value) + ") of " +
          std::string(ComponentTag(kind)) + " already maps to " +
          std::to_string(it->second.orig_value) + ", refusing " +
          std::to_string(orig_value));
    }
    return RecordOutcome::kFresh;
  }

  auto& originals = shard.by_enc[enc_value];
  if (std::find(originals.begin(), originals.end(), orig_value) !=
      originals.end()) {
    return RecordOutcome::kFresh;
  }
  originals.push_back(orig_value);
  if (originals.size() > 1) {
    t.conflicts.fetch_add(1, std::memory_order_relaxed);
    return RecordOutcome::kConflict;
  }
  return RecordOutcome::kFresh;
}

std::optional<std::uint64_t> MappingStore::LookupExact(
    ComponentKind kind, std::uint64_t coord_id,
    std::uint64_t enc_value) const {
  const auto& shard = table(kind).ShardFor(enc_value);
  std::lock_guard<std::mutex> lock(shard.mu);
  auto it = shard.exact.find(CompositeKey{coord_id, enc_value});
  if (it == shard.exact.end()) return std::nullopt;
  return it->second.orig_value;
}

MappingStore::FuzzyResult MappingStore::LookupFuzzy(
    ComponentKind kind, std::uint64_t enc_value) const {
  const auto& shard = table(kind).ShardFor(enc_value);
  std::lock_guard<std::mutex> lock(shard.mu);
  FuzzyResult result;
  auto it = shard.by_enc.find(enc_value);
  if (it == shard.by_enc.end()) return result;
  result.candidates = it->second.size();
  if (result.candidates == 1) {
    result.status = FuzzyResult::Status::kFound;
    result.value = it->second.front();
  } else {
    result.status = FuzzyResult::Status::kAmbiguous;
  }
  return result;
}

std::uint64_t MappingStore::ConflictCount(ComponentKind kind) const {
  return table(kind).conflicts.load(std::memory_order_relaxed);
}

MappingStore::ConflictRate MappingStore::GetConflictRate(
    ComponentKind kind) const {
  ConflictRate rate;
  for (const auto& shard : table(kind).shards) {
    std::lock_guard<std::mutex> lock(shard.mu);
    rate.distinct += shard.by_enc.size();
    for (const auto& [enc, originals] : shard.by_enc) {
      if (originals.size() >= 2) ++rate.conflicted;
    }
  }
  return rate;
}

std::size_t MappingStore::size(ComponentKind kind) const {
  std::size_t n = 0;
  for (const auto& shard : table(kind).shards) {
    std::lock_guard<std::mutex> lock(shard.mu);
    n += shard.exact.size();
  }
  return n;
}

std::size_t MappingStore::size() const {
  std::size_t n = 0;
  for (ComponentKind k : kAllComponentKinds) n += size(k);
  return n;
}

std::vector<MappingStore::Entry> MappingStore::Entries() const {
  std::vector<Entry> out;
  out.reserve(size());
  for (ComponentKind kind : kAllComponentKinds) {
    const std::size_t begin = out.size();
    for (const auto& shard : table(kind).shards) {
      std::lock_guard<std::mutex> lock(shard.mu);
      for (const auto& [key, stored] : shard.exact) {
        out.push_back(Entry{kind, key.coord_id, key.enc_value,
                            stored.orig_value, stored.frac_digits});
      }
    }
    std::sort(out.begin() + static_cast<std::ptrdiff_t>(begin), out.end(),
              [](const Entry& a, const Entry& b) {
                return a.coord_id != b.coord_id ? a.coord_id < b.coord_id
                                                : a.enc_value < b.enc_value;
              });
  }
  return out;
}

void MappingStore::Save(const std::filesystem::path& path) const {
  const std::vector<Entry> entries = Entries();
  std::string buf;
  buf.reserve(kMagicLen + 4 * 8 + entries.size() * kEntryBytes + 4);
  buf.append(kMagic, kMagicLen);

  auto it = entries.begin();
  for (ComponentKind kind : kAllComponentKinds) {
    auto end = std::find_if(it, entries.end(),
                            [kind](const Entry& e) { return e.kind != kind; });
    PutLe(buf, static_cast<std::uint64_t>(std::distance(it, end)), 8);
    for (; it != end; ++it) {
      PutLe(buf, static_cast<std::uint64_t>(it->kind), 1);
      PutLe(buf, it->coord_id, 8);
      PutLe(buf, it->enc_value, 8);
      PutLe(buf, it->orig_value, 8);
      PutLe(buf, it->frac_digits, 1);
    }
  }
  PutLe(buf, Crc32(buf.data(), buf.size()), 4);

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open map file for writing: " + path.string());
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  if (!out) throw Error("failed writing map file: " + path.string());
}

MappingStore MappingStore::Load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open map file: " + path.string());
  const std::string buf((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
  using Reason = StoreFormatError::Reason;
  const std::string name = path.string();

  if (buf.size() < kMagicLen) {
    if (std::string_view(kMagic, buf.size()) == buf) {
      throw StoreFormatError(Reason::kTruncated, name + ": truncated header");
    }
    throw StoreFormatError(Reason::kBadMagic, name + ": not a GFPEMAP file");
  }
  if (buf.compare(0, kMagicLen - 1, kMagic, kMagicLen - 1) != 0) {
    throw StoreFormatError(Reason::kBadMagic, name + ": not a GFPEMAP file");
  }
  if (buf[kMagicLen - 1] != kMagic[kMagicLen - 1]) {
    throw StoreFormatError(Reason::kVersionMismatch,
                           name + ": unsupported map version '" +
                               buf[kMagicLen - 1] + "'");
  }

  std::size_t pos = kMagicLen;
  auto need = [&](std::size_t n) {
    if (buf.size() < pos + n) {
      throw StoreFormatError(Reason::kTruncated, name + ": truncated");
    }
  };

  // Walk the section counts first so truncation is told apart from damage.
  std::array<std::size_t, 4> section_begin{};
  std::array<std::uint64_t, 4> section_count{};
  for (ComponentKind kind : kAllComponentKinds) {
    const auto k = static_cast<std::size_t>(kind);
    need(8);
    section_count[k] = GetLe(buf, pos, 8);
    pos += 8;
    if (section_count[k] > (buf.size() - pos) / kEntryBytes) {
      throw StoreFormatError(Reason::kTruncated,
                             name + ": truncated " +
                                 std::string(ComponentTag(kind)) + " section");
    }
    section_begin[k] = pos;
    pos += section_count[k] * kEntryBytes;
  }
  need(4);
  if (buf.size() != pos + 4) {
    throw StoreFormatError(Reason::kCorrupt, name + ": trailing bytes");
  }
  const auto stored_crc = static_cast<std::uint32_t>(GetLe(buf, pos, 4));
  if (stored_crc != Crc32(buf.data(), pos)) {
    throw StoreFormatError(Reason::kChecksum, name + ": checksum mismatch");
  }

  std::vector<Entry> entries;
  for (ComponentKind kind : kAllComponentKinds) {
    const auto k = static_cast<std::size_t>(kind);
    std::size_t at = section_begin[k];
    for (std::uint64_t i = 0; i < section_count[k]; ++i, at += kEntryBytes) {
      if (static_cast<std::uint8_t>(buf[at]) != static_cast<std::uint8_t>(kind)) {
        throw StoreFormatError(Reason::kCorrupt,
                               name + ": entry kind does not match section");
      }
      Entry e{};
      e.kind = kind;
      e.coord_id = GetLe(buf, at + 1, 8);
      e.enc_value = GetLe(buf, at + 9, 8);
      e.orig_value = GetLe(buf, at + 17, 8);
      e.frac_digits = static_cast<std::uint8_t>(buf[at + 25]);
      entries.push_back(e);
    }
  }

  MappingStore store;
  try {
    for (const Entry& e : entries) {
      store.Record(e.kind, e.coord_id, e.enc_value, e.orig_value,
                   e.frac_digits);
    }
  } catch (const IntegrityError& err) {
    throw StoreFormatError(Reason::kCorrupt, name + ": " + err.what());
  }
  return store;
}

void MappingStore::ExportCsv(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error("cannot open CSV for writing: " + path.string());
  out << "kind,coord_id,enc_value,orig_value\n";
  for (const Entry& e : Entries()) {
    out << ComponentTag(e.kind) << ',' << e.coord_id << ',' << e.enc_value
        << ',' << e.orig_value << '\n';
  }
  if (!out) throw Error("failed writing CSV: " + path.string());
}

bool operator==(const MappingStore& a, const MappingStore& b) {
  for (ComponentKind k : kAllComponentKinds) {
    if (a.ConflictCount(k) != b.ConflictCount(k)) return false;
  }
  return a.Entries() == b.Entries();
}

}  // namespace geofpe
