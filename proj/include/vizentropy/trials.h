// Copyright 2026 The Vizentropy Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VIZENTROPY_TRIALS_H_
#define VIZENTROPY_TRIALS_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "vizentropy/bradley_terry.h"
#include "vizentropy/ingest.h"
#include "vizentropy/sdt.h"
#include "vizentropy/version.h"

namespace vizentropy {

enum class TrialMode { kRanking, kSearch };
enum class SearchTarget { kLow, kHigh };
enum class Response { kLeft, kRight, kYes, kNo };

std::string_view TrialModeName(TrialMode mode);
std::string_view SearchTargetName(SearchTarget target);
std::string_view ResponseName(Response response);

// Shown before a ranking session, one instruction per line.
extern const std::string_view kRankingInstructions;
extern const std::string_view kSearchInstructions;

struct RankingTrial {
  std::string left_asset;
  std::string right_asset;

  friend bool operator==(const RankingTrial&, const RankingTrial&) = default;
};

struct SearchTrial {
  std::string scene_asset;
  bool target_present = false;
  SearchTarget target = SearchTarget::kLow;

  friend bool operator==(const SearchTrial&, const SearchTrial&) = default;
};

using Trial = std::variant<RankingTrial, SearchTrial>;

struct TrialManifest {
  int schema_version = kSchemaVersion;
  TrialMode mode = TrialMode::kRanking;
  std::vector<Trial> trials;
  std::uint64_t seed = 0;
  std::string instructions;
  std::string participant_id;

  // Every trial matches the mode, and there is at least one.
  void Validate() const;

  friend bool operator==(const TrialManifest&, const TrialManifest&) = default;
};

struct TrialRecord {
  int trial_index = 0;
  Response response = Response::kLeft;
  double rt = 0.0;  // seconds from stimulus onset

  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

// One participant's responses. The manifest they answered is embedded so a
// result file is self-describing.
struct TrialResults {
  int schema_version = kSchemaVersion;
  std::string participant_id;
  TrialMode mode = TrialMode::kRanking;
  Timestamp started_at;
  Timestamp completed_at;
  TrialManifest manifest;
  std::vector<TrialRecord> records;

  // One record per manifest trial with rt > 0 and a response legal for the
  // mode. Throws kMissingRecords naming the unanswered trial indices.
  void Validate() const;

  friend bool operator==(const TrialResults&, const TrialResults&) = default;
};

// Fisher-Yates permutation of 0..n-1 driven by std::mt19937_64(seed), whose
// output sequence is fixed by the C++ standard. Bounded draws use rejection
// sampling: reject raw draws below (2^64 - k) mod k, then take draw mod k.
// Manifests are therefore identical across platforms and library versions.
std::vector<std::size_t> SeededPermutation(std::size_t n, std::uint64_t seed);

// All G*(G-1) ordered pairs of distinct assets, shuffled by seed.
// Throws kTooFewGlyphs for G < 2.
TrialManifest BuildRankingManifest(std::span<const std::string> glyph_assets,
                                   std::uint64_t seed,
                                   std::string participant_id = "");

struct SearchBuckets {
  std::vector<std::string> low_present;
  std::vector<std::string> low_absent;
  std::vector<std::string> high_present;
  std::vector<std::string> high_absent;
};

inline constexpr std::size_t kSearchBucketSize = 10;

// 40 search trials (10 per bucket), shuffled by seed. Throws
// kWrongBucketSize unless every bucket holds exactly 10 assets.
TrialManifest BuildSearchManifest(const SearchBuckets& buckets,
                                  std::uint64_t seed,
                                  std::string participant_id = "");

// "glyphs/C.svg" -> "C".
std::string GlyphIdFromAsset(std::string_view asset);

// Ranking files merge into one pair table with per-pair mean RT; search
// files into SDT counts keyed by target ("low", "high"). Throws kMixedModes
// when files disagree on mode or stimulus set. Order of files is irrelevant.
using MergedResults =
    std::variant<PairComparisonTable, std::map<std::string, SdtCounts>>;
MergedResults MergeResults(std::span<const TrialResults> files);

}  // namespace vizentropy

#endif  // VIZENTROPY_TRIALS_H_
