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

#include "vizentropy/trials.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <string>
#include <utility>

#include "vizentropy/error.h"

namespace vizentropy {
namespace {

std::uint64_t BoundedDraw(std::mt19937_64& gen, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t x = gen();
    if (x >= threshold) return x % bound;
  }
}

bool ResponseFitsMode(Response r, TrialMode mode) {
  if (mode == TrialMode::kRanking) {
    return r == Response::kLeft || r == Response::kRight;
  }
  return r == Response::kYes || r == Response::kNo;
}

std::set<std::string> StimulusSet(const TrialManifest& manifest) {
  std::set<std::string> ids;
  for (const Trial& trial : manifest.trials) {
    if (const auto* r = std::get_if<RankingTrial>(&trial)) {
      ids.insert(GlyphIdFromAsset(r->left_asset));
      ids.insert(GlyphIdFromAsset(r->right_asset));
    } else {
      ids.insert(std::string(
          SearchTargetName(std::get<SearchTrial>(trial).target)));
    }
  }
  return ids;
}

}  // namespace

const std::string_view kRankingInstructions =
    "You will see a series of image pairs.\n"
    "Each image represents a value and also represents a level of "
    "uncertainty.\n"
    "More complex shapes represent more uncertainty.\n"
    "Choose which image represents the most uncertain value to you.\n"
    "Left arrow for left. Right arrow for right.\n"
    "Press space when ready.";

const std::string_view kSearchInstructions =
    "You will see a series of map images with sensor glyphs.\n"
    "Each trial names a target: the least uncertain or the most uncertain "
    "glyph.\n"
    "Press Y if the target glyph is present. Press N if it is absent.\n"
    "Press space when ready.";

std::string_view TrialModeName(TrialMode mode) {
  return mode == TrialMode::kRanking ? "ranking" : "search";
}

std::string_view SearchTargetName(SearchTarget target) {
  return target == SearchTarget::kLow ? "low" : "high";
}

std::string_view ResponseName(Response response) {
  switch (response) {
    case Response::kLeft: return "left";
    case Response::kRight: return "right";
    case Response::kYes: return "yes";
    case Response::kNo: return "no";
  }
  return "";
}

void TrialManifest::Validate() const {
  if (trials.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "manifest has no trials");
  }
  for (std::size_t i = 0; i < trials.size(); ++i) {
    const bool ranking = std::holds_alternative<RankingTrial>(trials[i]);
    if (ranking != (mode == TrialMode::kRanking)) {
      throw Error(ErrorCode::kMixedModes,
                  "trial " + std::to_string(i) + " does not match mode " +
                      std::string(TrialModeName(mode)));
    }
    if (ranking) {
      const auto& r = std::get<RankingTrial>(trials[i]);
      if (GlyphIdFromAsset(r.left_asset) == GlyphIdFromAsset(r.right_asset)) {
        throw Error(ErrorCode::kSelfPair,
                    "trial " + std::to_string(i) + " pairs a glyph with itself");
      }
    }
  }
}

void TrialResults::Validate() const {
  if (schema_version != kSchemaVersion) {
    throw Error(ErrorCode::kSchemaMismatch,
                "schema_version " + std::to_string(schema_version));
  }
  manifest.Validate();
  if (mode != manifest.mode) {
    throw Error(ErrorCode::kMixedModes,
                "results mode differs from the embedded manifest");
  }
  std::vector<int> seen(manifest.trials.size(), 0);
  for (const TrialRecord& rec : records) {
    if (rec.trial_index < 0 ||
        rec.trial_index >= static_cast<int>(manifest.trials.size())) {
      throw Error(ErrorCode::kInvalidArgument,
                  "record for unknown trial " +
                      std::to_string(rec.trial_index));
    }
    if (++seen[rec.trial_index] > 1) {
      throw Error(ErrorCode::kInvalidArgument,
                  "trial " + std::to_string(rec.trial_index) +
                      " answered twice");
    }
    if (!(rec.rt > 0.0) || !std::isfinite(rec.rt)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "trial " + std::to_string(rec.trial_index) +
                      " has a non-positive response time");
    }
    if (!ResponseFitsMode(rec.response, mode)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "response '" + std::string(ResponseName(rec.response)) +
                      "' is not valid in " + std::string(TrialModeName(mode)) +
                      " mode");
    }
  }
  std::string missing;
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (seen[i] == 0) {
      if (!missing.empty()) missing += ", ";
      missing += std::to_string(i);
    }
  }
  if (!missing.empty()) {
    throw Error(ErrorCode::kMissingRecords,
                "participant '" + participant_id + "' has no record for " +
                    "trials " + missing);
  }
}

std::vector<std::size_t> SeededPermutation(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::mt19937_64 gen(seed);
  for (std::size_t i = n; i > 1; --i) {
    const std::size_t j = BoundedDraw(gen, i);
    std::swap(order[i - 1], order[j]);
  }
  return order;
}

TrialManifest BuildRankingManifest(std::span<const std::string> glyph_assets,
                                   std::uint64_t seed,
                                   std::string participant_id) {
  if (glyph_assets.size() < 2) {
    throw Error(ErrorCode::kTooFewGlyphs,
                std::to_string(glyph_assets.size()) + " glyphs, need 2");
  }
  std::set<std::string> ids;
  for (const std::string& asset : glyph_assets) {
    if (!ids.insert(GlyphIdFromAsset(asset)).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate glyph '" + GlyphIdFromAsset(asset) + "'");
    }
  }
  std::vector<Trial> pairs;
  for (std::size_t i = 0; i < glyph_assets.size(); ++i) {
    for (std::size_t j = 0; j < glyph_assets.size(); ++j) {
      if (i != j) pairs.push_back(RankingTrial{glyph_assets[i], glyph_assets[j]});
    }
  }
  TrialManifest m;
  m.mode = TrialMode::kRanking;
  m.seed = seed;
  m.instructions = std::string(kRankingInstructions);
  m.participant_id = std::move(participant_id);
  for (std::size_t k : SeededPermutation(pairs.size(), seed)) {
    m.trials.push_back(pairs[k]);
  }
  return m;
}

TrialManifest BuildSearchManifest(const SearchBuckets& buckets,
                                  std::uint64_t seed,
                                  std::string participant_id) {
  const std::pair<const std::vector<std::string>*, SearchTrial> groups[] = {
      {&buckets.low_present, {"", true, SearchTarget::kLow}},
      {&buckets.low_absent, {"", false, SearchTarget::kLow}},
      {&buckets.high_present, {"", true, SearchTarget::kHigh}},
      {&buckets.high_absent, {"", false, SearchTarget::kHigh}},
  };
  std::vector<Trial> trials;
  for (const auto& [assets, proto] : groups) {
    if (assets->size() != kSearchBucketSize) {
      throw Error(ErrorCode::kWrongBucketSize,
                  std::string(SearchTargetName(proto.target)) +
                      (proto.target_present ? "-present" : "-absent") +
                      " bucket has " + std::to_string(assets->size()) +
                      " scenes, need " + std::to_string(kSearchBucketSize));
    }
    for (const std::string& asset : *assets) {
      SearchTrial t = proto;
      t.scene_asset = asset;
      trials.push_back(t);
    }
  }
  TrialManifest m;
  m.mode = TrialMode::kSearch;
  m.seed = seed;
  m.instructions = std::string(kSearchInstructions);
  m.participant_id = std::move(participant_id);
  for (std::size_t k : SeededPermutation(trials.size(), seed)) {
    m.trials.push_back(trials[k]);
  }
  return m;
}

std::string GlyphIdFromAsset(std::string_view asset) {
  const std::size_t slash = asset.find_last_of("/\\");
  if (slash != std::string_view::npos) asset.remove_prefix(slash + 1);
  const std::size_t dot = asset.rfind('.');
  if (dot != std::string_view::npos && dot > 0) asset = asset.substr(0, dot);
  return std::string(asset);
}

MergedResults MergeResults(std::span<const TrialResults> files) {
  if (files.empty()) return PairComparisonTable{};
  const TrialMode mode = files.front().mode;
  const std::set<std::string> stimuli = StimulusSet(files.front().manifest);
  for (const TrialResults& f : files) {
    f.Validate();
    if (f.mode != mode) {
      throw Error(ErrorCode::kMixedModes, "files mix ranking and search");
    }
    if (StimulusSet(f.manifest) != stimuli) {
      throw Error(ErrorCode::kMixedModes,
                  "participant '" + f.participant_id +
                      "' saw a different glyph set");
    }
  }
  if (mode == TrialMode::kRanking) {
    std::vector<PairTrial> trials;
    for (const TrialResults& f : files) {
      for (const TrialRecord& rec : f.records) {
        const auto& t = std::get<RankingTrial>(f.manifest.trials[rec.trial_index]);
        trials.push_back(PairTrial{
            GlyphIdFromAsset(t.left_asset), GlyphIdFromAsset(t.right_asset),
            rec.response == Response::kLeft ? Choice::kLeft : Choice::kRight,
            rec.rt});
      }
    }
    return MergeDuplicates(trials);
  }
  std::map<std::string, SdtCounts> counts;
  for (const TrialResults& f : files) {
    for (const TrialRecord& rec : f.records) {
      const auto& t = std::get<SearchTrial>(f.manifest.trials[rec.trial_index]);
      SdtCounts& c = counts[std::string(SearchTargetName(t.target))];
      const bool yes = rec.response == Response::kYes;
      if (t.target_present) {
        (yes ? c.hits : c.misses) += 1;
      } else {
        (yes ? c.false_alarms : c.correct_rejections) += 1;
      }
    }
  }
  return counts;
}

}  // namespace vizentropy
