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

#include "vizentropy/error.h"

#include <string>

namespace vizentropy {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidDistribution: return "InvalidDistribution";
    case ErrorCode::kFrequencyAboveNyquist: return "FrequencyAboveNyquist";
    case ErrorCode::kSeriesTooShort: return "SeriesTooShort";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kRadiusUnderflow: return "RadiusUnderflow";
    case ErrorCode::kInvalidProportions: return "InvalidProportions";
    case ErrorCode::kBoundsUnset: return "BoundsUnset";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kMalformedRow: return "MalformedRow";
    case ErrorCode::kUnknownFormat: return "UnknownFormat";
    case ErrorCode::kPlacementOutOfCanvas: return "PlacementOutOfCanvas";
    case ErrorCode::kInvalidColorMap: return "InvalidColorMap";
    case ErrorCode::kSelfPair: return "SelfPair";
    case ErrorCode::kDuplicatePair: return "DuplicatePair";
    case ErrorCode::kDisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::kEmptyCondition: return "EmptyCondition";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kTooFewSamples: return "TooFewSamples";
    case ErrorCode::kTooFewGlyphs: return "TooFewGlyphs";
    case ErrorCode::kWrongBucketSize: return "WrongBucketSize";
    case ErrorCode::kMixedModes: return "MixedModes";
    case ErrorCode::kMissingRecords: return "MissingRecords";
    case ErrorCode::kSchemaMismatch: return "SchemaMismatch";
    case ErrorCode::kNoTemplateMatches: return "NoTemplateMatches";
    case ErrorCode::kNonMonotoneEntropy: return "NonMonotoneEntropy";
    case ErrorCode::kNonConvergence: return "NonConvergence";
    case ErrorCode::kSingularDesign: return "SingularDesign";
    case ErrorCode::kDegenerateInput: return "DegenerateInput";
    case ErrorCode::kInfiniteT: return "InfiniteT";
    case ErrorCode::kExtremeRates: return "ExtremeRates";
  }
  return "Unknown";
}

ErrorKind KindOf(ErrorCode code) {
  return code >= ErrorCode::kNoTemplateMatches ? ErrorKind::kNumerical
                                               : ErrorKind::kValidation;
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

MalformedRowError::MalformedRowError(std::size_t row, const std::string& reason)
    : Error(ErrorCode::kMalformedRow,
            "row " + std::to_string(row) + ": " + reason),
      row_(row),
      reason_(reason) {}

}  // namespace vizentropy
