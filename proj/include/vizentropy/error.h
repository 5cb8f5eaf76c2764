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

#ifndef VIZENTROPY_ERROR_H_
#define VIZENTROPY_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vizentropy {

enum class ErrorCode {
  // Validation failures: the caller supplied something outside the contract.
  kInvalidDistribution,
  kFrequencyAboveNyquist,
  kSeriesTooShort,
  kInvalidArgument,
  kRadiusUnderflow,
  kInvalidProportions,
  kBoundsUnset,
  kOutOfRange,
  kMalformedRow,
  kUnknownFormat,
  kPlacementOutOfCanvas,
  kInvalidColorMap,
  kSelfPair,
  kDuplicatePair,
  kDisconnectedGraph,
  kEmptyCondition,
  kLengthMismatch,
  kTooFewSamples,
  kTooFewGlyphs,
  kWrongBucketSize,
  kMixedModes,
  kMissingRecords,
  kSchemaMismatch,
  // Numerical failures: valid input on which the computation has no answer.
  kNoTemplateMatches,
  kNonMonotoneEntropy,
  kNonConvergence,
  kSingularDesign,
  kDegenerateInput,
  kInfiniteT,
  kExtremeRates,
};

enum class ErrorKind { kValidation, kNumerical };

std::string_view ErrorCodeName(ErrorCode code);
ErrorKind KindOf(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }
  ErrorKind kind() const { return KindOf(code_); }

 private:
  ErrorCode code_;
};

// A parse failure tied to a 1-based row (CSV line or JSON array element).
class MalformedRowError : public Error {
 public:
  MalformedRowError(std::size_t row, const std::string& reason);

  std::size_t row() const { return row_; }
  const std::string& reason() const { return reason_; }

 private:
  std::size_t row_;
  std::string reason_;
};

}  // namespace vizentropy

#endif  // VIZENTROPY_ERROR_H_
