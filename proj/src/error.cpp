// Copyright 2026 The qonash Authors
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

#include "qonash/error.hpp"

namespace qonash {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDimensionMismatch:
      return "DIMENSION_MISMATCH";
    case ErrorCode::kDimensionCap:
      return "DIMENSION_CAP";
    case ErrorCode::kEmptyInput:
      return "EMPTY_INPUT";
    case ErrorCode::kZeroMatrix:
      return "ZERO_MATRIX";
    case ErrorCode::kNotFullRank:
      return "NOT_FULL_RANK";
    case ErrorCode::kNotContained:
      return "NOT_CONTAINED";
    case ErrorCode::kNotSublatticeOfZd:
      return "NOT_SUBLATTICE_OF_ZD";
    case ErrorCode::kBadIndexSet:
      return "BAD_INDEX_SET";
    case ErrorCode::kNegativeExponent:
      return "NEGATIVE_EXPONENT";
    case ErrorCode::kZeroExponent:
      return "ZERO_EXPONENT";
    case ErrorCode::kChainOrder:
      return "CHAIN_ORDER";
    case ErrorCode::kNotCharacteristic:
      return "NOT_CHARACTERISTIC";
    case ErrorCode::kSingularFace:
      return "SINGULAR_FACE";
    case ErrorCode::kEmptySupport:
      return "EMPTY_SUPPORT";
    case ErrorCode::kZeroContact:
      return "ZERO_CONTACT";
    case ErrorCode::kBMissingSing:
      return "B_MISSING_SING";
    case ErrorCode::kAsymmetricContact:
      return "ASYMMETRIC_CONTACT";
    case ErrorCode::kUnknownBranch:
      return "UNKNOWN_BRANCH";
    case ErrorCode::kDuplicateLabel:
      return "DUPLICATE_LABEL";
    case ErrorCode::kSelfContact:
      return "SELF_CONTACT";
    case ErrorCode::kBoundTooSmall:
      return "BOUND_TOO_SMALL";
    case ErrorCode::kLimitExceeded:
      return "LIMIT_EXCEEDED";
    case ErrorCode::kSchema:
      return "SCHEMA";
  }
  return "UNKNOWN";
}

}  // namespace qonash
