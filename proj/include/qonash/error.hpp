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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qonash {

enum class ErrorCode {
  kDimensionMismatch,
  kDimensionCap,
  kEmptyInput,
  kZeroMatrix,
  kNotFullRank,
  kNotContained,
  kNotSublatticeOfZd,
  kBadIndexSet,
  kNegativeExponent,
  kZeroExponent,
  kChainOrder,
  kNotCharacteristic,
  kSingularFace,
  kEmptySupport,
  kZeroContact,
  kBMissingSing,
  kAsymmetricContact,
  kUnknownBranch,
  kDuplicateLabel,
  kSelfContact,
  kBoundTooSmall,
  kLimitExceeded,
  kSchema,
};

/// Stable upper-snake name used in reports and CLI diagnostics.
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view code_name() const { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace qonash
