// Copyright 2026 The svq Authors
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

namespace svq {

enum class ErrorCode {
  ZeroVector,
  DimensionTooSmall,
  DimensionMismatch,
  NonFinite,
  NotSquare,
  NotUnitary,
  NormLost,
  EmptySpan,
  InvalidProjector,
  UnknownAtom,
  PrecisificationBlowup,
  NotProductState,
  NotCloneShape,
  BadProbability,
  NonMonotoneAssertion,
  InvalidPropId,
  BadLedgerLine,
  SyntaxError,
  UnknownIdentifier,
  DuplicateIdentifier,
  AmbiguousSubject,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::NormLost: return "NormLost";
    case ErrorCode::EmptySpan: return "EmptySpan";
    case ErrorCode::InvalidProjector: return "InvalidProjector";
    case ErrorCode::UnknownAtom: return "UnknownAtom";
    case ErrorCode::PrecisificationBlowup: return "PrecisificationBlowup";
    case ErrorCode::NotProductState: return "NotProductState";
    case ErrorCode::NotCloneShape: return "NotCloneShape";
    case ErrorCode::BadProbability: return "BadProbability";
    case ErrorCode::NonMonotoneAssertion: return "NonMonotoneAssertion";
    case ErrorCode::InvalidPropId: return "InvalidPropId";
    case ErrorCode::BadLedgerLine: return "BadLedgerLine";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownIdentifier: return "UnknownIdentifier";
    case ErrorCode::DuplicateIdentifier: return "DuplicateIdentifier";
    case ErrorCode::AmbiguousSubject: return "AmbiguousSubject";
  }
  return "Unknown";
}

/// Every failure in the library is reported as an Error carrying a code
/// that callers (and tests) can switch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace svq
