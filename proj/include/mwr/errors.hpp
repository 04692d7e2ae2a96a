// Copyright 2026 The mwr Authors
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

namespace mwr {

enum class ErrorCode {
  kInvalidEdge,
  kOutOfRange,
  kShapeMismatch,
  kNegativeWeight,
  kZeroTotalWeight,
  kNotConnected,
  kAlreadyInSupport,
  kInvalidNetwork,
  kTooLargeForBrute,
  kInvalidThreshold,
  kDegenerateGraph,
  kNoEdgeComponent,
  kNotChordal,
  kInvalidOrder,
  kTooManyCliques,
  kIncompleteSelection,
  kInvalidSpec,
  kParseError,
  kInvalidSolution,
};

inline std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidEdge: return "InvalidEdge";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kNegativeWeight: return "NegativeWeight";
    case ErrorCode::kZeroTotalWeight: return "ZeroTotalWeight";
    case ErrorCode::kNotConnected: return "NotConnected";
    case ErrorCode::kAlreadyInSupport: return "AlreadyInSupport";
    case ErrorCode::kInvalidNetwork: return "InvalidNetwork";
    case ErrorCode::kTooLargeForBrute: return "TooLargeForBrute";
    case ErrorCode::kInvalidThreshold: return "InvalidThreshold";
    case ErrorCode::kDegenerateGraph: return "DegenerateGraph";
    case ErrorCode::kNoEdgeComponent: return "NoEdgeComponent";
    case ErrorCode::kNotChordal: return "NotChordal";
    case ErrorCode::kInvalidOrder: return "InvalidOrder";
    case ErrorCode::kTooManyCliques: return "TooManyCliques";
    case ErrorCode::kIncompleteSelection: return "IncompleteSelection";
    case ErrorCode::kInvalidSpec: return "InvalidSpec";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInvalidSolution: return "InvalidSolution";
  }
  return "Unknown";
}

// All precondition failures in the library surface as mwr::Error. The code
// identifies the failure class; what() carries a human-readable diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mwr
