// Copyright 2026 The nfg Authors.
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

#include "nfg/error.hpp"

#include <algorithm>

namespace nfg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid argument";
    case ErrorCode::kArityMismatch: return "arity mismatch";
    case ErrorCode::kUncoveredPort: return "uncovered port";
    case ErrorCode::kDoubleCoveredPort: return "double-covered port";
    case ErrorCode::kAlphabetMismatch: return "alphabet mismatch";
    case ErrorCode::kDuplicateExternalLabel: return "duplicate external label";
    case ErrorCode::kUnknownVertex: return "unknown vertex";
    case ErrorCode::kBadPortIndex: return "bad port index";
    case ErrorCode::kDuplicateVertex: return "duplicate vertex id";
    case ErrorCode::kInvalidEliminationOrder: return "invalid elimination order";
    case ErrorCode::kCapExceeded: return "cap exceeded";
    case ErrorCode::kNotGroupAlphabet: return "non-group alphabet";
    case ErrorCode::kNotDeltaEq: return "not a binary equality vertex";
    case ErrorCode::kDualPairFailure: return "dual pair check failed";
    case ErrorCode::kNotAdjacent: return "vertices not adjacent via coupling edge";
    case ErrorCode::kFragmentMismatch: return "fragment exterior mismatch";
    case ErrorCode::kDegreeOneInternal: return "degree-1 internal variable";
    case ErrorCode::kUnusedVariable: return "variable in no factor";
    case ErrorCode::kSingularMatrix: return "singular matrix";
    case ErrorCode::kMissingAssignment: return "missing assignment entry";
    case ErrorCode::kInversePairViolation: return "inverse-pair violation";
    case ErrorCode::kNotIndicator: return "exterior not proportional to an indicator";
    case ErrorCode::kSupportMismatch: return "support mismatch";
    case ErrorCode::kInvalidCode: return "invalid code";
    case ErrorCode::kInvalidGraph: return "invalid weighted graph";
    case ErrorCode::kInvalidEmbedding: return "invalid embedding";
    case ErrorCode::kOrientationFailure: return "orientation construction failure";
    case ErrorCode::kSignatureMismatch: return "signature mismatch";
    case ErrorCode::kNonBinaryAlphabet: return "non-binary edge alphabet";
    case ErrorCode::kOpenNfg: return "open NFG";
    case ErrorCode::kInvalidConnection: return "invalid connection";
    case ErrorCode::kOddDimension: return "odd dimension";
    case ErrorCode::kNotSkewSymmetric: return "not skew-symmetric";
    case ErrorCode::kParseError: return "parse error";
    case ErrorCode::kIoError: return "i/o error";
  }
  return "unknown error";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what),
      code_(code) {}

namespace {
std::string join_issues(const std::vector<Issue>& issues) {
  std::string out;
  for (const auto& issue : issues) {
    if (!out.empty()) out += "; ";
    out += std::string(to_string(issue.code)) + " (" + issue.detail + ")";
  }
  return out;
}
}  // namespace

ValidationError::ValidationError(std::vector<Issue> issues)
    : Error(issues.empty() ? ErrorCode::kInvalidArgument : issues.front().code,
            join_issues(issues)),
      issues_(std::move(issues)) {}

bool ValidationError::has(ErrorCode code) const noexcept {
  return std::any_of(issues_.begin(), issues_.end(),
                     [code](const Issue& i) { return i.code == code; });
}

}  // namespace nfg
