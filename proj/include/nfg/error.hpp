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

#ifndef NFG_ERROR_HPP_
#define NFG_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nfg {

// Every failure the library reports carries one of these codes. The CLI maps
// them onto exit status 2 (input errors); verification mismatches that are not
// exceptions are reported through report structs instead.
enum class ErrorCode {
  kInvalidArgument,
  kArityMismatch,
  kUncoveredPort,
  kDoubleCoveredPort,
  kAlphabetMismatch,
  kDuplicateExternalLabel,
  kUnknownVertex,
  kBadPortIndex,
  kDuplicateVertex,
  kInvalidEliminationOrder,
  kCapExceeded,
  kNotGroupAlphabet,
  kNotDeltaEq,
  kDualPairFailure,
  kNotAdjacent,
  kFragmentMismatch,
  kDegreeOneInternal,
  kUnusedVariable,
  kSingularMatrix,
  kMissingAssignment,
  kInversePairViolation,
  kNotIndicator,
  kSupportMismatch,
  kInvalidCode,
  kInvalidGraph,
  kInvalidEmbedding,
  kOrientationFailure,
  kSignatureMismatch,
  kNonBinaryAlphabet,
  kOpenNfg,
  kInvalidConnection,
  kOddDimension,
  kNotSkewSymmetric,
  kParseError,
  kIoError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct Issue {
  ErrorCode code;
  std::string detail;
};

// Raised by NFG validation; lists every violated invariant, not just the
// first one found.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Issue> issues);
  const std::vector<Issue>& issues() const noexcept { return issues_; }
  bool has(ErrorCode code) const noexcept;

 private:
  std::vector<Issue> issues_;
};

}  // namespace nfg

#endif  // NFG_ERROR_HPP_
