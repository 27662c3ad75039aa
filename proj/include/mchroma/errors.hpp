// Copyright 2026 The Authors.
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

namespace mchroma {

// Every error the library raises derives from Error and carries a stable
// machine-readable code, which the CLI maps onto its exit status.
enum class ErrorCode {
  kInput,               // malformed argument (index out of range, bad shape)
  kContract,            // caller broke a documented precondition
  kInvariantViolation,  // an algorithmic guarantee failed; always a bug
  kParse,               // instance file is not valid JSON / wrong types
  kValidation,          // instance parses but violates a structural rule
  kBoundExceeded,       // exhaustive routine refused a too-large input
  kUnsupported,         // operation not defined for this input family
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInput: return "input";
    case ErrorCode::kContract: return "contract";
    case ErrorCode::kInvariantViolation: return "invariant-violation";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kValidation: return "validation";
    case ErrorCode::kBoundExceeded: return "bound-exceeded";
    case ErrorCode::kUnsupported: return "unsupported";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct InputError : Error {
  explicit InputError(const std::string& what) : Error(ErrorCode::kInput, what) {}
};

struct ContractError : Error {
  explicit ContractError(const std::string& what)
      : Error(ErrorCode::kContract, what) {}
};

struct InvariantViolation : Error {
  explicit InvariantViolation(const std::string& what)
      : Error(ErrorCode::kInvariantViolation, what) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(ErrorCode::kParse, what) {}
};

struct ValidationError : Error {
  explicit ValidationError(const std::string& what)
      : Error(ErrorCode::kValidation, what) {}
};

struct BoundExceeded : Error {
  explicit BoundExceeded(const std::string& what)
      : Error(ErrorCode::kBoundExceeded, what) {}
};

struct Unsupported : Error {
  explicit Unsupported(const std::string& what)
      : Error(ErrorCode::kUnsupported, what) {}
};

}  // namespace mchroma
