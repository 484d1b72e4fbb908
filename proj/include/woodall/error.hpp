// Copyright 2026 The Woodall Packer Authors.
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

#ifndef WOODALL_ERROR_HPP_
#define WOODALL_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace woodall {

enum class ErrorCode {
  kSelfLoop,
  kNodeOutOfRange,
  kArcNotPresent,
  kInvalidArgument,
  kNoChordFound,
  kDigonEncountered,
  kLimitExceeded,
  kTooSmall,
  kNotIndependent,
  kNotThreeTree,
  kInvalidSequence,
  kAcyclicInput,
  kConstructionFailed,
  kCertificateViolation,
  kInnerCycle,
  kHostMismatch,
  kDigonCreated,
  kBudgetExhausted,
  kResampleExhausted,
  kParse,
  kIo,
};

const char* to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised when exact_nu runs out of search nodes. `lower_bound` is the best
// packing size proven so far.
class BudgetExhausted : public Error {
 public:
  BudgetExhausted(std::size_t lower_bound, std::uint64_t nodes)
      : Error(ErrorCode::kBudgetExhausted,
              "search budget exhausted after " + std::to_string(nodes) +
                  " nodes; lower bound " + std::to_string(lower_bound)),
        lower_bound_(lower_bound) {}

  std::size_t lower_bound() const noexcept { return lower_bound_; }

 private:
  std::size_t lower_bound_;
};

// Raised when a constructed packing does not verify. `instance_dump` holds
// the offending digraph in the instance file format.
class ConstructionFailed : public Error {
 public:
  ConstructionFailed(const std::string& reason, std::string instance_dump)
      : Error(ErrorCode::kConstructionFailed,
              "construction failed: " + reason),
        instance_dump_(std::move(instance_dump)) {}

  const std::string& instance_dump() const noexcept { return instance_dump_; }

 private:
  std::string instance_dump_;
};

}  // namespace woodall

#endif  // WOODALL_ERROR_HPP_
