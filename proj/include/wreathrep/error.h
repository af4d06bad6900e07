// Copyright 2026 The wreathrep Authors
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

#ifndef WREATHREP_ERROR_H_
#define WREATHREP_ERROR_H_

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace wreathrep {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class ErrorCode {
  kPatternTooLarge,
  kEmptyPartition,
  kSizeMismatch,
  kNotACharacter,
  kTooLarge,
  kNoSolution,
  kSolutionCapExceeded,
  kOddRow,
  kInvalidArgument,
  kIo,
};

const char* ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception type; callers
// switch on code() when they need to distinguish them.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Raised when a computation would exceed a configured size cap; count() is
// the exact quantity that was refused.
class TooLargeError : public Error {
 public:
  TooLargeError(const BigInt& count, const BigInt& cap,
                const std::string& what = "objects to enumerate")
      : Error(ErrorCode::kTooLarge, "refusing " + count.str() + " " + what +
                                        " (cap " + cap.str() + ")"),
        count_(count) {}

  const BigInt& count() const { return count_; }

 private:
  BigInt count_;
};

BigInt Factorial(int n);

}  // namespace wreathrep

#endif  // WREATHREP_ERROR_H_
