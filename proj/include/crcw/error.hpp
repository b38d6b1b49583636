/*
 * Copyright 2026 The crcweight Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef CRCW_ERROR_HPP_
#define CRCW_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace crcw {

enum class ErrorCode {
  kParameter,       // mismatched or out-of-range parameters
  kDivisionByZero,
  kUndefinedInput,  // e.g. 0^0, gcd(0, 0)
  kInvalidInput,    // input violates an operation precondition
  kParse,
  kResource,        // effort budget or exhaustive guard exceeded
  kInternal,        // a mathematical invariant failed to hold
};

const char* ErrorCodeName(ErrorCode code);

// All library failures are reported by throwing Error. The C API converts
// these into status codes at the boundary.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void Fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace crcw

#endif  // CRCW_ERROR_HPP_
