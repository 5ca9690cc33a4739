// Copyright 2026 The swapreg Authors.
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

#ifndef SWAPREG_ERROR_HPP_
#define SWAPREG_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace swapreg {

enum class ErrorCode {
  kDomain,      // argument outside its mathematical domain
  kValidation,  // structurally invalid object (non-convex loss, bad masses)
  kSolver,      // LP failed or returned an infeasible point
  kProtocol,    // calls out of order (observe before predict, ...)
  kIo,
  kParse,
  kInternal,    // broken invariant inside the library
};

const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void Fail(ErrorCode code, const std::string& message);

}  // namespace swapreg

#endif  // SWAPREG_ERROR_HPP_
