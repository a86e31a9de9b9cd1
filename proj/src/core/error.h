// Copyright 2026 The sparse-ce Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPARSE_CE_CORE_ERROR_H_
#define SPARSE_CE_CORE_ERROR_H_

#include <stdexcept>
#include <string>

namespace sparse_ce {

// Mirrors the status codes of the C API one-to-one.
enum class ErrorCode {
  kInvalidArgument = 1,
  kDimensionMismatch = 2,
  kSizeLimit = 3,
  kNotConstantSum = 4,
  kSolverFailure = 5,
  kZeroMass = 6,
  kIo = 7,
  kParse = 8,
  kInconsistent = 9,
};

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

inline void Check(bool condition, ErrorCode code, const std::string& what) {
  if (!condition) Fail(code, what);
}

}  // namespace sparse_ce

#endif  // SPARSE_CE_CORE_ERROR_H_
