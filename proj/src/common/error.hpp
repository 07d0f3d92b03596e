// Copyright 2026 The QQC Authors
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

#ifndef QQC_COMMON_ERROR_HPP
#define QQC_COMMON_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace qqc {

/// Failure categories shared by every module. The numeric values are part of
/// the C ABI (see include/qqc/qqc.h) and must not be renumbered.
enum class ErrorCode : int {
  kInvalidArgument = 1,
  kCapacity = 2,
  kDimension = 3,
  kUnboundSymbol = 4,
  kIo = 5,
  kParse = 6,
  kData = 7,
  kNumeric = 8,
  kInternal = 99,
};

std::string_view error_code_name(ErrorCode code);

/// Exception carrying a category and the name of the module that raised it,
/// e.g. "circuit-sim" or "svm-solver".
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string module, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  const std::string& module() const noexcept { return module_; }

  /// {"error":{"code":"...","module":"...","message":"..."}}
  std::string to_json() const;

 private:
  ErrorCode code_;
  std::string module_;
};

[[noreturn]] void fail(ErrorCode code, std::string_view module,
                       const std::string& message);

inline void require(bool condition, ErrorCode code, std::string_view module,
                    const std::string& message) {
  if (!condition) fail(code, module, message);
}

}  // namespace qqc

#endif  // QQC_COMMON_ERROR_HPP
