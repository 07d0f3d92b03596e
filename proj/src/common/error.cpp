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

#include "common/error.hpp"

#include <json.hpp>

namespace qqc {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kCapacity: return "capacity";
    case ErrorCode::kDimension: return "dimension";
    case ErrorCode::kUnboundSymbol: return "unbound_symbol";
    case ErrorCode::kIo: return "io";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kData: return "data";
    case ErrorCode::kNumeric: return "numeric";
    case ErrorCode::kInternal: return "internal";
  }
  return "unknown";
}

Error::Error(ErrorCode code, std::string module, const std::string& message)
    : std::runtime_error(message), code_(code), module_(std::move(module)) {}

std::string Error::to_json() const {
  nlohmann::json j;
  j["error"] = {{"code", std::string(error_code_name(code_))},
                {"module", module_},
                {"message", what()}};
  return j.dump();
}

void fail(ErrorCode code, std::string_view module, const std::string& message) {
  throw Error(code, std::string(module), message);
}

}  // namespace qqc
