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

#ifndef QQC_VQC_SPEC_JSON_HPP
#define QQC_VQC_SPEC_JSON_HPP

#include <json.hpp>

#include "encoding/feature_map.hpp"
#include "vqc/ansatz.hpp"
#include "vqc/cobyla.hpp"

namespace qqc {

nlohmann::json feature_map_to_json(const encoding::FeatureMapSpec& spec);
encoding::FeatureMapSpec feature_map_from_json(const nlohmann::json& j);

nlohmann::json ansatz_to_json(const vqc::AnsatzSpec& spec);
vqc::AnsatzSpec ansatz_from_json(const nlohmann::json& j);

nlohmann::json optimizer_to_json(const vqc::OptimizerConfig& config);
vqc::OptimizerConfig optimizer_from_json(const nlohmann::json& j);

}  // namespace qqc

#endif  // QQC_VQC_SPEC_JSON_HPP
