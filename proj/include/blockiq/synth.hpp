// Copyright 2026-present the blockiq authors
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

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "blockiq/image.hpp"

namespace blockiq {

/// Names of the built-in synthetic scenes, in corpus order.
const std::vector<std::string>& scene_names();

/// Renders one scene at size x size. Scenes are closed-form (no RNG) and
/// already storage-quantized, so rendering is reproducible and identical to
/// what gen-corpus writes to disk. Throws invalid_config for unknown names
/// or size < 16.
Image synth_scene(std::string_view name, int size);

/// The full synthetic corpus: one (name, image) per scene.
std::vector<std::pair<std::string, Image>> synthetic_corpus(int size = 256);

}  // namespace blockiq
