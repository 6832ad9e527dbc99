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

#include <cstdint>
#include <vector>

#include "blockiq/image.hpp"

namespace blockiq {

/// Pixelwise effect of a deblocking pass measured against the reference.
///
/// ddr_mask marks pixels whose squared error strictly decreased, dir_mask
/// pixels where it strictly increased; ties belong to neither. mdd and mdi
/// are the mean (over all n pixels) distortion decrease and increase, and
/// mdc = mdd - mdi. A positive mdc flags the deblocking pass as likely
/// successful.
struct DistortionChangeReport {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> ddr_mask;
    std::vector<std::uint8_t> dir_mask;
    double mdd = 0.0;
    double mdi = 0.0;
    double mdc = 0.0;
    std::int64_t n = 0;

    bool likely_successful() const { return mdc > 0.0; }
};

/// Compares per-pixel squared errors of decoded and deblocked against ref.
DistortionChangeReport analyze(const Image& ref, const Image& decoded, const Image& deblocked);

}  // namespace blockiq
