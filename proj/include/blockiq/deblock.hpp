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

#include "blockiq/codec.hpp"
#include "blockiq/image.hpp"

namespace blockiq {

/// Normalized low-pass kernel: odd size, non-negative weights summing to 1
/// (within 1e-12).
struct LowPassConfig {
    int kernel_size = 3;
    std::vector<double> kernel;  // kernel_size^2 weights, row-major
};

/// Uniform (box) kernel of the given odd size.
LowPassConfig box_lowpass(int size);

/// Normalized Gaussian kernel of the given odd size.
LowPassConfig gaussian_lowpass(int size, double sigma);

void validate(const LowPassConfig& cfg);

struct PocsConfig {
    int iterations = 5;
    LowPassConfig smoothing = box_lowpass(3);
    CodecConfig codec;
};

/// Spatial low-pass deblocking filter: each output pixel is the kernel-
/// weighted sum of its neighborhood, with symmetric (mirror) border padding.
/// Output is clamped to [0, 255].
Image lowpass(const Image& img, const LowPassConfig& cfg);

/// Projection onto the quantization constraint set: per block, transform,
/// clamp each coefficient into [q - delta/2, q + delta/2] around its decoded
/// value q, inverse-transform.
Image project_qcs(const Image& img, const CodecConfig& codec, const CoefficientGrid& decoded_coeffs);

/// Iterative POCS deblocker: repeat [lowpass -> project_qcs] iterations
/// times, then clamp to [0, 255].
Image pocs(const Image& img, const PocsConfig& cfg, const CoefficientGrid& decoded_coeffs);

}  // namespace blockiq
