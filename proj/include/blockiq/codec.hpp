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

#include <vector>

#include "blockiq/image.hpp"

namespace blockiq {

/// Block-transform codec parameters: LxL blocks, one uniform quantization
/// step delta for every coefficient.
struct CodecConfig {
    int block_size = 8;
    double delta = 10.0;
};

void validate(const CodecConfig& cfg);

/// One LxL block of transform coefficients, row-major.
struct CoefficientBlock {
    int block_size = 0;
    std::vector<double> coeff;
};

/// Per-block coefficients for a whole image, blocks in row-major order.
struct CoefficientGrid {
    int block_size = 0;
    int blocks_x = 0;
    int blocks_y = 0;
    std::vector<CoefficientBlock> blocks;

    int width() const { return blocks_x * block_size; }
    int height() const { return blocks_y * block_size; }
};

/// Orthonormal DCT-II matrix for size l, row-major, cached per l.
const std::vector<double>& dct_matrix(int l);

/// Forward 2-D orthonormal DCT of an lxl block: T * b * T^t.
CoefficientBlock dct2(const std::vector<double>& block, int l);

/// Inverse 2-D DCT: T^t * C * T.
std::vector<double> idct2(const CoefficientBlock& coeffs);

/// Uniform midtread quantizer, round half away from zero:
/// q = delta * round(c / delta), applied per coefficient.
CoefficientBlock quantize(const CoefficientBlock& coeffs, double delta);

/// Transforms and quantizes every LxL block of the image. The returned grid
/// is also the quantization constraint set used by the POCS deblocker.
CoefficientGrid encode(const Image& img, const CodecConfig& cfg);

/// Inverse-transforms a coefficient grid back to an image, clamped to
/// [0, 255] but not rounded.
Image decode(const CoefficientGrid& grid);

/// decode(encode(img, cfg)): the blocky test-image generator.
Image encode_decode(const Image& img, const CodecConfig& cfg);

}  // namespace blockiq
