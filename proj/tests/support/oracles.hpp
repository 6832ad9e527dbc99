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

// Independent reference implementations the unit and acceptance tests score
// the library against. Everything here is written straight from the
// defining sums: O(L^4) transforms, per-pair and per-window loops, no shared
// code with the library internals.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "blockiq/image.hpp"
#include "blockiq/metrics.hpp"

namespace oracle {

std::vector<double> dct2_brute(const std::vector<double>& block, int l);
std::vector<double> idct2_brute(const std::vector<double>& coeff, int l);

double mse_loop(const blockiq::Image& a, const blockiq::Image& b);
double psnr_loop(const blockiq::Image& a, const blockiq::Image& b);

/// Sliding-window SSIM via central moments (the library uses raw moments).
double ssim_sliding(const blockiq::Image& ref, const blockiq::Image& test, const blockiq::SsimConfig& cfg);

struct BoundaryOracle {
    double d_b = 0.0;
    double d_bc_hv = 0.0;
    double d_bc_diagonal = 0.0;
    double d_bc_diagonal_formula = 0.0;
    double d_bc_combined = 0.0;
};

/// Fresh pair-by-pair enumeration of all six sets and the derived means.
BoundaryOracle boundary_brute(const blockiq::Image& img, int b);

double bef_brute(const blockiq::Image& img, int b, blockiq::PairMode mode, bool formula_counts);
double psnr_b_brute(const blockiq::Image& ref, const blockiq::Image& test, int b, blockiq::PairMode mode,
                    bool formula_counts);

/// Direct convolution with symmetric mirror padding (iterated reflection).
blockiq::Image conv_mirror(const blockiq::Image& img, const std::vector<double>& kernel, int k);

struct DistortionOracle {
    double mdd = 0.0, mdi = 0.0, mdc = 0.0;
    std::vector<std::uint8_t> ddr, dir;
};

DistortionOracle analyze_brute(const blockiq::Image& ref, const blockiq::Image& decoded,
                               const blockiq::Image& deblocked);

/// Uniformly random integer-valued image, values in [lo, hi].
blockiq::Image random_image(std::mt19937& rng, int width, int height, int lo = 0, int hi = 255);

/// Random real-valued image (not storage-quantized).
blockiq::Image random_real_image(std::mt19937& rng, int width, int height, double lo, double hi);

}  // namespace oracle
