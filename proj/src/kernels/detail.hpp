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

#include <cstddef>

// Shared scalar bodies. Both the reference table and the SIMD remainder
// loops use these, so a vector backend cannot drift from the scalar
// formula without the equivalence tests noticing.

namespace blockiq::kern::detail {

inline double ssim_window(double mu_x, double mu_y, double xx, double yy, double xy, double c1, double c2) {
    const double mu_x2 = mu_x * mu_x;
    const double mu_y2 = mu_y * mu_y;
    const double mu_xy = mu_x * mu_y;
    const double sigma_x2 = xx - mu_x2;
    const double sigma_y2 = yy - mu_y2;
    const double sigma_xy = xy - mu_xy;
    const double num = (2.0 * mu_xy + c1) * (2.0 * sigma_xy + c2);
    const double den = (mu_x2 + mu_y2 + c1) * (sigma_x2 + sigma_y2 + c2);
    return num / den;
}

inline double conv_tap_sum(const double* src, int src_w, const double* kernel, int k, int y, int x) {
    double acc = 0.0;
    for (int ky = 0; ky < k; ++ky) {
        const double* row = src + static_cast<std::size_t>(y + ky) * src_w + x;
        const double* krow = kernel + static_cast<std::size_t>(ky) * k;
        for (int kx = 0; kx < k; ++kx) acc += krow[kx] * row[kx];
    }
    return acc;
}

}  // namespace blockiq::kern::detail
