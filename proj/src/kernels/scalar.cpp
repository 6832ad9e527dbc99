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

#include "blockiq/kernels.hpp"

#include "detail.hpp"

namespace blockiq::kern {
namespace {

double sum_sq_scalar(const double* a, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * a[i];
    return acc;
}

double sum_sq_diff_scalar(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = a[i] - b[i];
        acc += d * d;
    }
    return acc;
}

void mul_scalar(const double* a, const double* b, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

// written as compare-select so it matches the min/max instruction semantics
// of the vector backends bit for bit, signed zeros included
void clamp_scalar(double* v, std::size_t n, double lo, double hi) {
    for (std::size_t i = 0; i < n; ++i) {
        const double t = (v[i] > lo) ? v[i] : lo;
        v[i] = (t < hi) ? t : hi;
    }
}

void conv2d_valid_scalar(const double* src, int src_w, int src_h, const double* kernel, int k, double* dst) {
    const int out_w = src_w - k + 1;
    const int out_h = src_h - k + 1;
    for (int y = 0; y < out_h; ++y) {
        double* drow = dst + static_cast<std::size_t>(y) * out_w;
        for (int x = 0; x < out_w; ++x) drow[x] = detail::conv_tap_sum(src, src_w, kernel, k, y, x);
    }
}

double ssim_map_mean_scalar(const double* mu_x, const double* mu_y, const double* xx, const double* yy,
                            const double* xy, std::size_t n, double c1, double c2) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += detail::ssim_window(mu_x[i], mu_y[i], xx[i], yy[i], xy[i], c1, c2);
    return acc / static_cast<double>(n);
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops table{
        "scalar",      sum_sq_scalar,       sum_sq_diff_scalar,   mul_scalar,
        clamp_scalar,  conv2d_valid_scalar, ssim_map_mean_scalar,
    };
    return table;
}

}  // namespace blockiq::kern
