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

#if defined(__aarch64__)

#include <arm_neon.h>

#include "detail.hpp"

namespace blockiq::kern {
namespace {

double sum_sq_neon(const double* a, std::size_t n) {
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const float64x2_t v0 = vld1q_f64(a + i);
        const float64x2_t v1 = vld1q_f64(a + i + 2);
        acc0 = vfmaq_f64(acc0, v0, v0);
        acc1 = vfmaq_f64(acc1, v1, v1);
    }
    double total = vaddvq_f64(vaddq_f64(acc0, acc1));
    for (; i < n; ++i) total += a[i] * a[i];
    return total;
}

double sum_sq_diff_neon(const double* a, const double* b, std::size_t n) {
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const float64x2_t d0 = vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i));
        const float64x2_t d1 = vsubq_f64(vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
        acc0 = vfmaq_f64(acc0, d0, d0);
        acc1 = vfmaq_f64(acc1, d1, d1);
    }
    double total = vaddvq_f64(vaddq_f64(acc0, acc1));
    for (; i < n; ++i) {
        const double d = a[i] - b[i];
        total += d * d;
    }
    return total;
}

void mul_neon(const double* a, const double* b, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_f64(out + i, vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
    for (; i < n; ++i) out[i] = a[i] * b[i];
}

void clamp_neon(double* v, std::size_t n, double lo, double hi) {
    const float64x2_t vlo = vdupq_n_f64(lo);
    const float64x2_t vhi = vdupq_n_f64(hi);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_f64(v + i, vminq_f64(vmaxq_f64(vld1q_f64(v + i), vlo), vhi));
    for (; i < n; ++i) {
        const double t = (v[i] > lo) ? v[i] : lo;
        v[i] = (t < hi) ? t : hi;
    }
}

// mul + add, never fma: each lane must run the exact tap sequence of the
// scalar kernel
void conv2d_valid_neon(const double* src, int src_w, int src_h, const double* kernel, int k, double* dst) {
    const int out_w = src_w - k + 1;
    const int out_h = src_h - k + 1;
    for (int y = 0; y < out_h; ++y) {
        double* drow = dst + static_cast<std::size_t>(y) * out_w;
        int x = 0;
        for (; x + 2 <= out_w; x += 2) {
            float64x2_t acc = vdupq_n_f64(0.0);
            for (int ky = 0; ky < k; ++ky) {
                const double* srow = src + static_cast<std::size_t>(y + ky) * src_w + x;
                const double* krow = kernel + static_cast<std::size_t>(ky) * k;
                for (int kx = 0; kx < k; ++kx) {
                    const float64x2_t tap = vdupq_n_f64(krow[kx]);
                    acc = vaddq_f64(acc, vmulq_f64(tap, vld1q_f64(srow + kx)));
                }
            }
            vst1q_f64(drow + x, acc);
        }
        for (; x < out_w; ++x) drow[x] = detail::conv_tap_sum(src, src_w, kernel, k, y, x);
    }
}

double ssim_map_mean_neon(const double* mu_x, const double* mu_y, const double* xx, const double* yy,
                          const double* xy, std::size_t n, double c1, double c2) {
    const float64x2_t vc1 = vdupq_n_f64(c1);
    const float64x2_t vc2 = vdupq_n_f64(c2);
    const float64x2_t two = vdupq_n_f64(2.0);
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t mx = vld1q_f64(mu_x + i);
        const float64x2_t my = vld1q_f64(mu_y + i);
        const float64x2_t mx2 = vmulq_f64(mx, mx);
        const float64x2_t my2 = vmulq_f64(my, my);
        const float64x2_t mxy = vmulq_f64(mx, my);
        const float64x2_t sx2 = vsubq_f64(vld1q_f64(xx + i), mx2);
        const float64x2_t sy2 = vsubq_f64(vld1q_f64(yy + i), my2);
        const float64x2_t sxy = vsubq_f64(vld1q_f64(xy + i), mxy);
        const float64x2_t num =
            vmulq_f64(vaddq_f64(vmulq_f64(two, mxy), vc1), vaddq_f64(vmulq_f64(two, sxy), vc2));
        const float64x2_t den =
            vmulq_f64(vaddq_f64(vaddq_f64(mx2, my2), vc1), vaddq_f64(vaddq_f64(sx2, sy2), vc2));
        acc = vaddq_f64(acc, vdivq_f64(num, den));
    }
    double total = vaddvq_f64(acc);
    for (; i < n; ++i) total += detail::ssim_window(mu_x[i], mu_y[i], xx[i], yy[i], xy[i], c1, c2);
    return total / static_cast<double>(n);
}

}  // namespace

const Ops* neon_ops() {
    static const Ops table{
        "neon",      sum_sq_neon,       sum_sq_diff_neon,   mul_neon,
        clamp_neon,  conv2d_valid_neon, ssim_map_mean_neon,
    };
    return &table;
}

}  // namespace blockiq::kern

#else  // !__aarch64__

namespace blockiq::kern {

const Ops* neon_ops() { return nullptr; }

}  // namespace blockiq::kern

#endif
