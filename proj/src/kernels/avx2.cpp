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

#if (defined(__x86_64__) || defined(_M_X64)) && defined(__AVX2__) && defined(__FMA__)
#define BLOCKIQ_HAVE_AVX2 1
#else
#define BLOCKIQ_HAVE_AVX2 0
#endif

#if BLOCKIQ_HAVE_AVX2

#include <immintrin.h>

#include "detail.hpp"

namespace blockiq::kern {
namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    const __m128d shuf = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, shuf));
}

double sum_sq_avx2(const double* a, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256d v0 = _mm256_loadu_pd(a + i);
        const __m256d v1 = _mm256_loadu_pd(a + i + 4);
        acc0 = _mm256_fmadd_pd(v0, v0, acc0);
        acc1 = _mm256_fmadd_pd(v1, v1, acc1);
    }
    double total = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) total += a[i] * a[i];
    return total;
}

double sum_sq_diff_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256d d0 = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        const __m256d d1 = _mm256_sub_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4));
        acc0 = _mm256_fmadd_pd(d0, d0, acc0);
        acc1 = _mm256_fmadd_pd(d1, d1, acc1);
    }
    double total = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) {
        const double d = a[i] - b[i];
        total += d * d;
    }
    return total;
}

void mul_avx2(const double* a, const double* b, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    for (; i < n; ++i) out[i] = a[i] * b[i];
}

void clamp_avx2(double* v, std::size_t n, double lo, double hi) {
    const __m256d vlo = _mm256_set1_pd(lo);
    const __m256d vhi = _mm256_set1_pd(hi);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d x = _mm256_loadu_pd(v + i);
        _mm256_storeu_pd(v + i, _mm256_min_pd(_mm256_max_pd(x, vlo), vhi));
    }
    for (; i < n; ++i) {
        const double t = (v[i] > lo) ? v[i] : lo;
        v[i] = (t < hi) ? t : hi;
    }
}

// mul + add, never fmadd: each lane must run the exact tap sequence of the
// scalar kernel
void conv2d_valid_avx2(const double* src, int src_w, int src_h, const double* kernel, int k, double* dst) {
    const int out_w = src_w - k + 1;
    const int out_h = src_h - k + 1;
    for (int y = 0; y < out_h; ++y) {
        double* drow = dst + static_cast<std::size_t>(y) * out_w;
        int x = 0;
        for (; x + 4 <= out_w; x += 4) {
            __m256d acc = _mm256_setzero_pd();
            for (int ky = 0; ky < k; ++ky) {
                const double* srow = src + static_cast<std::size_t>(y + ky) * src_w + x;
                const double* krow = kernel + static_cast<std::size_t>(ky) * k;
                for (int kx = 0; kx < k; ++kx) {
                    const __m256d tap = _mm256_set1_pd(krow[kx]);
                    acc = _mm256_add_pd(acc, _mm256_mul_pd(tap, _mm256_loadu_pd(srow + kx)));
                }
            }
            _mm256_storeu_pd(drow + x, acc);
        }
        for (; x < out_w; ++x) drow[x] = detail::conv_tap_sum(src, src_w, kernel, k, y, x);
    }
}

double ssim_map_mean_avx2(const double* mu_x, const double* mu_y, const double* xx, const double* yy,
                          const double* xy, std::size_t n, double c1, double c2) {
    const __m256d vc1 = _mm256_set1_pd(c1);
    const __m256d vc2 = _mm256_set1_pd(c2);
    const __m256d two = _mm256_set1_pd(2.0);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d mx = _mm256_loadu_pd(mu_x + i);
        const __m256d my = _mm256_loadu_pd(mu_y + i);
        const __m256d mx2 = _mm256_mul_pd(mx, mx);
        const __m256d my2 = _mm256_mul_pd(my, my);
        const __m256d mxy = _mm256_mul_pd(mx, my);
        const __m256d sx2 = _mm256_sub_pd(_mm256_loadu_pd(xx + i), mx2);
        const __m256d sy2 = _mm256_sub_pd(_mm256_loadu_pd(yy + i), my2);
        const __m256d sxy = _mm256_sub_pd(_mm256_loadu_pd(xy + i), mxy);
        const __m256d num = _mm256_mul_pd(_mm256_add_pd(_mm256_mul_pd(two, mxy), vc1),
                                          _mm256_add_pd(_mm256_mul_pd(two, sxy), vc2));
        const __m256d den = _mm256_mul_pd(_mm256_add_pd(_mm256_add_pd(mx2, my2), vc1),
                                          _mm256_add_pd(_mm256_add_pd(sx2, sy2), vc2));
        acc = _mm256_add_pd(acc, _mm256_div_pd(num, den));
    }
    double total = hsum(acc);
    for (; i < n; ++i) total += detail::ssim_window(mu_x[i], mu_y[i], xx[i], yy[i], xy[i], c1, c2);
    return total / static_cast<double>(n);
}

}  // namespace

const Ops* avx2_ops() {
#if defined(__GNUC__) || defined(__clang__)
    static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    static const bool supported = false;
#endif
    if (!supported) return nullptr;
    static const Ops table{
        "avx2",      sum_sq_avx2,       sum_sq_diff_avx2,   mul_avx2,
        clamp_avx2,  conv2d_valid_avx2, ssim_map_mean_avx2,
    };
    return &table;
}

}  // namespace blockiq::kern

#else  // !BLOCKIQ_HAVE_AVX2

namespace blockiq::kern {

const Ops* avx2_ops() { return nullptr; }

}  // namespace blockiq::kern

#endif
