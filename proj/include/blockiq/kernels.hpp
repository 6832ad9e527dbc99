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
#include <string_view>
#include <vector>

namespace blockiq::kern {

/// Table of the arithmetic inner loops everything else is built on.
///
/// The scalar table is the reference semantics. SIMD backends must agree
/// with it bit-for-bit on the elementwise kernels (mul, clamp, conv2d_valid,
/// and the per-window values inside ssim_map_mean: same operation order, no
/// FMA contraction) and to a few ulp on the reductions, where accumulator
/// splitting reorders the sums. The equivalence tests pin both promises.
struct Ops {
    const char* name;

    /// sum of a[i]^2
    double (*sum_sq)(const double* a, std::size_t n);
    /// sum of (a[i] - b[i])^2
    double (*sum_sq_diff)(const double* a, const double* b, std::size_t n);
    /// out[i] = a[i] * b[i]
    void (*mul)(const double* a, const double* b, double* out, std::size_t n);
    /// v[i] = min(max(v[i], lo), hi)
    void (*clamp)(double* v, std::size_t n, double lo, double hi);
    /// Valid 2-D cross-correlation: dst is (src_w-k+1) x (src_h-k+1),
    /// dst(y,x) = sum_{ky,kx} k(ky,kx) * src(y+ky, x+kx). Taps accumulate in
    /// row-major order per output pixel.
    void (*conv2d_valid)(const double* src, int src_w, int src_h, const double* kernel, int k, double* dst);
    /// Mean of the local SSIM map given per-window weighted moments
    /// (means mu_x/mu_y and raw second moments xx/yy/xy).
    double (*ssim_map_mean)(const double* mu_x, const double* mu_y, const double* xx, const double* yy,
                            const double* xy, std::size_t n, double c1, double c2);
};

/// Scalar reference kernels; always available.
const Ops& scalar_ops();

/// AVX2+FMA kernels, or nullptr when the build or the CPU lacks them.
const Ops* avx2_ops();

/// NEON kernels (aarch64 builds), or nullptr elsewhere.
const Ops* neon_ops();

/// Currently selected table. Defaults to the best available backend.
const Ops& active();

/// Selects a backend by name ("auto", "scalar", "avx2", "neon").
/// Returns false when the named backend is not available on this machine.
bool set_active(std::string_view name);

std::string_view active_name();

/// Names of the backends usable on this machine, preference order first.
std::vector<std::string_view> available();

}  // namespace blockiq::kern
