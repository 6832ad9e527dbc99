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

#include "blockiq/deblock.hpp"

#include <cmath>
#include <string>

#include "blockiq/kernels.hpp"

namespace blockiq {

LowPassConfig box_lowpass(int size) {
    if (size < 1 || size % 2 == 0)
        raise(Errc::invalid_kernel, "kernel size must be odd and positive, got " + std::to_string(size));
    LowPassConfig cfg;
    cfg.kernel_size = size;
    cfg.kernel.assign(static_cast<std::size_t>(size) * size, 1.0 / (static_cast<double>(size) * size));
    return cfg;
}

LowPassConfig gaussian_lowpass(int size, double sigma) {
    if (size < 1 || size % 2 == 0)
        raise(Errc::invalid_kernel, "kernel size must be odd and positive, got " + std::to_string(size));
    if (!(sigma > 0.0) || !std::isfinite(sigma)) raise(Errc::invalid_kernel, "sigma must be positive and finite");
    LowPassConfig cfg;
    cfg.kernel_size = size;
    cfg.kernel.resize(static_cast<std::size_t>(size) * size);
    const int c = size / 2;
    double sum = 0.0;
    for (int y = 0; y < size; ++y)
        for (int x = 0; x < size; ++x) {
            const double d2 = static_cast<double>((x - c) * (x - c) + (y - c) * (y - c));
            const double w = std::exp(-d2 / (2.0 * sigma * sigma));
            cfg.kernel[static_cast<std::size_t>(y) * size + x] = w;
            sum += w;
        }
    for (double& w : cfg.kernel) w /= sum;
    return cfg;
}

void validate(const LowPassConfig& cfg) {
    if (cfg.kernel_size < 1 || cfg.kernel_size % 2 == 0)
        raise(Errc::invalid_kernel, "kernel size must be odd and positive, got " + std::to_string(cfg.kernel_size));
    if (cfg.kernel.size() != static_cast<std::size_t>(cfg.kernel_size) * cfg.kernel_size)
        raise(Errc::invalid_kernel, "kernel weight count does not match its size");
    double sum = 0.0;
    for (double w : cfg.kernel) {
        if (!(w >= 0.0) || !std::isfinite(w)) raise(Errc::invalid_kernel, "kernel weights must be non-negative");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12) raise(Errc::invalid_kernel, "kernel weights must sum to 1");
}

namespace {

// symmetric padding: the edge pixel is repeated (  2 1 0 | 0 1 2  )
int mirror_index(int i, int n) {
    if (n == 1) return 0;
    const int period = 2 * n;
    i %= period;
    if (i < 0) i += period;
    return (i < n) ? i : period - 1 - i;
}

}  // namespace

Image lowpass(const Image& img, const LowPassConfig& cfg) {
    validate(cfg);
    if (img.width <= 0 || img.height <= 0) raise(Errc::invalid_config, "empty image");

    const int pad = cfg.kernel_size / 2;
    const int pw = img.width + 2 * pad;
    const int ph = img.height + 2 * pad;
    std::vector<double> padded(static_cast<std::size_t>(pw) * ph);
    for (int y = 0; y < ph; ++y) {
        const double* src = img.row(mirror_index(y - pad, img.height));
        double* dst = padded.data() + static_cast<std::size_t>(y) * pw;
        for (int x = 0; x < pw; ++x) dst[x] = src[mirror_index(x - pad, img.width)];
    }

    Image out = make_image(img.width, img.height);
    kern::active().conv2d_valid(padded.data(), pw, ph, cfg.kernel.data(), cfg.kernel_size, out.samples.data());
    kern::active().clamp(out.samples.data(), out.samples.size(), 0.0, 255.0);
    return out;
}

Image project_qcs(const Image& img, const CodecConfig& codec, const CoefficientGrid& decoded_coeffs) {
    validate(codec);
    if (decoded_coeffs.block_size != codec.block_size)
        raise(Errc::invalid_config, "constraint grid block size does not match the codec");
    if (decoded_coeffs.width() != img.width || decoded_coeffs.height() != img.height)
        raise(Errc::dimension_mismatch, "constraint grid does not cover the image");

    const int l = codec.block_size;
    const double half = codec.delta / 2.0;
    Image out = make_image(img.width, img.height);
    std::vector<double> block(static_cast<std::size_t>(l) * l);
    for (int by = 0; by < decoded_coeffs.blocks_y; ++by)
        for (int bx = 0; bx < decoded_coeffs.blocks_x; ++bx) {
            for (int r = 0; r < l; ++r) {
                const double* src = img.row(by * l + r) + static_cast<std::size_t>(bx) * l;
                for (int c = 0; c < l; ++c) block[static_cast<std::size_t>(r) * l + c] = src[c];
            }
            CoefficientBlock coeffs = dct2(block, l);
            const CoefficientBlock& q =
                decoded_coeffs.blocks[static_cast<std::size_t>(by) * decoded_coeffs.blocks_x + bx];
            for (std::size_t i = 0; i < coeffs.coeff.size(); ++i) {
                const double lo = q.coeff[i] - half;
                const double hi = q.coeff[i] + half;
                const double t = (coeffs.coeff[i] > lo) ? coeffs.coeff[i] : lo;
                coeffs.coeff[i] = (t < hi) ? t : hi;
            }
            const std::vector<double> pixels = idct2(coeffs);
            for (int r = 0; r < l; ++r) {
                double* dst = out.row(by * l + r) + static_cast<std::size_t>(bx) * l;
                for (int c = 0; c < l; ++c) dst[c] = pixels[static_cast<std::size_t>(r) * l + c];
            }
        }
    return out;
}

Image pocs(const Image& img, const PocsConfig& cfg, const CoefficientGrid& decoded_coeffs) {
    if (cfg.iterations < 0)
        raise(Errc::invalid_config, "iteration count must be non-negative, got " + std::to_string(cfg.iterations));
    Image cur = img;
    for (int it = 0; it < cfg.iterations; ++it) {
        cur = lowpass(cur, cfg.smoothing);
        cur = project_qcs(cur, cfg.codec, decoded_coeffs);
    }
    kern::active().clamp(cur.samples.data(), cur.samples.size(), 0.0, 255.0);
    return cur;
}

}  // namespace blockiq
