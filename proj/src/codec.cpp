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

#include "blockiq/codec.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "blockiq/geometry.hpp"
#include "blockiq/kernels.hpp"

namespace blockiq {

void validate(const CodecConfig& cfg) {
    if (cfg.block_size < 2)
        raise(Errc::invalid_config, "codec block size must be at least 2, got " + std::to_string(cfg.block_size));
    if (!(cfg.delta > 0.0) || !std::isfinite(cfg.delta))
        raise(Errc::invalid_config, "quantization step must be a positive finite number");
}

const std::vector<double>& dct_matrix(int l) {
    if (l < 1) raise(Errc::invalid_config, "transform size must be positive, got " + std::to_string(l));
    static std::mutex mtx;
    static std::map<int, std::vector<double>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(l);
    if (it != cache.end()) return it->second;

    std::vector<double> t(static_cast<std::size_t>(l) * l);
    const double norm0 = std::sqrt(1.0 / l);
    const double norm = std::sqrt(2.0 / l);
    for (int k = 0; k < l; ++k)
        for (int n = 0; n < l; ++n)
            t[static_cast<std::size_t>(k) * l + n] =
                (k == 0) ? norm0 : norm * std::cos(std::numbers::pi * (2.0 * n + 1.0) * k / (2.0 * l));
    return cache.emplace(l, std::move(t)).first->second;
}

namespace {

// all operands are l x l row-major
void matmul(const double* a, const double* b, double* out, int l) {
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            double acc = 0.0;
            for (int m = 0; m < l; ++m) acc += a[i * l + m] * b[m * l + j];
            out[i * l + j] = acc;
        }
}

void matmul_nt(const double* a, const double* b, double* out, int l) {  // a * b^T
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            double acc = 0.0;
            for (int m = 0; m < l; ++m) acc += a[i * l + m] * b[j * l + m];
            out[i * l + j] = acc;
        }
}

void matmul_tn(const double* a, const double* b, double* out, int l) {  // a^T * b
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            double acc = 0.0;
            for (int m = 0; m < l; ++m) acc += a[m * l + i] * b[m * l + j];
            out[i * l + j] = acc;
        }
}

}  // namespace

CoefficientBlock dct2(const std::vector<double>& block, int l) {
    if (block.size() != static_cast<std::size_t>(l) * l)
        raise(Errc::invalid_config, "block sample count does not match transform size " + std::to_string(l));
    const std::vector<double>& t = dct_matrix(l);
    std::vector<double> tmp(block.size());
    CoefficientBlock out{l, std::vector<double>(block.size())};
    matmul(t.data(), block.data(), tmp.data(), l);
    matmul_nt(tmp.data(), t.data(), out.coeff.data(), l);
    return out;
}

std::vector<double> idct2(const CoefficientBlock& coeffs) {
    const int l = coeffs.block_size;
    if (l < 1 || coeffs.coeff.size() != static_cast<std::size_t>(l) * l)
        raise(Errc::invalid_config, "coefficient block is inconsistent with its size field");
    const std::vector<double>& t = dct_matrix(l);
    std::vector<double> tmp(coeffs.coeff.size());
    std::vector<double> out(coeffs.coeff.size());
    matmul_tn(t.data(), coeffs.coeff.data(), tmp.data(), l);
    matmul(tmp.data(), t.data(), out.data(), l);
    return out;
}

CoefficientBlock quantize(const CoefficientBlock& coeffs, double delta) {
    if (!(delta > 0.0) || !std::isfinite(delta))
        raise(Errc::invalid_config, "quantization step must be a positive finite number");
    CoefficientBlock out = coeffs;
    for (double& c : out.coeff) c = delta * std::round(c / delta);
    return out;
}

CoefficientGrid encode(const Image& img, const CodecConfig& cfg) {
    validate(cfg);
    make_geometry(img.width, img.height, cfg.block_size);  // same divisibility rules

    const int l = cfg.block_size;
    CoefficientGrid grid;
    grid.block_size = l;
    grid.blocks_x = img.width / l;
    grid.blocks_y = img.height / l;
    grid.blocks.reserve(static_cast<std::size_t>(grid.blocks_x) * grid.blocks_y);

    std::vector<double> block(static_cast<std::size_t>(l) * l);
    for (int by = 0; by < grid.blocks_y; ++by)
        for (int bx = 0; bx < grid.blocks_x; ++bx) {
            for (int r = 0; r < l; ++r) {
                const double* src = img.row(by * l + r) + static_cast<std::size_t>(bx) * l;
                for (int c = 0; c < l; ++c) block[static_cast<std::size_t>(r) * l + c] = src[c];
            }
            grid.blocks.push_back(quantize(dct2(block, l), cfg.delta));
        }
    return grid;
}

Image decode(const CoefficientGrid& grid) {
    if (grid.block_size < 1 || grid.blocks_x < 1 || grid.blocks_y < 1 ||
        grid.blocks.size() != static_cast<std::size_t>(grid.blocks_x) * grid.blocks_y)
        raise(Errc::invalid_config, "coefficient grid is inconsistent");

    const int l = grid.block_size;
    Image img = make_image(grid.width(), grid.height());
    for (int by = 0; by < grid.blocks_y; ++by)
        for (int bx = 0; bx < grid.blocks_x; ++bx) {
            const std::vector<double> block = idct2(grid.blocks[static_cast<std::size_t>(by) * grid.blocks_x + bx]);
            for (int r = 0; r < l; ++r) {
                double* dst = img.row(by * l + r) + static_cast<std::size_t>(bx) * l;
                for (int c = 0; c < l; ++c) dst[c] = block[static_cast<std::size_t>(r) * l + c];
            }
        }
    kern::active().clamp(img.samples.data(), img.samples.size(), 0.0, 255.0);
    return img;
}

Image encode_decode(const Image& img, const CodecConfig& cfg) { return decode(encode(img, cfg)); }

}  // namespace blockiq
