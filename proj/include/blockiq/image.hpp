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

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "blockiq/error.hpp"

namespace blockiq {

/// Grayscale image with real-valued samples in row-major order.
///
/// Samples are doubles so a processing chain (codec, filters) can carry
/// sub-integer values; quantization to 8-bit happens only when the image is
/// written to storage.
struct Image {
    int width = 0;
    int height = 0;
    std::vector<double> samples;

    static constexpr double peak = 255.0;

    double& at(int row, int col) { return samples[static_cast<std::size_t>(row) * width + col]; }
    double at(int row, int col) const { return samples[static_cast<std::size_t>(row) * width + col]; }

    const double* row(int r) const { return samples.data() + static_cast<std::size_t>(r) * width; }
    double* row(int r) { return samples.data() + static_cast<std::size_t>(r) * width; }

    std::size_t pixel_count() const { return samples.size(); }
};

/// Builds a width x height image filled with `value`. Throws on non-positive dims.
Image make_image(int width, int height, double value = 0.0);

/// Storage quantization rule: round half away from zero, then clamp to [0, 255].
double storage_round(double v);

/// Applies storage_round to every sample.
Image quantize_to_storage(const Image& img);

/// Parses a binary PGM (P5, maxval 255). Comment lines starting with '#' are
/// accepted inside the header. Distinct errors: malformed_header,
/// unsupported_depth (maxval != 255), truncated_payload, trailing_bytes.
Image load_pgm(std::span<const std::uint8_t> bytes);

/// Serializes to canonical binary PGM ("P5\n<w> <h>\n255\n" + payload).
/// Samples go through storage_round, so this is total. load_pgm inverts it
/// byte-exactly.
std::vector<std::uint8_t> save_pgm(const Image& img);

Image read_pgm(const std::filesystem::path& path);
void write_pgm(const std::filesystem::path& path, const Image& img);

inline void require_same_dims(const Image& a, const Image& b, const char* what) {
    if (a.width != b.width || a.height != b.height)
        raise(Errc::dimension_mismatch, std::string(what) + ": images are " + std::to_string(a.width) + "x" +
                                            std::to_string(a.height) + " vs " + std::to_string(b.width) + "x" +
                                            std::to_string(b.height));
}

}  // namespace blockiq
