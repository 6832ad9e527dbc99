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

#include <array>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "blockiq/codec.hpp"
#include "blockiq/deblock.hpp"
#include "blockiq/image.hpp"
#include "blockiq/metrics.hpp"

namespace blockiq {

enum class Method { none = 0, lowpass3 = 1, lowpass7 = 2, pocs = 3 };

inline constexpr std::array<Method, 4> all_methods = {Method::none, Method::lowpass3, Method::lowpass7,
                                                      Method::pocs};

std::string_view to_string(Method m);
Method method_from_string(std::string_view name);

/// The quantization-step sweep: every input image is coded at every delta,
/// deblocked with every method, and scored.
struct SweepSpec {
    std::vector<double> deltas = {10, 20, 30, 40, 50, 100};
    std::vector<Method> methods = {Method::none, Method::lowpass3, Method::lowpass7, Method::pocs};
    CodecConfig codec;
    BefConfig bef;
    SsimConfig ssim = default_ssim();
    int pocs_iterations = 5;
    std::vector<std::filesystem::path> inputs;
    std::filesystem::path out_dir;
};

void validate(const SweepSpec& spec);

struct SweepRow {
    std::string image;
    double delta = 0.0;
    Method method = Method::none;
    double psnr = 0.0;
    double ssim = 0.0;
    std::array<double, 3> psnr_b = {};  // indexed by PairMode
    std::array<double, 3> bef = {};
    double d_b = 0.0;
    std::array<double, 3> d_bc = {};
    double mdd = 0.0;
    double mdi = 0.0;
    double mdc = 0.0;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    std::vector<std::string> skipped;  // "input: reason" per failed input
};

/// Runs the sweep over images already in memory. Row order is input order,
/// then delta ascending, then method order. Images that fail validation are
/// reported in `skipped` and produce no rows.
SweepResult run_sweep(const SweepSpec& spec, const std::vector<std::pair<std::string, Image>>& images);

/// Loads spec.inputs (PGM, or PPM reduced to luma) and runs the sweep.
/// Unreadable inputs are skipped and reported.
SweepResult run_sweep(const SweepSpec& spec);

/// Loads a P5 PGM as-is, or a P6 PPM reduced to luma with the BT.601
/// weights round(0.299 R + 0.587 G + 0.114 B).
Image load_input(const std::filesystem::path& path);

/// RFC-4180 CSV with a fixed header, numeric values at 6 decimal places,
/// LF line endings. Byte-deterministic for identical rows.
std::string emit_csv(std::span<const SweepRow> rows);

/// One SVG line chart (delta on x) per (image, metric), as
/// (filename, content) pairs. Throws invalid_config for an empty row set.
std::vector<std::pair<std::string, std::string>> emit_plots(std::span<const SweepRow> rows);

}  // namespace blockiq
