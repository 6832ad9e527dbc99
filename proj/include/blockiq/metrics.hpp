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
#include <string_view>
#include <vector>

#include "blockiq/geometry.hpp"
#include "blockiq/image.hpp"

namespace blockiq {

/// Which neighbor pairs feed the non-boundary mean D_B^C of the blocking
/// effect factor. Boundary pairs are always horizontal+vertical.
///
///  - hv:            horizontal + vertical non-boundary pairs (the original
///                    PSNR-B formulation).
///  - diagonal_only:  same-block down-right and down-left diagonal pairs.
///  - combined:       all four non-boundary sets, normalized by
///                    2*(n_hbc + n_vbc).
enum class PairMode { hv = 0, diagonal_only = 1, combined = 2 };

inline constexpr std::array<PairMode, 3> all_pair_modes = {PairMode::hv, PairMode::diagonal_only,
                                                           PairMode::combined};

std::string_view to_string(PairMode mode);
PairMode pair_mode_from_string(std::string_view name);

/// SSIM parameters. window holds the normalized 2-D weights (row-major,
/// window_size^2 of them, summing to 1). Defaults: 11x11 Gaussian with
/// sigma 1.5, c1 = (0.01*255)^2, c2 = (0.03*255)^2, c3 = c2/2, unit
/// exponents. With unit exponents and c3 = c2/2 the three comparison terms
/// collapse into the usual two-factor form, which is the fast path.
struct SsimConfig {
    int window_size = 11;
    std::vector<double> window;
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
    double alpha = 1.0;
    double beta = 1.0;
    double gamma = 1.0;
};

SsimConfig default_ssim();

/// Normalized 2-D Gaussian window of the given odd size.
std::vector<double> gaussian_window(int size, double sigma);

void validate(const SsimConfig& cfg, const Image& img);

/// Blocking-effect-factor parameters. block_sizes lists the block sizes that
/// contribute blockiness (one BEF term each). When formula_diagonal_counts
/// is set, diagonal_only mode divides by the closed-form counts instead of
/// the enumerated same-block cardinalities (see geometry.hpp).
struct BefConfig {
    std::vector<int> block_sizes = {8};
    PairMode pair_mode = PairMode::hv;
    bool formula_diagonal_counts = false;
};

double mse(const Image& ref, const Image& test);

/// 10*log10(255^2 / MSE); +infinity for identical images.
double psnr(const Image& ref, const Image& test);

double ssim(const Image& ref, const Image& test, const SsimConfig& cfg);

struct BoundaryDiff {
    double d_b = 0.0;   // mean boundary pair squared difference
    double d_bc = 0.0;  // mean non-boundary pair squared difference
};

/// Mean boundary / non-boundary neighbor-pair squared differences of the
/// test image. Throws invalid_geometry when the grid is a single block (no
/// boundary pairs to average).
BoundaryDiff boundary_differences(const Image& test, const BlockGeometry& geom, PairMode mode,
                                  bool formula_diagonal_counts = false);

/// Blocking effect factor, eta-gated so it is never negative:
/// sum over block sizes of eta_k * (D_B - D_B^C), with
/// eta_k = log2(B_k) / log2(min(n_h, n_v)) when D_B > D_B^C, else 0.
/// Uses only the test image. A single-block grid contributes 0 (D_B is read
/// as 0: one block cannot exhibit blocking).
double bef(const Image& test, const BefConfig& cfg);

/// 10*log10(255^2 / (MSE + BEF_tot)).
double psnr_b(const Image& ref, const Image& test, const BefConfig& cfg);

struct PairModeScores {
    double bef_tot = 0.0;
    double mse_b = 0.0;
    double psnr_b = 0.0;
};

struct BlockSizeDiffs {
    int block_size = 0;
    double d_b = 0.0;
    std::array<double, 3> d_bc = {0.0, 0.0, 0.0};  // indexed by PairMode
};

/// Everything the toolkit knows about one (reference, test) pair: MSE, PSNR,
/// SSIM, and the BEF/MSE-B/PSNR-B triple for each pair mode, plus the raw
/// D_B / D_B^C values per block size.
struct MetricReport {
    double mse = 0.0;
    double psnr = 0.0;
    double ssim = 0.0;
    std::array<PairModeScores, 3> modes;  // indexed by PairMode
    std::vector<BlockSizeDiffs> diffs;
};

/// Full report; cfg.pair_mode is ignored here because all three modes are
/// evaluated.
MetricReport score(const Image& ref, const Image& test, const BefConfig& bef_cfg, const SsimConfig& ssim_cfg);

}  // namespace blockiq
