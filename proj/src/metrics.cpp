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

#include "blockiq/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "blockiq/kernels.hpp"

namespace blockiq {

std::string_view to_string(PairMode mode) {
    switch (mode) {
        case PairMode::hv: return "hv";
        case PairMode::diagonal_only: return "diagonal";
        case PairMode::combined: return "combined";
    }
    return "?";
}

PairMode pair_mode_from_string(std::string_view name) {
    if (name == "hv") return PairMode::hv;
    if (name == "diagonal" || name == "diagonal-only") return PairMode::diagonal_only;
    if (name == "combined") return PairMode::combined;
    raise(Errc::invalid_config, "unknown pair mode '" + std::string(name) + "' (hv, diagonal, combined)");
}

std::vector<double> gaussian_window(int size, double sigma) {
    if (size < 1 || size % 2 == 0)
        raise(Errc::invalid_kernel, "window size must be odd and positive, got " + std::to_string(size));
    if (!(sigma > 0.0) || !std::isfinite(sigma)) raise(Errc::invalid_kernel, "sigma must be positive and finite");
    std::vector<double> w(static_cast<std::size_t>(size) * size);
    const int c = size / 2;
    double sum = 0.0;
    for (int y = 0; y < size; ++y)
        for (int x = 0; x < size; ++x) {
            const double d2 = static_cast<double>((x - c) * (x - c) + (y - c) * (y - c));
            const double g = std::exp(-d2 / (2.0 * sigma * sigma));
            w[static_cast<std::size_t>(y) * size + x] = g;
            sum += g;
        }
    for (double& g : w) g /= sum;
    return w;
}

SsimConfig default_ssim() {
    SsimConfig cfg;
    cfg.window_size = 11;
    cfg.window = gaussian_window(11, 1.5);
    cfg.c1 = (0.01 * Image::peak) * (0.01 * Image::peak);
    cfg.c2 = (0.03 * Image::peak) * (0.03 * Image::peak);
    cfg.c3 = cfg.c2 / 2.0;
    return cfg;
}

void validate(const SsimConfig& cfg, const Image& img) {
    if (cfg.window_size < 1)
        raise(Errc::invalid_config, "window size must be positive, got " + std::to_string(cfg.window_size));
    if (cfg.window.size() != static_cast<std::size_t>(cfg.window_size) * cfg.window_size)
        raise(Errc::invalid_config, "window weight count does not match its size");
    double sum = 0.0;
    for (double w : cfg.window) {
        if (!(w >= 0.0) || !std::isfinite(w)) raise(Errc::invalid_config, "window weights must be non-negative");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12) raise(Errc::invalid_config, "window weights must sum to 1");
    if (!(cfg.c1 > 0.0) || !(cfg.c2 > 0.0) || !(cfg.c3 > 0.0))
        raise(Errc::invalid_config, "stabilization constants must be positive");
    if (!std::isfinite(cfg.alpha) || !std::isfinite(cfg.beta) || !std::isfinite(cfg.gamma))
        raise(Errc::invalid_config, "exponents must be finite");
    if (img.width < cfg.window_size || img.height < cfg.window_size)
        raise(Errc::invalid_config, "image " + std::to_string(img.width) + "x" + std::to_string(img.height) +
                                        " is smaller than the " + std::to_string(cfg.window_size) + "-wide window");
}

double mse(const Image& ref, const Image& test) {
    require_same_dims(ref, test, "mse");
    return kern::active().sum_sq_diff(ref.samples.data(), test.samples.data(), ref.pixel_count()) /
           static_cast<double>(ref.pixel_count());
}

namespace {

double psnr_from_mse(double m) {
    if (m == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(Image::peak * Image::peak / m);
}

}  // namespace

double psnr(const Image& ref, const Image& test) { return psnr_from_mse(mse(ref, test)); }

double ssim(const Image& ref, const Image& test, const SsimConfig& cfg) {
    require_same_dims(ref, test, "ssim");
    validate(cfg, ref);

    const auto& k = kern::active();
    const int ws = cfg.window_size;
    const int ow = ref.width - ws + 1;
    const int oh = ref.height - ws + 1;
    const std::size_t n = static_cast<std::size_t>(ow) * oh;
    const std::size_t np = ref.pixel_count();

    std::vector<double> prod(np);
    std::vector<double> mu_x(n), mu_y(n), xx(n), yy(n), xy(n);
    k.conv2d_valid(ref.samples.data(), ref.width, ref.height, cfg.window.data(), ws, mu_x.data());
    k.conv2d_valid(test.samples.data(), ref.width, ref.height, cfg.window.data(), ws, mu_y.data());
    k.mul(ref.samples.data(), ref.samples.data(), prod.data(), np);
    k.conv2d_valid(prod.data(), ref.width, ref.height, cfg.window.data(), ws, xx.data());
    k.mul(test.samples.data(), test.samples.data(), prod.data(), np);
    k.conv2d_valid(prod.data(), ref.width, ref.height, cfg.window.data(), ws, yy.data());
    k.mul(ref.samples.data(), test.samples.data(), prod.data(), np);
    k.conv2d_valid(prod.data(), ref.width, ref.height, cfg.window.data(), ws, xy.data());

    const bool two_factor = cfg.alpha == 1.0 && cfg.beta == 1.0 && cfg.gamma == 1.0 && cfg.c3 == cfg.c2 / 2.0;
    if (two_factor) return k.ssim_map_mean(mu_x.data(), mu_y.data(), xx.data(), yy.data(), xy.data(), n, cfg.c1, cfg.c2);

    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double mu_x2 = mu_x[i] * mu_x[i];
        const double mu_y2 = mu_y[i] * mu_y[i];
        const double var_x = std::max(xx[i] - mu_x2, 0.0);
        const double var_y = std::max(yy[i] - mu_y2, 0.0);
        const double cov = xy[i] - mu_x[i] * mu_y[i];
        const double sd_x = std::sqrt(var_x);
        const double sd_y = std::sqrt(var_y);
        const double l = (2.0 * (mu_x[i] * mu_y[i]) + cfg.c1) / (mu_x2 + mu_y2 + cfg.c1);
        const double c = (2.0 * (sd_x * sd_y) + cfg.c2) / (var_x + var_y + cfg.c2);
        const double s = (cov + cfg.c3) / (sd_x * sd_y + cfg.c3);
        acc += std::pow(l, cfg.alpha) * std::pow(c, cfg.beta) * std::pow(s, cfg.gamma);
    }
    return acc / static_cast<double>(n);
}

namespace {

// squared-difference sums over the six neighbor-pair classes, computed as
// whole-row kernel reductions with the block-straddling columns peeled off
struct PairSums {
    double h_b = 0.0, h_bc = 0.0;
    double v_b = 0.0, v_bc = 0.0;
    double r_bc = 0.0, l_bc = 0.0;
};

PairSums pair_square_sums(const Image& img, int b) {
    const auto& k = kern::active();
    const int w = img.width, h = img.height;
    PairSums sums;

    for (int r = 0; r < h; ++r) {
        const double* row = img.row(r);
        const double total = k.sum_sq_diff(row, row + 1, static_cast<std::size_t>(w) - 1);
        double cross = 0.0;
        for (int c = b - 1; c + 1 < w; c += b) {
            const double d = row[c] - row[c + 1];
            cross += d * d;
        }
        sums.h_b += cross;
        sums.h_bc += total - cross;
    }

    for (int r = 0; r + 1 < h; ++r) {
        const double* top = img.row(r);
        const double* bot = img.row(r + 1);
        const double row_pair = k.sum_sq_diff(top, bot, static_cast<std::size_t>(w));
        if (r % b == b - 1)
            sums.v_b += row_pair;
        else
            sums.v_bc += row_pair;

        if (r % b == b - 1) continue;
        // down-right: all (r,c)-(r+1,c+1) minus those crossing a column edge
        double dr = k.sum_sq_diff(top, bot + 1, static_cast<std::size_t>(w) - 1);
        for (int c = b - 1; c + 1 < w; c += b) {
            const double d = top[c] - bot[c + 1];
            dr -= d * d;
        }
        sums.r_bc += dr;
        // down-left: all (r,c)-(r+1,c-1) minus those crossing a column edge
        double dl = k.sum_sq_diff(top + 1, bot, static_cast<std::size_t>(w) - 1);
        for (int c = b; c < w; c += b) {
            const double d = top[c] - bot[c - 1];
            dl -= d * d;
        }
        sums.l_bc += dl;
    }
    return sums;
}

BoundaryDiff diffs_from(const PairSums& sums, const PairCounts& counts, const BlockGeometry& geom, PairMode mode,
                        bool formula_counts) {
    BoundaryDiff out;
    // single-block grids have no boundary pairs; 0/0 is read as no blockiness
    out.d_b = (counts.n_hb + counts.n_vb == 0)
                  ? 0.0
                  : (sums.h_b + sums.v_b) / static_cast<double>(counts.n_hb + counts.n_vb);
    switch (mode) {
        case PairMode::hv:
            out.d_bc = (sums.h_bc + sums.v_bc) / static_cast<double>(counts.n_hbc + counts.n_vbc);
            break;
        case PairMode::diagonal_only: {
            std::int64_t n_r = counts.n_rbc, n_l = counts.n_lbc;
            if (formula_counts) std::tie(n_r, n_l) = formula_diagonal_counts(geom);
            out.d_bc = (sums.r_bc + sums.l_bc) / static_cast<double>(n_r + n_l);
            break;
        }
        case PairMode::combined:
            out.d_bc = (sums.h_bc + sums.v_bc + sums.r_bc + sums.l_bc) /
                       (2.0 * static_cast<double>(counts.n_hbc + counts.n_vbc));
            break;
    }
    return out;
}

BlockGeometry checked_geometry(const Image& test, const BlockGeometry& geom) {
    if (geom.n_h != test.width || geom.n_v != test.height)
        raise(Errc::dimension_mismatch, "geometry " + std::to_string(geom.n_h) + "x" + std::to_string(geom.n_v) +
                                            " does not match image " + std::to_string(test.width) + "x" +
                                            std::to_string(test.height));
    return make_geometry(geom.n_h, geom.n_v, geom.b);
}

BoundaryDiff diffs_for(const Image& test, const BlockGeometry& geom, PairMode mode, bool formula_counts) {
    const PairSums sums = pair_square_sums(test, geom.b);
    return diffs_from(sums, pair_counts(geom), geom, mode, formula_counts);
}

double eta_for(int block_size, const Image& img) {
    return std::log2(static_cast<double>(block_size)) /
           std::log2(static_cast<double>(std::min(img.width, img.height)));
}

}  // namespace

BoundaryDiff boundary_differences(const Image& test, const BlockGeometry& geom, PairMode mode,
                                  bool formula_diagonal_counts) {
    const BlockGeometry checked = checked_geometry(test, geom);
    if (checked.b == checked.n_h && checked.b == checked.n_v)
        raise(Errc::invalid_geometry, "single-block grid has no boundary pairs");
    return diffs_for(test, checked, mode, formula_diagonal_counts);
}

double bef(const Image& test, const BefConfig& cfg) {
    if (cfg.block_sizes.empty()) raise(Errc::invalid_config, "block size list must not be empty");
    double total = 0.0;
    for (int b : cfg.block_sizes) {
        const BlockGeometry geom = make_geometry(test.width, test.height, b);
        const BoundaryDiff d = diffs_for(test, geom, cfg.pair_mode, cfg.formula_diagonal_counts);
        if (d.d_b > d.d_bc) total += eta_for(b, test) * (d.d_b - d.d_bc);
    }
    return total;
}

double psnr_b(const Image& ref, const Image& test, const BefConfig& cfg) {
    return psnr_from_mse(mse(ref, test) + bef(test, cfg));
}

MetricReport score(const Image& ref, const Image& test, const BefConfig& bef_cfg, const SsimConfig& ssim_cfg) {
    require_same_dims(ref, test, "score");
    if (bef_cfg.block_sizes.empty()) raise(Errc::invalid_config, "block size list must not be empty");

    MetricReport rep;
    rep.mse = mse(ref, test);
    rep.psnr = psnr_from_mse(rep.mse);
    rep.ssim = ssim(ref, test, ssim_cfg);

    std::array<double, 3> bef_tot = {0.0, 0.0, 0.0};
    for (int b : bef_cfg.block_sizes) {
        const BlockGeometry geom = checked_geometry(test, make_geometry(test.width, test.height, b));
        const PairSums sums = pair_square_sums(test, b);
        const PairCounts counts = pair_counts(geom);

        BlockSizeDiffs diffs;
        diffs.block_size = b;
        for (PairMode mode : all_pair_modes) {
            const BoundaryDiff d = diffs_from(sums, counts, geom, mode, bef_cfg.formula_diagonal_counts);
            diffs.d_b = d.d_b;
            diffs.d_bc[static_cast<int>(mode)] = d.d_bc;
            if (d.d_b > d.d_bc) bef_tot[static_cast<int>(mode)] += eta_for(b, test) * (d.d_b - d.d_bc);
        }
        rep.diffs.push_back(diffs);
    }
    for (PairMode mode : all_pair_modes) {
        const int m = static_cast<int>(mode);
        rep.modes[m].bef_tot = bef_tot[m];
        rep.modes[m].mse_b = rep.mse + bef_tot[m];
        rep.modes[m].psnr_b = psnr_from_mse(rep.modes[m].mse_b);
    }
    return rep;
}

}  // namespace blockiq
