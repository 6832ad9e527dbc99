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

// Acceptance gate for the toolkit. Each numbered criterion prints exactly one
// [PASS]/[FAIL] line; the process exits non-zero if any criterion fails. All
// tolerances are pinned here, next to the checks that use them.
//
// argv[1] (optional) - path to the CLI binary, needed by criterion 9
// argv[2] (optional) - directory for acceptance_audit.csv (default ".")

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../support/approx.hpp"
#include "../support/oracles.hpp"
#include "blockiq/codec.hpp"
#include "blockiq/deblock.hpp"
#include "blockiq/distortion.hpp"
#include "blockiq/geometry.hpp"
#include "blockiq/metrics.hpp"
#include "blockiq/sweep.hpp"
#include "blockiq/synth.hpp"

namespace fs = std::filesystem;
using blockiq::Image;
using blockiq::PairMode;
using Clock = std::chrono::steady_clock;
using testsupport::near;

namespace {

double seconds(Clock::time_point t0, Clock::time_point t1) {
    return std::chrono::duration<double>(t1 - t0).count();
}

bool report(int id, bool ok, const std::string& what) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << id << ": " << what << "\n";
    return ok;
}

std::string fmt(double v, const char* spec = "%.3g") {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

// ---------------------------------------------------------------- criterion 1

// The 8x8 grid with B=4 from the worked example. Pixels are labeled
// column-major there (y_1..y_64, 1-based); a label k sits at row (k-1) % 8,
// column (k-1) / 8, i.e. at row-major linear index 8*((k-1)%8) + (k-1)/8.
std::int32_t label_to_linear(int k) { return 8 * ((k - 1) % 8) + (k - 1) / 8; }

bool criterion_fig2() {
    const auto t0 = Clock::now();

    // H_B = {(y25,y33), ..., (y32,y40)}; V_B = {(y4,y5), (y12,y13), ..., (y60,y61)}
    std::vector<blockiq::PixelPair> want_hb, want_vb;
    for (int i = 0; i < 8; ++i) want_hb.emplace_back(label_to_linear(25 + i), label_to_linear(33 + i));
    for (int j = 0; j < 8; ++j) want_vb.emplace_back(label_to_linear(4 + 8 * j), label_to_linear(5 + 8 * j));
    std::sort(want_hb.begin(), want_hb.end());
    std::sort(want_vb.begin(), want_vb.end());

    const blockiq::PixelPairSets sets = blockiq::build_pair_sets(blockiq::make_geometry(8, 8, 4));

    std::vector<blockiq::PixelPair> got_hb = sets.h_b, got_vb = sets.v_b;
    std::sort(got_hb.begin(), got_hb.end());
    std::sort(got_vb.begin(), got_vb.end());

    bool ok = sets.n_hb == 8 && sets.n_hbc == 48 && sets.n_vb == 8 && sets.n_vbc == 48;
    ok = ok && got_hb == want_hb && got_vb == want_vb;

    // spot pairs from the non-boundary listings: (y1,y9), (y56,y64) horizontal,
    // (y1,y10) right-diagonal, (y9,y2) left-diagonal
    const auto has = [](const std::vector<blockiq::PixelPair>& v, blockiq::PixelPair p) {
        return std::find(v.begin(), v.end(), p) != v.end();
    };
    ok = ok && has(sets.h_bc, {label_to_linear(1), label_to_linear(9)});
    ok = ok && has(sets.h_bc, {label_to_linear(56), label_to_linear(64)});
    ok = ok && has(sets.r_bc, {label_to_linear(1), label_to_linear(10)});
    ok = ok && has(sets.l_bc, {label_to_linear(9), label_to_linear(2)});

    const double us = seconds(t0, Clock::now()) * 1e6;
    ok = ok && us < 1000.0;
    return report(1, ok,
                  "worked example pair sets on the 8x8/B=4 grid: counts 8/48/8/48, exact "
                  "H_B and V_B membership (" +
                      fmt(us, "%.0f") + " us, limit 1000)");
}

// ---------------------------------------------------------------- criterion 2

bool criterion_oracle_equivalence() {
    const auto t0 = Clock::now();
    std::mt19937 rng(101);
    std::uniform_int_distribution<int> dim_pick(0, 2);
    const int dims[3] = {16, 24, 32};
    const double deltas[3] = {20.0, 50.0, 100.0};
    const double tol = 1e-9;

    double worst = 0.0;
    bool ok = true;
    for (int trial = 0; trial < 50 && ok; ++trial) {
        const int w = dims[dim_pick(rng)], h = dims[dim_pick(rng)];
        const Image ref = oracle::random_image(rng, w, h);
        const Image test = (trial % 2 == 0) ? blockiq::encode_decode(ref, blockiq::CodecConfig{8, deltas[trial % 3]})
                                            : oracle::random_image(rng, w, h);

        const blockiq::BlockGeometry geom = blockiq::make_geometry(w, h, 8);
        const oracle::BoundaryOracle want = oracle::boundary_brute(test, 8);

        const auto check = [&](double got, double expect) {
            worst = std::max(worst, std::abs(got - expect));
            if (!near(got, expect, tol)) ok = false;
        };

        check(blockiq::boundary_differences(test, geom, PairMode::hv).d_b, want.d_b);
        check(blockiq::boundary_differences(test, geom, PairMode::hv).d_bc, want.d_bc_hv);
        check(blockiq::boundary_differences(test, geom, PairMode::diagonal_only).d_bc, want.d_bc_diagonal);
        check(blockiq::boundary_differences(test, geom, PairMode::diagonal_only, true).d_bc,
              want.d_bc_diagonal_formula);
        check(blockiq::boundary_differences(test, geom, PairMode::combined).d_bc, want.d_bc_combined);

        check(blockiq::mse(ref, test), oracle::mse_loop(ref, test));
        check(blockiq::psnr(ref, test), oracle::psnr_loop(ref, test));

        for (PairMode mode : blockiq::all_pair_modes) {
            for (bool formula : {false, true}) {
                if (formula && mode != PairMode::diagonal_only) continue;
                blockiq::BefConfig cfg;
                cfg.pair_mode = mode;
                cfg.formula_diagonal_counts = formula;
                check(blockiq::bef(test, cfg), oracle::bef_brute(test, 8, mode, formula));
                check(blockiq::psnr_b(ref, test, cfg), oracle::psnr_b_brute(ref, test, 8, mode, formula));
            }
        }
    }

    const double secs = seconds(t0, Clock::now());
    ok = ok && secs < 10.0;
    return report(2, ok,
                  "D_B, D_B^C (hv/diagonal/combined), BEF, MSE, PSNR, PSNR-B vs brute-force "
                  "oracle on 50 random images within 1e-9 (worst " +
                      fmt(worst) + ", " + fmt(secs, "%.2f") + " s, limit 10)");
}

// ---------------------------------------------------------------- criterion 3

bool criterion_distortion_identity() {
    std::mt19937 rng(102);
    const double tol = 1e-9;
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const Image ref = oracle::random_image(rng, 32, 32);
        Image decoded, deblocked;
        if (trial < 10) {
            decoded = oracle::random_image(rng, 32, 32);
            deblocked = oracle::random_image(rng, 32, 32);
        } else {
            const blockiq::CodecConfig codec{8, 20.0 * (trial - 9)};
            const blockiq::CoefficientGrid grid = blockiq::encode(ref, codec);
            decoded = blockiq::decode(grid);
            if (trial % 2 == 0) {
                deblocked = blockiq::lowpass(decoded, blockiq::box_lowpass(3));
            } else {
                blockiq::PocsConfig cfg;
                cfg.iterations = 3;
                cfg.codec = codec;
                deblocked = blockiq::pocs(decoded, cfg, grid);
            }
        }
        const blockiq::DistortionChangeReport rep = blockiq::analyze(ref, decoded, deblocked);
        const double expect = blockiq::mse(ref, decoded) - blockiq::mse(ref, deblocked);
        worst = std::max(worst, std::abs(rep.mdc - expect));
        if (!near(rep.mdc, expect, tol)) {
            return report(3, false, "mdc != mse(ref,decoded) - mse(ref,deblocked) on trial " + std::to_string(trial) +
                                        " (|diff| " + fmt(std::abs(rep.mdc - expect)) + " > 1e-9)");
        }
    }
    return report(3, true, "mdc = mse(ref,decoded) - mse(ref,deblocked) on 20 triples within 1e-9 (worst " +
                               fmt(worst) + ")");
}

// ---------------------------------------------------------------- criterion 4

bool criterion_dct() {
    std::mt19937 rng(103);
    std::uniform_real_distribution<double> dist(0.0, 255.0);
    double worst_recon = 0.0, worst_energy = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> block(64);
        for (double& v : block) v = dist(rng);

        const blockiq::CoefficientBlock coeff = blockiq::dct2(block, 8);
        const std::vector<double> back = blockiq::idct2(coeff);

        double pixel_energy = 0.0, coeff_energy = 0.0;
        for (int i = 0; i < 64; ++i) {
            worst_recon = std::max(worst_recon, std::abs(back[i] - block[i]));
            pixel_energy += block[i] * block[i];
            coeff_energy += coeff.coeff[i] * coeff.coeff[i];
        }
        worst_energy = std::max(worst_energy, std::abs(coeff_energy - pixel_energy) / pixel_energy);
    }
    const bool ok = worst_recon < 1e-9 && worst_energy <= 1e-6;
    return report(4, ok,
                  "DCT round-trip and Parseval over 100 random 8x8 blocks (max recon err " + fmt(worst_recon) +
                      " < 1e-9, max energy err " + fmt(worst_energy) + " rel <= 1e-6)");
}

// ------------------------------------------------------- criteria 5, 6 and 8

struct SweepBundle {
    blockiq::SweepResult result;
    std::vector<std::pair<std::string, Image>> corpus;
    double secs = 0.0;
};

SweepBundle run_corpus_sweep() {
    SweepBundle bundle;
    bundle.corpus = blockiq::synthetic_corpus(256);
    const auto t0 = Clock::now();
    bundle.result = blockiq::run_sweep(blockiq::SweepSpec{}, bundle.corpus);
    bundle.secs = seconds(t0, Clock::now());
    return bundle;
}

bool criterion_monotonic(const SweepBundle& bundle) {
    // BEF is read in its original horizontal+vertical form here.
    int passing = 0;
    std::string failures;
    for (const auto& [name, img] : bundle.corpus) {
        std::vector<const blockiq::SweepRow*> rows;
        for (const blockiq::SweepRow& row : bundle.result.rows)
            if (row.image == name && row.method == blockiq::Method::none) rows.push_back(&row);
        bool mono = rows.size() == 6;
        for (std::size_t i = 1; i < rows.size() && mono; ++i) {
            if (!(rows[i]->psnr < rows[i - 1]->psnr)) mono = false;
            if (!(rows[i]->ssim < rows[i - 1]->ssim)) mono = false;
            if (rows[i]->bef[0] < rows[i - 1]->bef[0]) mono = false;
        }
        if (mono) ++passing;
        else failures += (failures.empty() ? "" : ", ") + name;
    }
    const bool ok = passing >= 4 && bundle.result.skipped.empty() && bundle.secs < 120.0;
    std::string what = "method=none PSNR/SSIM strictly decreasing and BEF non-decreasing over deltas "
                       "{10..100} on " +
                       std::to_string(passing) + "/5 scenes at 256x256 (need 4";
    if (!failures.empty()) what += "; non-monotone: " + failures;
    what += ") (sweep " + fmt(bundle.secs, "%.1f") + " s, limit 120)";
    return report(5, ok, what);
}

bool criterion_gate_and_ordering(const SweepBundle& bundle) {
    bool ok = bundle.result.skipped.empty();
    std::string why;

    for (const blockiq::SweepRow& row : bundle.result.rows) {
        for (int mode = 0; mode < 3 && ok; ++mode) {
            if (row.bef[mode] < 0.0) {
                ok = false;
                why = "negative BEF on " + row.image;
            }
            if (row.psnr_b[mode] > row.psnr) {
                ok = false;
                why = "psnr_b > psnr on " + row.image;
            }
        }
        if (!ok) break;
    }

    // POCS quantization-interval membership, tolerance 1e-6
    double worst = 0.0;
    for (const auto& [name, img] : bundle.corpus) {
        for (double delta : {10.0, 50.0, 100.0}) {
            const blockiq::CodecConfig codec{8, delta};
            const blockiq::CoefficientGrid grid = blockiq::encode(img, codec);
            blockiq::PocsConfig cfg;
            cfg.codec = codec;
            const Image deblocked = blockiq::pocs(blockiq::decode(grid), cfg, grid);

            std::vector<double> block(64);
            for (int by = 0; by < grid.blocks_y; ++by)
                for (int bx = 0; bx < grid.blocks_x; ++bx) {
                    for (int r = 0; r < 8; ++r)
                        for (int c = 0; c < 8; ++c)
                            block[r * 8 + c] = deblocked.at(by * 8 + r, bx * 8 + c);
                    const blockiq::CoefficientBlock coeff = blockiq::dct2(block, 8);
                    const blockiq::CoefficientBlock& q =
                        grid.blocks[static_cast<std::size_t>(by) * grid.blocks_x + bx];
                    for (int i = 0; i < 64; ++i) {
                        const double excess =
                            std::max(q.coeff[i] - delta / 2.0 - coeff.coeff[i], coeff.coeff[i] - q.coeff[i] - delta / 2.0);
                        worst = std::max(worst, excess);
                    }
                }
        }
    }
    if (worst > 1e-6) {
        ok = false;
        why = "POCS constraint violated by " + fmt(worst);
    }

    return report(6, ok,
                  ok ? "BEF >= 0 and psnr_b <= psnr on all " + std::to_string(bundle.result.rows.size()) +
                           " sweep rows, every pair mode; POCS output inside every quantization interval "
                           "within 1e-6 (worst excess " +
                           fmt(worst) + ")"
                     : why);
}

bool criterion_pocs_direction(const SweepBundle& bundle) {
    int passing = 0;
    std::string failures;
    for (const auto& [name, img] : bundle.corpus) {
        const blockiq::SweepRow* none = nullptr;
        const blockiq::SweepRow* pocs = nullptr;
        for (const blockiq::SweepRow& row : bundle.result.rows) {
            if (row.image != name || row.delta != 50.0) continue;
            if (row.method == blockiq::Method::none) none = &row;
            if (row.method == blockiq::Method::pocs) pocs = &row;
        }
        const bool better =
            none && pocs && pocs->psnr_b[0] > none->psnr_b[0] && pocs->psnr_b[1] > none->psnr_b[1];
        if (better) ++passing;
        else failures += (failures.empty() ? "" : ", ") + name;
    }
    const bool ok = passing >= 4;
    std::string what = "POCS beats method=none on psnr_b (hv and diagonal) at delta=50 on " +
                       std::to_string(passing) + "/5 scenes (need 4";
    if (!failures.empty()) what += "; not improved: " + failures;
    what += "); per-row values in the audit CSV";
    return report(8, ok, what);
}

// ---------------------------------------------------------------- criterion 7

bool criterion_ssim_anchors() {
    std::mt19937 rng(104);
    const blockiq::SsimConfig cfg = blockiq::default_ssim();
    bool self_ok = true;
    double worst_sym = 0.0, worst_oracle = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const Image a = (trial % 2 == 0) ? oracle::random_image(rng, 32, 32)
                                         : oracle::random_real_image(rng, 32, 32, 0.0, 255.0);
        const Image b = blockiq::encode_decode(oracle::random_image(rng, 32, 32), blockiq::CodecConfig{8, 40.0});

        if (blockiq::ssim(a, a, cfg) != 1.0) self_ok = false;
        worst_sym = std::max(worst_sym, std::abs(blockiq::ssim(a, b, cfg) - blockiq::ssim(b, a, cfg)));
        worst_oracle = std::max(worst_oracle, std::abs(blockiq::ssim(a, b, cfg) - oracle::ssim_sliding(a, b, cfg)));
    }
    const bool ok = self_ok && worst_sym <= 1e-12 && worst_oracle <= 1e-9;
    return report(7, ok,
                  std::string("SSIM anchors on 10 random 32x32 pairs: ssim(x,x) ") +
                      (self_ok ? "= 1 exactly" : "!= 1") + ", symmetry gap " + fmt(worst_sym) +
                      " <= 1e-12, oracle gap " + fmt(worst_oracle) + " <= 1e-9");
}

// ---------------------------------------------------------------- criterion 9

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool criterion_cli_determinism(const std::string& cli) {
    if (cli.empty()) return report(9, false, "CLI binary path not provided (argv[1])");

    const fs::path root = fs::temp_directory_path() / ("blockiq_accept_" + std::to_string(Clock::now().time_since_epoch().count()));
    const fs::path corpus = root / "corpus";
    fs::create_directories(corpus);

    const auto run = [&](const std::string& args) {
        const std::string cmd = "\"" + cli + "\" " + args + " > /dev/null";
        return std::system(cmd.c_str()) == 0;
    };

    bool ok = run("gen-corpus -o \"" + corpus.string() + "\" --size 64");
    std::string inputs;
    for (const std::string& name : blockiq::scene_names()) inputs += " \"" + (corpus / (name + ".pgm")).string() + "\"";

    for (const char* out : {"out1", "out2"})
        ok = ok && run("sweep -o \"" + (root / out).string() + "\" -i" + inputs);

    std::size_t files = 0;
    if (ok) {
        std::vector<std::string> names;
        for (const auto& entry : fs::directory_iterator(root / "out1")) names.push_back(entry.path().filename().string());
        std::sort(names.begin(), names.end());
        files = names.size();
        ok = files == 1 + 5 * 8;  // sweep.csv + one SVG per scene and metric
        for (const std::string& name : names) {
            if (!fs::exists(root / "out2" / name)) ok = false;
            else if (read_file(root / "out1" / name) != read_file(root / "out2" / name)) ok = false;
        }
    }

    fs::remove_all(root);
    return report(9, ok,
                  "two identical CLI sweep runs produce byte-identical outputs (" + std::to_string(files) +
                      " files compared)");
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    const fs::path audit_dir = argc > 2 ? argv[2] : ".";

    bool all_ok = true;
    all_ok &= criterion_fig2();
    all_ok &= criterion_oracle_equivalence();
    all_ok &= criterion_distortion_identity();
    all_ok &= criterion_dct();

    const SweepBundle bundle = run_corpus_sweep();
    all_ok &= criterion_monotonic(bundle);
    all_ok &= criterion_gate_and_ordering(bundle);
    all_ok &= criterion_ssim_anchors();
    all_ok &= criterion_pocs_direction(bundle);
    all_ok &= criterion_cli_determinism(cli);

    const fs::path audit = audit_dir / "acceptance_audit.csv";
    std::ofstream out(audit, std::ios::binary);
    out << blockiq::emit_csv(bundle.result.rows);
    out.close();
    std::cout << (all_ok ? "all criteria passed" : "one or more criteria FAILED") << "; audit rows in "
              << audit.string() << "\n";
    return all_ok ? 0 : 1;
}
