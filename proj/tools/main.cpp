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

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "blockiq/distortion.hpp"
#include "blockiq/kernels.hpp"
#include "blockiq/metrics.hpp"
#include "blockiq/sweep.hpp"
#include "blockiq/synth.hpp"
#include "json.hpp"

namespace {

using blockiq::Errc;
using blockiq::raise;
using json = nlohmann::ordered_json;

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) raise(Errc::io_failure, "cannot open " + path.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) raise(Errc::io_failure, "cannot write " + path.string());
}

json json_number(double v) {
    if (std::isfinite(v)) return v;
    return v > 0 ? "inf" : "-inf";  // JSON has no infinities
}

struct CodeArgs {
    std::string input, output;
    int block_size = 8;
    double delta = 10.0;
};

int run_code(const CodeArgs& args) {
    blockiq::CodecConfig codec{args.block_size, args.delta};
    const blockiq::Image img = blockiq::load_input(args.input);
    blockiq::write_pgm(args.output, blockiq::encode_decode(img, codec));
    return 0;
}

struct DeblockArgs {
    std::string input, output;
    std::string method = "lowpass3";
    int block_size = 8;
    double delta = 10.0;
    int iterations = 5;
};

int run_deblock(const DeblockArgs& args) {
    const blockiq::Image img = blockiq::load_input(args.input);
    const blockiq::Method method = blockiq::method_from_string(args.method);
    blockiq::Image out = img;
    switch (method) {
        case blockiq::Method::none: break;
        case blockiq::Method::lowpass3: out = blockiq::lowpass(img, blockiq::box_lowpass(3)); break;
        case blockiq::Method::lowpass7: out = blockiq::lowpass(img, blockiq::box_lowpass(7)); break;
        case blockiq::Method::pocs: {
            // the constraint set is rebuilt by re-coding the input with the
            // same codec parameters it was coded with
            blockiq::CodecConfig codec{args.block_size, args.delta};
            const blockiq::CoefficientGrid grid = blockiq::encode(img, codec);
            blockiq::PocsConfig cfg;
            cfg.iterations = args.iterations;
            cfg.codec = codec;
            out = blockiq::pocs(img, cfg, grid);
            break;
        }
    }
    blockiq::write_pgm(args.output, out);
    return 0;
}

struct ScoreArgs {
    std::string ref;
    std::vector<std::string> tests;
    std::vector<int> block_sizes = {8};
    bool paper_counts = false;
};

int run_score(const ScoreArgs& args) {
    const blockiq::Image ref = blockiq::load_input(args.ref);
    blockiq::BefConfig bef_cfg;
    bef_cfg.block_sizes = args.block_sizes;
    bef_cfg.formula_diagonal_counts = args.paper_counts;
    const blockiq::SsimConfig ssim_cfg = blockiq::default_ssim();

    for (const std::string& test_path : args.tests) {
        const blockiq::Image test = blockiq::load_input(test_path);
        const blockiq::MetricReport rep = blockiq::score(ref, test, bef_cfg, ssim_cfg);

        json line;
        line["ref"] = args.ref;
        line["test"] = test_path;
        line["mse"] = json_number(rep.mse);
        line["psnr"] = json_number(rep.psnr);
        line["ssim"] = json_number(rep.ssim);
        for (blockiq::PairMode mode : blockiq::all_pair_modes) {
            const auto& scores = rep.modes[static_cast<int>(mode)];
            json entry;
            entry["bef_tot"] = json_number(scores.bef_tot);
            entry["mse_b"] = json_number(scores.mse_b);
            entry["psnr_b"] = json_number(scores.psnr_b);
            line[std::string(to_string(mode))] = entry;
        }
        json diffs = json::array();
        for (const blockiq::BlockSizeDiffs& d : rep.diffs) {
            json entry;
            entry["block_size"] = d.block_size;
            entry["d_b"] = json_number(d.d_b);
            entry["d_bc_hv"] = json_number(d.d_bc[0]);
            entry["d_bc_diagonal"] = json_number(d.d_bc[1]);
            entry["d_bc_combined"] = json_number(d.d_bc[2]);
            diffs.push_back(entry);
        }
        line["diffs"] = diffs;
        std::cout << line.dump() << "\n";
    }
    return 0;
}

struct SweepArgs {
    std::vector<std::string> inputs;
    std::string out_dir;
    std::vector<double> deltas = {10, 20, 30, 40, 50, 100};
    std::vector<std::string> methods = {"none", "lowpass3", "lowpass7", "pocs"};
    int block_size = 8;
    std::vector<int> bef_block_sizes = {8};
    bool paper_counts = false;
    int iterations = 5;
    std::string config_path;
};

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    return parts;
}

void apply_config_file(SweepArgs& args) {
    std::ifstream in(args.config_path);
    if (!in) raise(Errc::io_failure, "cannot open config " + args.config_path);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            raise(Errc::invalid_config, "config line " + std::to_string(line_no) + ": expected key=value");
        const std::string key = line.substr(0, eq);
        const std::string value = line.substr(eq + 1);
        try {
            if (key == "inputs") {
                args.inputs = split_list(value);
            } else if (key == "out_dir") {
                args.out_dir = value;
            } else if (key == "deltas") {
                args.deltas.clear();
                for (const std::string& d : split_list(value)) args.deltas.push_back(std::stod(d));
            } else if (key == "methods") {
                args.methods = split_list(value);
            } else if (key == "block_size") {
                args.block_size = std::stoi(value);
            } else if (key == "bef_block_sizes") {
                args.bef_block_sizes.clear();
                for (const std::string& b : split_list(value)) args.bef_block_sizes.push_back(std::stoi(b));
            } else if (key == "paper_counts") {
                args.paper_counts = (value == "true" || value == "1");
            } else if (key == "iterations") {
                args.iterations = std::stoi(value);
            } else {
                raise(Errc::invalid_config, "config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
            }
        } catch (const std::invalid_argument&) {
            raise(Errc::invalid_config, "config line " + std::to_string(line_no) + ": bad value for '" + key + "'");
        } catch (const std::out_of_range&) {
            raise(Errc::invalid_config, "config line " + std::to_string(line_no) + ": bad value for '" + key + "'");
        }
    }
}

int run_sweep_cmd(SweepArgs args) {
    if (!args.config_path.empty()) apply_config_file(args);
    if (args.inputs.empty()) raise(Errc::invalid_config, "no input images given");
    if (args.out_dir.empty()) raise(Errc::invalid_config, "no output directory given");

    blockiq::SweepSpec spec;
    spec.deltas = args.deltas;
    spec.methods.clear();
    for (const std::string& m : args.methods) spec.methods.push_back(blockiq::method_from_string(m));
    spec.codec.block_size = args.block_size;
    spec.bef.block_sizes = args.bef_block_sizes;
    spec.bef.formula_diagonal_counts = args.paper_counts;
    spec.pocs_iterations = args.iterations;
    for (const std::string& input : args.inputs) spec.inputs.emplace_back(input);
    spec.out_dir = args.out_dir;

    const blockiq::SweepResult result = blockiq::run_sweep(spec);
    for (const std::string& skip : result.skipped) std::cerr << "skipped " << skip << "\n";
    if (result.rows.empty()) {
        std::cerr << "no rows produced\n";
        return 2;
    }

    std::filesystem::create_directories(spec.out_dir);
    write_text_file(spec.out_dir / "sweep.csv", blockiq::emit_csv(result.rows));
    for (const auto& [name, svg] : blockiq::emit_plots(result.rows)) write_text_file(spec.out_dir / name, svg);

    std::cout << result.rows.size() << " rows -> " << (spec.out_dir / "sweep.csv").string() << "\n";
    return result.skipped.empty() ? 0 : 1;
}

struct GenCorpusArgs {
    std::string out_dir;
    int size = 256;
};

int run_gen_corpus(const GenCorpusArgs& args) {
    std::filesystem::create_directories(args.out_dir);
    for (const auto& [name, img] : blockiq::synthetic_corpus(args.size)) {
        const std::filesystem::path path = std::filesystem::path(args.out_dir) / (name + ".pgm");
        blockiq::write_pgm(path, img);
        std::cout << path.string() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"block-DCT compression simulator with PSNR / SSIM / PSNR-B quality metrics"};
    app.require_subcommand(1);

    std::string backend = "auto";
    app.add_option("--backend", backend, "kernel backend: auto, scalar, avx2, neon")
        ->check(CLI::IsMember({"auto", "scalar", "avx2", "neon"}));

    CodeArgs code_args;
    CLI::App* code = app.add_subcommand("code", "simulate block-DCT coding of an image");
    code->add_option("-i,--input", code_args.input, "input image (PGM, or PPM reduced to luma)")
        ->required()
        ->check(CLI::ExistingFile);
    code->add_option("-o,--output", code_args.output, "output PGM")->required();
    code->add_option("--block-size", code_args.block_size, "transform block size");
    code->add_option("--delta", code_args.delta, "quantization step");

    DeblockArgs deblock_args;
    CLI::App* deblock = app.add_subcommand("deblock", "apply a deblocking filter to a coded image");
    deblock->add_option("-i,--input", deblock_args.input, "coded image")->required()->check(CLI::ExistingFile);
    deblock->add_option("-o,--output", deblock_args.output, "output PGM")->required();
    deblock->add_option("--method", deblock_args.method, "none, lowpass3, lowpass7, pocs");
    deblock->add_option("--block-size", deblock_args.block_size, "codec block size (pocs)");
    deblock->add_option("--delta", deblock_args.delta, "codec quantization step (pocs)");
    deblock->add_option("--iterations", deblock_args.iterations, "pocs iterations");

    ScoreArgs score_args;
    CLI::App* score = app.add_subcommand("score", "score test images against a reference (JSON lines)");
    score->add_option("-r,--ref", score_args.ref, "reference image")->required()->check(CLI::ExistingFile);
    score->add_option("-t,--test", score_args.tests, "test image(s)")->required()->check(CLI::ExistingFile);
    score->add_option("--block-sizes", score_args.block_sizes, "BEF block sizes");
    score->add_flag("--paper-counts", score_args.paper_counts,
                    "normalize diagonal sums by the closed-form counts instead of enumerated ones");

    SweepArgs sweep_args;
    CLI::App* sweep = app.add_subcommand("sweep", "run the delta x method sweep, emit CSV and SVG plots");
    sweep->add_option("-i,--inputs", sweep_args.inputs, "input images");
    sweep->add_option("-o,--out-dir", sweep_args.out_dir, "output directory");
    sweep->add_option("--deltas", sweep_args.deltas, "quantization steps, ascending");
    sweep->add_option("--methods", sweep_args.methods, "deblocking methods");
    sweep->add_option("--block-size", sweep_args.block_size, "codec block size");
    sweep->add_option("--bef-block-sizes", sweep_args.bef_block_sizes, "BEF block sizes");
    sweep->add_flag("--paper-counts", sweep_args.paper_counts,
                    "normalize diagonal sums by the closed-form counts instead of enumerated ones");
    sweep->add_option("--iterations", sweep_args.iterations, "pocs iterations");
    sweep->add_option("--config", sweep_args.config_path, "key=value config file; overrides flags")
        ->check(CLI::ExistingFile);

    GenCorpusArgs gen_args;
    CLI::App* gen = app.add_subcommand("gen-corpus", "write the synthetic test corpus");
    gen->add_option("-o,--out-dir", gen_args.out_dir, "output directory")->required();
    gen->add_option("--size", gen_args.size, "image side length");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (!blockiq::kern::set_active(backend)) {
        std::cerr << "backend '" << backend << "' is not available on this machine (have:";
        for (std::string_view name : blockiq::kern::available()) std::cerr << " " << name;
        std::cerr << ")\n";
        return 2;
    }

    try {
        if (app.got_subcommand(code)) return run_code(code_args);
        if (app.got_subcommand(deblock)) return run_deblock(deblock_args);
        if (app.got_subcommand(score)) return run_score(score_args);
        if (app.got_subcommand(sweep)) return run_sweep_cmd(sweep_args);
        if (app.got_subcommand(gen)) return run_gen_corpus(gen_args);
    } catch (const blockiq::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
