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

#include "blockiq/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "blockiq/distortion.hpp"
#include "blockiq/plot.hpp"

namespace blockiq {

std::string_view to_string(Method m) {
    switch (m) {
        case Method::none: return "none";
        case Method::lowpass3: return "lowpass3";
        case Method::lowpass7: return "lowpass7";
        case Method::pocs: return "pocs";
    }
    return "?";
}

Method method_from_string(std::string_view name) {
    if (name == "none") return Method::none;
    if (name == "lowpass3") return Method::lowpass3;
    if (name == "lowpass7") return Method::lowpass7;
    if (name == "pocs") return Method::pocs;
    raise(Errc::invalid_config, "unknown method '" + std::string(name) + "' (none, lowpass3, lowpass7, pocs)");
}

void validate(const SweepSpec& spec) {
    if (spec.deltas.empty()) raise(Errc::invalid_config, "delta list must not be empty");
    for (std::size_t i = 0; i < spec.deltas.size(); ++i) {
        if (!(spec.deltas[i] > 0.0) || !std::isfinite(spec.deltas[i]))
            raise(Errc::invalid_config, "deltas must be positive finite numbers");
        if (i > 0 && spec.deltas[i] <= spec.deltas[i - 1])
            raise(Errc::invalid_config, "deltas must be strictly increasing");
    }
    if (spec.methods.empty()) raise(Errc::invalid_config, "method list must not be empty");
    validate(spec.codec);
    if (spec.bef.block_sizes.empty()) raise(Errc::invalid_config, "BEF block size list must not be empty");
    if (spec.pocs_iterations < 0) raise(Errc::invalid_config, "POCS iteration count must be non-negative");
}

namespace {

struct Cursor {
    const std::uint8_t* p;
    const std::uint8_t* end;
};

bool is_pnm_ws(std::uint8_t c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

void skip_ws_and_comments(Cursor& cur) {
    for (;;) {
        while (cur.p < cur.end && is_pnm_ws(*cur.p)) ++cur.p;
        if (cur.p < cur.end && *cur.p == '#') {
            while (cur.p < cur.end && *cur.p != '\n') ++cur.p;
            continue;
        }
        return;
    }
}

long parse_header_int(Cursor& cur, const char* what) {
    skip_ws_and_comments(cur);
    if (cur.p >= cur.end || *cur.p < '0' || *cur.p > '9')
        raise(Errc::malformed_header, std::string("expected ") + what);
    long value = 0;
    while (cur.p < cur.end && *cur.p >= '0' && *cur.p <= '9') {
        value = value * 10 + (*cur.p - '0');
        if (value > 1000000000L) raise(Errc::malformed_header, std::string(what) + " out of range");
        ++cur.p;
    }
    return value;
}

Image load_ppm_luma(std::span<const std::uint8_t> bytes) {
    Cursor cur{bytes.data() + 2, bytes.data() + bytes.size()};
    const long width = parse_header_int(cur, "width");
    const long height = parse_header_int(cur, "height");
    const long maxval = parse_header_int(cur, "maxval");
    if (width <= 0 || height <= 0) raise(Errc::malformed_header, "non-positive image dimensions");
    if (maxval != 255) raise(Errc::unsupported_depth, "maxval " + std::to_string(maxval) + " (only 255)");
    if (cur.p >= cur.end || !is_pnm_ws(*cur.p)) raise(Errc::malformed_header, "missing whitespace before pixel data");
    ++cur.p;

    const std::size_t pixels = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    const std::size_t need = pixels * 3;
    const std::size_t have = static_cast<std::size_t>(cur.end - cur.p);
    if (have < need)
        raise(Errc::truncated_payload, "expected " + std::to_string(need) + " bytes, found " + std::to_string(have));
    if (have > need) raise(Errc::trailing_bytes, std::to_string(have - need) + " bytes after pixel data");

    Image img = make_image(static_cast<int>(width), static_cast<int>(height));
    for (std::size_t i = 0; i < pixels; ++i) {
        const double r = cur.p[3 * i], g = cur.p[3 * i + 1], b = cur.p[3 * i + 2];
        img.samples[i] = std::round(0.299 * r + 0.587 * g + 0.114 * b);
    }
    return img;
}

}  // namespace

Image load_input(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(Errc::io_failure, "cannot open " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) raise(Errc::io_failure, "cannot read " + path.string());
    if (bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] == '6') return load_ppm_luma(bytes);
    return load_pgm(bytes);
}

namespace {

Image apply_method(Method m, const Image& decoded, const CoefficientGrid& grid, const CodecConfig& codec,
                   int pocs_iterations) {
    switch (m) {
        case Method::none: return decoded;
        case Method::lowpass3: return lowpass(decoded, box_lowpass(3));
        case Method::lowpass7: return lowpass(decoded, box_lowpass(7));
        case Method::pocs: {
            PocsConfig cfg;
            cfg.iterations = pocs_iterations;
            cfg.smoothing = box_lowpass(3);
            cfg.codec = codec;
            return pocs(decoded, cfg, grid);
        }
    }
    raise(Errc::invalid_config, "unknown method");
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec, const std::vector<std::pair<std::string, Image>>& images) {
    validate(spec);
    SweepResult result;

    for (const auto& [name, ref] : images) {
        try {
            std::vector<SweepRow> image_rows;
            for (double delta : spec.deltas) {
                CodecConfig codec = spec.codec;
                codec.delta = delta;
                const CoefficientGrid grid = encode(ref, codec);
                const Image decoded = decode(grid);

                for (Method m : spec.methods) {
                    const Image deblocked = apply_method(m, decoded, grid, codec, spec.pocs_iterations);
                    const MetricReport rep = score(ref, deblocked, spec.bef, spec.ssim);
                    const DistortionChangeReport dist = analyze(ref, decoded, deblocked);

                    SweepRow row;
                    row.image = name;
                    row.delta = delta;
                    row.method = m;
                    row.psnr = rep.psnr;
                    row.ssim = rep.ssim;
                    for (int mode = 0; mode < 3; ++mode) {
                        row.psnr_b[mode] = rep.modes[mode].psnr_b;
                        row.bef[mode] = rep.modes[mode].bef_tot;
                        row.d_bc[mode] = rep.diffs.front().d_bc[mode];
                    }
                    row.d_b = rep.diffs.front().d_b;
                    row.mdd = dist.mdd;
                    row.mdi = dist.mdi;
                    row.mdc = dist.mdc;
                    image_rows.push_back(std::move(row));
                }
            }
            result.rows.insert(result.rows.end(), image_rows.begin(), image_rows.end());
        } catch (const Error& e) {
            result.skipped.push_back(name + ": " + e.what());
        }
    }
    return result;
}

SweepResult run_sweep(const SweepSpec& spec) {
    validate(spec);
    std::vector<std::pair<std::string, Image>> images;
    SweepResult failed;
    for (const std::filesystem::path& path : spec.inputs) {
        try {
            images.emplace_back(path.stem().string(), load_input(path));
        } catch (const Error& e) {
            failed.skipped.push_back(path.stem().string() + ": " + e.what());
        }
    }
    SweepResult result = run_sweep(spec, images);
    result.skipped.insert(result.skipped.begin(), failed.skipped.begin(), failed.skipped.end());
    return result;
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += "\"\"";
        else quoted += c;
    }
    quoted += "\"";
    return quoted;
}

std::string num6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

constexpr const char* metric_columns[] = {
    "psnr", "ssim", "psnr_b_hv", "psnr_b_diagonal", "psnr_b_combined", "bef_hv", "bef_diagonal", "bef_combined",
};

double metric_value(const SweepRow& row, const std::string& metric) {
    if (metric == "psnr") return row.psnr;
    if (metric == "ssim") return row.ssim;
    if (metric == "psnr_b_hv") return row.psnr_b[0];
    if (metric == "psnr_b_diagonal") return row.psnr_b[1];
    if (metric == "psnr_b_combined") return row.psnr_b[2];
    if (metric == "bef_hv") return row.bef[0];
    if (metric == "bef_diagonal") return row.bef[1];
    return row.bef[2];
}

}  // namespace

std::string emit_csv(std::span<const SweepRow> rows) {
    std::string out =
        "image,delta,method,psnr,ssim,psnr_b_hv,psnr_b_diagonal,psnr_b_combined,"
        "bef_hv,bef_diagonal,bef_combined,d_b,d_bc_hv,d_bc_diagonal,d_bc_combined,mdd,mdi,mdc\n";
    for (const SweepRow& row : rows) {
        out += csv_field(row.image);
        out += "," + num6(row.delta);
        out += ",";
        out += to_string(row.method);
        out += "," + num6(row.psnr) + "," + num6(row.ssim);
        for (int m = 0; m < 3; ++m) out += "," + num6(row.psnr_b[m]);
        for (int m = 0; m < 3; ++m) out += "," + num6(row.bef[m]);
        out += "," + num6(row.d_b);
        for (int m = 0; m < 3; ++m) out += "," + num6(row.d_bc[m]);
        out += "," + num6(row.mdd) + "," + num6(row.mdi) + "," + num6(row.mdc) + "\n";
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> emit_plots(std::span<const SweepRow> rows) {
    if (rows.empty()) raise(Errc::invalid_config, "cannot plot an empty row set");

    std::vector<std::string> images;
    for (const SweepRow& row : rows)
        if (std::find(images.begin(), images.end(), row.image) == images.end()) images.push_back(row.image);

    std::vector<std::pair<std::string, std::string>> out;
    for (const std::string& image : images) {
        std::vector<Method> methods;
        for (const SweepRow& row : rows)
            if (row.image == image && std::find(methods.begin(), methods.end(), row.method) == methods.end())
                methods.push_back(row.method);

        for (const char* metric : metric_columns) {
            PlotSpec spec;
            spec.title = image + ": " + metric + " vs quantization step";
            spec.x_label = "quantization step";
            spec.y_label = metric;
            for (Method m : methods) {
                PlotSeries series;
                series.label = std::string(to_string(m));
                for (const SweepRow& row : rows) {
                    if (row.image != image || row.method != m) continue;
                    series.x.push_back(row.delta);
                    series.y.push_back(metric_value(row, metric));
                }
                spec.series.push_back(std::move(series));
            }
            out.emplace_back(image + "_" + metric + ".svg", render_svg_line_chart(spec));
        }
    }
    return out;
}

}  // namespace blockiq
