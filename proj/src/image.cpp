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

#include "blockiq/image.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace blockiq {

Image make_image(int width, int height, double value) {
    if (width <= 0 || height <= 0)
        raise(Errc::invalid_config, "image dimensions must be positive, got " + std::to_string(width) + "x" +
                                        std::to_string(height));
    Image img;
    img.width = width;
    img.height = height;
    img.samples.assign(static_cast<std::size_t>(width) * height, value);
    return img;
}

double storage_round(double v) {
    double r = std::round(v);  // rounds halves away from zero
    if (r < 0.0) return 0.0;
    if (r > 255.0) return 255.0;
    return r;
}

Image quantize_to_storage(const Image& img) {
    Image out = img;
    for (double& s : out.samples) s = storage_round(s);
    return out;
}

namespace {

struct Cursor {
    const std::uint8_t* p;
    const std::uint8_t* end;
};

bool is_pgm_ws(std::uint8_t c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

void skip_ws_and_comments(Cursor& cur) {
    for (;;) {
        while (cur.p < cur.end && is_pgm_ws(*cur.p)) ++cur.p;
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

}  // namespace

Image load_pgm(std::span<const std::uint8_t> bytes) {
    Cursor cur{bytes.data(), bytes.data() + bytes.size()};
    if (bytes.size() < 2 || cur.p[0] != 'P' || cur.p[1] != '5')
        raise(Errc::malformed_header, "not a binary PGM (P5) stream");
    cur.p += 2;

    long width = parse_header_int(cur, "width");
    long height = parse_header_int(cur, "height");
    long maxval = parse_header_int(cur, "maxval");
    if (width <= 0 || height <= 0)
        raise(Errc::malformed_header, "non-positive image dimensions");
    if (maxval != 255) {
        if (maxval >= 1 && maxval <= 65535)
            raise(Errc::unsupported_depth, "maxval " + std::to_string(maxval) + " (only 255 is supported)");
        raise(Errc::malformed_header, "maxval " + std::to_string(maxval) + " outside the PGM range");
    }

    // exactly one whitespace byte separates the header from the payload
    if (cur.p >= cur.end || !is_pgm_ws(*cur.p))
        raise(Errc::malformed_header, "missing whitespace before pixel data");
    ++cur.p;

    const std::size_t need = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    const std::size_t have = static_cast<std::size_t>(cur.end - cur.p);
    if (have < need)
        raise(Errc::truncated_payload,
              "expected " + std::to_string(need) + " pixel bytes, found " + std::to_string(have));
    if (have > need)
        raise(Errc::trailing_bytes, std::to_string(have - need) + " bytes after pixel data");

    Image img = make_image(static_cast<int>(width), static_cast<int>(height));
    for (std::size_t i = 0; i < need; ++i) img.samples[i] = static_cast<double>(cur.p[i]);
    return img;
}

std::vector<std::uint8_t> save_pgm(const Image& img) {
    char header[64];
    int n = std::snprintf(header, sizeof(header), "P5\n%d %d\n255\n", img.width, img.height);
    std::vector<std::uint8_t> out;
    out.reserve(static_cast<std::size_t>(n) + img.pixel_count());
    out.insert(out.end(), header, header + n);
    for (double s : img.samples) out.push_back(static_cast<std::uint8_t>(storage_round(s)));
    return out;
}

Image read_pgm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(Errc::io_failure, "cannot open " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) raise(Errc::io_failure, "cannot read " + path.string());
    return load_pgm(bytes);
}

void write_pgm(const std::filesystem::path& path, const Image& img) {
    std::vector<std::uint8_t> bytes = save_pgm(img);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) raise(Errc::io_failure, "cannot open " + path.string() + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) raise(Errc::io_failure, "cannot write " + path.string());
}

}  // namespace blockiq
