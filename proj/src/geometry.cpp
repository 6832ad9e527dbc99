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

#include "blockiq/geometry.hpp"

#include <string>

namespace blockiq {

BlockGeometry make_geometry(int n_h, int n_v, int b) {
    if (n_h <= 0 || n_v <= 0)
        raise(Errc::invalid_geometry,
              "image dimensions must be positive, got " + std::to_string(n_h) + "x" + std::to_string(n_v));
    if (b < 2) raise(Errc::invalid_geometry, "block size must be at least 2, got " + std::to_string(b));
    if (b > n_h || b > n_v)
        raise(Errc::invalid_geometry, "block size " + std::to_string(b) + " exceeds image " + std::to_string(n_h) +
                                          "x" + std::to_string(n_v));
    if (n_h % b != 0 || n_v % b != 0)
        raise(Errc::invalid_geometry, "block size " + std::to_string(b) + " must divide both dimensions of " +
                                          std::to_string(n_h) + "x" + std::to_string(n_v));
    return BlockGeometry{n_h, n_v, b};
}

PixelPairSets build_pair_sets(const BlockGeometry& geom) {
    const int w = geom.n_h, h = geom.n_v, b = geom.b;
    PixelPairSets sets;

    auto idx = [w](int r, int c) { return static_cast<std::int32_t>(r * w + c); };

    for (int r = 0; r < h; ++r) {
        for (int c = 0; c + 1 < w; ++c) {
            auto& bucket = (c % b == b - 1) ? sets.h_b : sets.h_bc;
            bucket.emplace_back(idx(r, c), idx(r, c + 1));
        }
    }
    for (int r = 0; r + 1 < h; ++r) {
        for (int c = 0; c < w; ++c) {
            auto& bucket = (r % b == b - 1) ? sets.v_b : sets.v_bc;
            bucket.emplace_back(idx(r, c), idx(r + 1, c));
        }
    }
    // diagonals: both endpoints must stay inside one block
    for (int r = 0; r + 1 < h; ++r) {
        if (r % b == b - 1) continue;
        for (int c = 0; c < w; ++c) {
            if (c + 1 < w && c % b != b - 1) sets.r_bc.emplace_back(idx(r, c), idx(r + 1, c + 1));
            if (c > 0 && c % b != 0) sets.l_bc.emplace_back(idx(r, c), idx(r + 1, c - 1));
        }
    }

    sets.n_hb = static_cast<std::int64_t>(sets.h_b.size());
    sets.n_hbc = static_cast<std::int64_t>(sets.h_bc.size());
    sets.n_vb = static_cast<std::int64_t>(sets.v_b.size());
    sets.n_vbc = static_cast<std::int64_t>(sets.v_bc.size());
    sets.n_rbc = static_cast<std::int64_t>(sets.r_bc.size());
    sets.n_lbc = static_cast<std::int64_t>(sets.l_bc.size());
    return sets;
}

PairCounts pair_counts(const BlockGeometry& geom) {
    const std::int64_t n_h = geom.n_h, n_v = geom.n_v, b = geom.b;
    PairCounts counts;
    counts.n_hb = n_v * (n_h / b - 1);
    counts.n_hbc = n_v * (n_h - 1) - counts.n_hb;
    counts.n_vb = n_h * (n_v / b - 1);
    counts.n_vbc = n_h * (n_v - 1) - counts.n_vb;
    counts.n_rbc = (n_h / b) * (n_v / b) * (b - 1) * (b - 1);
    counts.n_lbc = counts.n_rbc;
    return counts;
}

std::pair<std::int64_t, std::int64_t> formula_diagonal_counts(const BlockGeometry& geom) {
    const std::int64_t n_h = geom.n_h, n_v = geom.n_v, b = geom.b;
    const std::int64_t n_hb = n_v * (n_h / b - 1);
    const std::int64_t n_vb = n_h * (n_v / b - 1);
    return {n_v * (n_h - 1) - n_hb, n_h * (n_v - 1) - n_vb};
}

}  // namespace blockiq
