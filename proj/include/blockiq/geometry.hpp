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
#include <utility>
#include <vector>

#include "blockiq/error.hpp"

namespace blockiq {

/// Block grid over an n_h x n_v image. b is the blockiness block size B and
/// must divide both dimensions (the metrics assume an integer number of
/// blocks).
struct BlockGeometry {
    int n_h = 0;  // horizontal dimension (width)
    int n_v = 0;  // vertical dimension (height)
    int b = 0;    // block size
};

/// Validates and returns a BlockGeometry. Throws invalid_geometry when b < 2,
/// b > min(n_h, n_v), or b does not divide both dimensions.
BlockGeometry make_geometry(int n_h, int n_v, int b);

/// A neighboring pixel pair as two row-major linear indices.
using PixelPair = std::pair<std::int32_t, std::int32_t>;

/// The six classified neighbor-pair sets of a block grid.
///
/// Horizontal and vertical pairs are split into boundary (straddling a block
/// edge) and non-boundary. Diagonal pairs (down-right r_bc, down-left l_bc)
/// are kept only when both pixels fall inside the same BxB block; there is no
/// diagonal boundary set. Counts mirror the set cardinalities; the horizontal
/// and vertical ones also satisfy the closed forms
///   n_hb = n_v * (n_h / b - 1),   n_hbc = n_v * (n_h - 1) - n_hb
/// (and transposed for vertical).
struct PixelPairSets {
    std::vector<PixelPair> h_b, h_bc;
    std::vector<PixelPair> v_b, v_bc;
    std::vector<PixelPair> r_bc, l_bc;

    std::int64_t n_hb = 0, n_hbc = 0;
    std::int64_t n_vb = 0, n_vbc = 0;
    std::int64_t n_rbc = 0, n_lbc = 0;
};

/// Enumerates all six pair sets by direct scan of the grid.
PixelPairSets build_pair_sets(const BlockGeometry& geom);

struct PairCounts {
    std::int64_t n_hb = 0, n_hbc = 0;
    std::int64_t n_vb = 0, n_vbc = 0;
    std::int64_t n_rbc = 0, n_lbc = 0;
};

/// Pair counts without materializing the sets. Diagonal counts are the
/// enumerated same-block cardinalities: (n_h/b)*(n_v/b)*(b-1)^2 each.
PairCounts pair_counts(const BlockGeometry& geom);

/// Closed-form diagonal counts that reuse the horizontal/vertical
/// non-boundary formulas (n_rbc = n_v*(n_h-1) - n_hb and transposed). These
/// differ from the enumerated same-block counts; they are kept so scores can
/// be compared against implementations that normalize the diagonal sums this
/// way.
std::pair<std::int64_t, std::int64_t> formula_diagonal_counts(const BlockGeometry& geom);

}  // namespace blockiq
