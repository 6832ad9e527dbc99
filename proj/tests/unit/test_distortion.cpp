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

#include <random>

#include "../support/approx.hpp"
#include "../support/oracles.hpp"
#include "blockiq/codec.hpp"
#include "blockiq/deblock.hpp"
#include "blockiq/distortion.hpp"
#include "blockiq/metrics.hpp"
#include "doctest.h"

using blockiq::Image;
using testsupport::near;

TEST_CASE("identity deblocker changes nothing") {
    std::mt19937 rng(51);
    const Image ref = oracle::random_image(rng, 24, 16);
    const Image decoded = oracle::random_image(rng, 24, 16);

    const blockiq::DistortionChangeReport rep = blockiq::analyze(ref, decoded, decoded);
    CHECK(rep.mdd == 0.0);
    CHECK(rep.mdi == 0.0);
    CHECK(rep.mdc == 0.0);
    CHECK_FALSE(rep.likely_successful());
    for (std::size_t i = 0; i < rep.ddr_mask.size(); ++i) {
        CHECK(rep.ddr_mask[i] == 0);
        CHECK(rep.dir_mask[i] == 0);
    }
}

TEST_CASE("perfect deblocker recovers the whole distortion") {
    std::mt19937 rng(52);
    const Image ref = oracle::random_image(rng, 16, 16);
    Image decoded = ref;
    for (std::size_t i = 0; i < decoded.samples.size(); i += 3) decoded.samples[i] += 4.0;

    const blockiq::DistortionChangeReport rep = blockiq::analyze(ref, decoded, ref);
    CHECK(near(rep.mdd, blockiq::mse(ref, decoded), 1e-12));
    CHECK(rep.mdi == 0.0);
    CHECK(near(rep.mdc, blockiq::mse(ref, decoded), 1e-12));
    CHECK(rep.likely_successful());
}

TEST_CASE("analyze matches the brute-force oracle") {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 10; ++trial) {
        const Image ref = oracle::random_image(rng, 19, 13);
        const Image decoded = oracle::random_image(rng, 19, 13);
        const Image deblocked = oracle::random_image(rng, 19, 13);

        const blockiq::DistortionChangeReport got = blockiq::analyze(ref, decoded, deblocked);
        const oracle::DistortionOracle want = oracle::analyze_brute(ref, decoded, deblocked);

        CHECK(got.n == static_cast<std::int64_t>(ref.pixel_count()));
        CHECK(near(got.mdd, want.mdd, 1e-12));
        CHECK(near(got.mdi, want.mdi, 1e-12));
        CHECK(near(got.mdc, want.mdc, 1e-12));
        REQUIRE(got.ddr_mask.size() == want.ddr.size());
        for (std::size_t i = 0; i < want.ddr.size(); ++i) {
            CHECK(got.ddr_mask[i] == want.ddr[i]);
            CHECK(got.dir_mask[i] == want.dir[i]);
            CHECK_FALSE((got.ddr_mask[i] == 1 && got.dir_mask[i] == 1));  // disjoint by construction
        }
    }
}

TEST_CASE("mdc equals the MSE drop of the deblocking pass") {
    std::mt19937 rng(54);
    const Image ref = oracle::random_image(rng, 32, 32);
    const blockiq::CodecConfig codec{8, 40.0};
    const blockiq::CoefficientGrid grid = blockiq::encode(ref, codec);
    const Image decoded = blockiq::decode(grid);
    const Image deblocked = blockiq::lowpass(decoded, blockiq::box_lowpass(3));

    const blockiq::DistortionChangeReport rep = blockiq::analyze(ref, decoded, deblocked);
    const double drop = blockiq::mse(ref, decoded) - blockiq::mse(ref, deblocked);
    CHECK(near(rep.mdc, drop, 1e-9));
}

TEST_CASE("analyze requires matching dimensions") {
    const Image a = blockiq::make_image(8, 8, 1.0);
    const Image b = blockiq::make_image(8, 9, 1.0);
    CHECK_THROWS_AS(blockiq::analyze(a, a, b), blockiq::Error);
    CHECK_THROWS_AS(blockiq::analyze(a, b, b), blockiq::Error);
}
