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

#include "blockiq/distortion.hpp"

namespace blockiq {

DistortionChangeReport analyze(const Image& ref, const Image& decoded, const Image& deblocked) {
    require_same_dims(ref, decoded, "analyze");
    require_same_dims(ref, deblocked, "analyze");

    const std::size_t n = ref.pixel_count();
    DistortionChangeReport rep;
    rep.width = ref.width;
    rep.height = ref.height;
    rep.n = static_cast<std::int64_t>(n);
    rep.ddr_mask.assign(n, 0);
    rep.dir_mask.assign(n, 0);

    double decrease = 0.0;
    double increase = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double e_dec = ref.samples[i] - decoded.samples[i];
        const double e_deb = ref.samples[i] - deblocked.samples[i];
        const double d_dec = e_dec * e_dec;
        const double d_deb = e_deb * e_deb;
        if (d_deb < d_dec) {
            rep.ddr_mask[i] = 1;
            decrease += d_dec - d_deb;
        } else if (d_dec < d_deb) {
            rep.dir_mask[i] = 1;
            increase += d_deb - d_dec;
        }
    }
    rep.mdd = decrease / static_cast<double>(n);
    rep.mdi = increase / static_cast<double>(n);
    rep.mdc = rep.mdd - rep.mdi;
    return rep;
}

}  // namespace blockiq
