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

#include <string>
#include <vector>

namespace blockiq {

struct PlotSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;  // non-finite points are skipped
};

struct PlotSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<PlotSeries> series;
};

/// Renders a deterministic SVG 1.1 line chart (fixed size, fixed precision,
/// no timestamps). Identical specs produce identical bytes.
std::string render_svg_line_chart(const PlotSpec& spec);

}  // namespace blockiq
