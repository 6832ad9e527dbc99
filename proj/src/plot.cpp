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

#include "blockiq/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace blockiq {

namespace {

constexpr double canvas_w = 640.0;
constexpr double canvas_h = 480.0;
constexpr double margin_l = 64.0;
constexpr double margin_r = 150.0;
constexpr double margin_t = 42.0;
constexpr double margin_b = 52.0;

const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string fmt_tick(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string escape_xml(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string render_svg_line_chart(const PlotSpec& spec) {
    double x_min = 0.0, x_max = 1.0, y_min = 0.0, y_max = 1.0;
    bool any = false;
    for (const PlotSeries& s : spec.series)
        for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            if (!any) {
                x_min = x_max = s.x[i];
                y_min = y_max = s.y[i];
                any = true;
            } else {
                x_min = std::min(x_min, s.x[i]);
                x_max = std::max(x_max, s.x[i]);
                y_min = std::min(y_min, s.y[i]);
                y_max = std::max(y_max, s.y[i]);
            }
        }
    if (x_max - x_min < 1e-12) {
        x_min -= 1.0;
        x_max += 1.0;
    }
    if (y_max - y_min < 1e-12) {
        y_min -= 1.0;
        y_max += 1.0;
    }

    const double plot_w = canvas_w - margin_l - margin_r;
    const double plot_h = canvas_h - margin_t - margin_b;
    auto sx = [&](double x) { return margin_l + (x - x_min) / (x_max - x_min) * plot_w; };
    auto sy = [&](double y) { return margin_t + plot_h - (y - y_min) / (y_max - y_min) * plot_h; };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"640\" height=\"480\" "
           "viewBox=\"0 0 640 480\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"640\" height=\"480\" fill=\"#ffffff\"/>\n";
    svg += "<text x=\"" + fmt(margin_l + plot_w / 2.0) + "\" y=\"24\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"16\">" +
           escape_xml(spec.title) + "</text>\n";

    // frame
    svg += "<rect x=\"" + fmt(margin_l) + "\" y=\"" + fmt(margin_t) + "\" width=\"" + fmt(plot_w) + "\" height=\"" +
           fmt(plot_h) + "\" fill=\"none\" stroke=\"#000000\"/>\n";

    // ticks and grid
    const int n_ticks = 5;
    for (int i = 0; i <= n_ticks; ++i) {
        const double fx = x_min + (x_max - x_min) * i / n_ticks;
        const double px = sx(fx);
        svg += "<line x1=\"" + fmt(px) + "\" y1=\"" + fmt(margin_t) + "\" x2=\"" + fmt(px) + "\" y2=\"" +
               fmt(margin_t + plot_h) + "\" stroke=\"#dddddd\"/>\n";
        svg += "<text x=\"" + fmt(px) + "\" y=\"" + fmt(margin_t + plot_h + 18.0) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" + fmt_tick(fx) + "</text>\n";

        const double fy = y_min + (y_max - y_min) * i / n_ticks;
        const double py = sy(fy);
        svg += "<line x1=\"" + fmt(margin_l) + "\" y1=\"" + fmt(py) + "\" x2=\"" + fmt(margin_l + plot_w) +
               "\" y2=\"" + fmt(py) + "\" stroke=\"#dddddd\"/>\n";
        svg += "<text x=\"" + fmt(margin_l - 6.0) + "\" y=\"" + fmt(py + 4.0) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" + fmt_tick(fy) + "</text>\n";
    }

    svg += "<text x=\"" + fmt(margin_l + plot_w / 2.0) + "\" y=\"" + fmt(canvas_h - 14.0) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" + escape_xml(spec.x_label) +
           "</text>\n";
    svg += "<text x=\"18\" y=\"" + fmt(margin_t + plot_h / 2.0) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" transform=\"rotate(-90 18 " +
           fmt(margin_t + plot_h / 2.0) + ")\">" + escape_xml(spec.y_label) + "</text>\n";

    // series
    for (std::size_t si = 0; si < spec.series.size(); ++si) {
        const PlotSeries& s = spec.series[si];
        const char* color = palette[si % (sizeof(palette) / sizeof(palette[0]))];
        std::string points;
        for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            if (!points.empty()) points += " ";
            points += fmt(sx(s.x[i])) + "," + fmt(sy(s.y[i]));
        }
        if (!points.empty())
            svg += "<polyline points=\"" + points + "\" fill=\"none\" stroke=\"" + color +
                   "\" stroke-width=\"1.5\"/>\n";
        for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            svg += "<circle cx=\"" + fmt(sx(s.x[i])) + "\" cy=\"" + fmt(sy(s.y[i])) + "\" r=\"2.5\" fill=\"" +
                   color + "\"/>\n";
        }

        // legend row
        const double ly = margin_t + 14.0 + 18.0 * static_cast<double>(si);
        const double lx = margin_l + plot_w + 12.0;
        svg += "<line x1=\"" + fmt(lx) + "\" y1=\"" + fmt(ly - 4.0) + "\" x2=\"" + fmt(lx + 22.0) + "\" y2=\"" +
               fmt(ly - 4.0) + "\" stroke=\"" + color + "\" stroke-width=\"1.5\"/>\n";
        svg += "<text x=\"" + fmt(lx + 28.0) + "\" y=\"" + fmt(ly) +
               "\" font-family=\"sans-serif\" font-size=\"12\">" + escape_xml(s.label) + "</text>\n";
    }

    svg += "</svg>\n";
    return svg;
}

}  // namespace blockiq
