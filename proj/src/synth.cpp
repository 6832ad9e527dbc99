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

#include "blockiq/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace blockiq {

namespace {

constexpr double tau = 2.0 * std::numbers::pi;

// Scene values stay inside [16, 240]; headroom keeps the POCS pipeline away
// from the [0, 255] clamp on this corpus.

double gradient_at(double u, double v) {
    return 28.0 + 200.0 * 0.5 * (u + v) + 8.0 * std::sin(tau * 3.0 * u) * std::sin(tau * 2.0 * v);
}

double zoneplate_at(double dx, double dy, int size) {
    // chirp rate keeps the instantaneous frequency photographic (< 0.06
    // cycles/px at the corners) rather than slamming Nyquist
    const double r2 = dx * dx + dy * dy;
    return 128.0 + 96.0 * std::cos(tau * r2 / (static_cast<double>(size) * 24.0));
}

double blobs_at(double u, double v) {
    struct Bump {
        double cx, cy, sigma, amp;
    };
    static constexpr Bump bumps[] = {
        {0.30, 0.25, 0.12, 120.0}, {0.70, 0.30, 0.08, 90.0}, {0.45, 0.70, 0.15, 110.0},
        {0.80, 0.80, 0.06, 70.0},  {0.15, 0.75, 0.09, 80.0},
    };
    double acc = 40.0;
    for (const Bump& bump : bumps) {
        const double dx = u - bump.cx;
        const double dy = v - bump.cy;
        acc += bump.amp * std::exp(-(dx * dx + dy * dy) / (2.0 * bump.sigma * bump.sigma));
    }
    return acc;
}

// smoothstep coverage of a region from its signed distance (positive inside);
// edges span ~2*w so the scene behaves like a photographed subject, not a
// binary mask
double coverage(double d, double w = 0.012) {
    const double t = std::clamp(d / (2.0 * w) + 0.5, 0.0, 1.0);
    return t * t * (3.0 - 2.0 * t);
}

double rect_distance(double u, double v, double u0, double u1, double v0, double v1) {
    return std::min(std::min(u - u0, u1 - u), std::min(v - v0, v1 - v));
}

double shapes_at(double u, double v) {
    double val = 200.0;
    val = std::lerp(val, 96.0, coverage((u + v - 1.35) / std::numbers::sqrt2));
    val = std::lerp(val, 64.0, coverage(rect_distance(u, v, 0.10, 0.45, 0.15, 0.60)));
    const double dx = u - 0.65, dy = v - 0.35;
    val = std::lerp(val, 128.0, coverage(0.18 - std::sqrt(dx * dx + dy * dy)));
    val = std::lerp(val, 232.0, coverage(rect_distance(u, v, 0.55, 0.90, 0.62, 0.72)));
    val = std::lerp(val, 40.0, coverage(std::min(u - 0.04, 0.08 - u)));
    return val;
}

double plaid_at(double u, double v) {
    return 128.0 + 48.0 * std::cos(tau * 5.0 * u + 0.7) + 36.0 * std::cos(tau * 7.0 * v + 1.3) +
           20.0 * std::cos(tau * 11.0 * (u + v));
}

}  // namespace

const std::vector<std::string>& scene_names() {
    static const std::vector<std::string> names = {"gradient", "zoneplate", "blobs", "shapes", "plaid"};
    return names;
}

Image synth_scene(std::string_view name, int size) {
    if (size < 16) raise(Errc::invalid_config, "scene size must be at least 16, got " + std::to_string(size));

    enum class Scene { gradient, zoneplate, blobs, shapes, plaid };
    Scene scene;
    if (name == "gradient")
        scene = Scene::gradient;
    else if (name == "zoneplate")
        scene = Scene::zoneplate;
    else if (name == "blobs")
        scene = Scene::blobs;
    else if (name == "shapes")
        scene = Scene::shapes;
    else if (name == "plaid")
        scene = Scene::plaid;
    else
        raise(Errc::invalid_config, "unknown scene '" + std::string(name) + "'");

    Image img = make_image(size, size);
    const double span = static_cast<double>(size - 1);
    const double half = span / 2.0;
    for (int y = 0; y < size; ++y)
        for (int x = 0; x < size; ++x) {
            const double u = static_cast<double>(x) / span;
            const double v = static_cast<double>(y) / span;
            double val = 0.0;
            switch (scene) {
                case Scene::gradient: val = gradient_at(u, v); break;
                case Scene::zoneplate: val = zoneplate_at(x - half, y - half, size); break;
                case Scene::blobs: val = blobs_at(u, v); break;
                case Scene::shapes: val = shapes_at(u, v); break;
                case Scene::plaid: val = plaid_at(u, v); break;
            }
            img.at(y, x) = storage_round(val);
        }
    return img;
}

std::vector<std::pair<std::string, Image>> synthetic_corpus(int size) {
    std::vector<std::pair<std::string, Image>> corpus;
    corpus.reserve(scene_names().size());
    for (const std::string& name : scene_names()) corpus.emplace_back(name, synth_scene(name, size));
    return corpus;
}

}  // namespace blockiq
