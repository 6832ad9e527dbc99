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

#include "blockiq/kernels.hpp"

#include <atomic>

namespace blockiq::kern {
namespace {

const Ops* best_available() {
    if (const Ops* avx2 = avx2_ops()) return avx2;
    if (const Ops* neon = neon_ops()) return neon;
    return &scalar_ops();
}

std::atomic<const Ops*>& active_slot() {
    static std::atomic<const Ops*> slot{best_available()};
    return slot;
}

}  // namespace

const Ops& active() { return *active_slot().load(std::memory_order_relaxed); }

bool set_active(std::string_view name) {
    const Ops* next = nullptr;
    if (name == "auto")
        next = best_available();
    else if (name == "scalar")
        next = &scalar_ops();
    else if (name == "avx2")
        next = avx2_ops();
    else if (name == "neon")
        next = neon_ops();
    if (next == nullptr) return false;
    active_slot().store(next, std::memory_order_relaxed);
    return true;
}

std::string_view active_name() { return active().name; }

std::vector<std::string_view> available() {
    std::vector<std::string_view> names;
    if (const Ops* avx2 = avx2_ops()) names.push_back(avx2->name);
    if (const Ops* neon = neon_ops()) names.push_back(neon->name);
    names.push_back(scalar_ops().name);
    return names;
}

}  // namespace blockiq::kern
