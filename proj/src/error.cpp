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

#include "blockiq/error.hpp"

namespace blockiq {

const char* to_string(Errc code) {
    switch (code) {
        case Errc::malformed_header: return "malformed header";
        case Errc::unsupported_depth: return "unsupported depth";
        case Errc::truncated_payload: return "truncated payload";
        case Errc::trailing_bytes: return "trailing bytes";
        case Errc::dimension_mismatch: return "dimension mismatch";
        case Errc::invalid_geometry: return "invalid geometry";
        case Errc::invalid_kernel: return "invalid kernel";
        case Errc::invalid_config: return "invalid config";
        case Errc::io_failure: return "io failure";
    }
    return "unknown error";
}

}  // namespace blockiq
