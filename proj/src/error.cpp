// SPDX-License-Identifier: Apache-2.0
//
// misobc - two-user MISO broadcast channel DoF toolkit
// Copyright (C) 2026 The misobc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "misobc/error.hpp"

namespace misobc {

const char *to_string(Errc code) noexcept {
    switch (code) {
    case Errc::invalid_snr: return "invalid-snr";
    case Errc::invalid_exponent: return "invalid-exponent";
    case Errc::degenerate_direction: return "degenerate-direction";
    case Errc::empty_sample: return "empty-sample";
    case Errc::invalid_ladder: return "invalid-ladder";
    case Errc::invalid_quality: return "invalid-quality";
    case Errc::unsupported_strategy: return "unsupported-strategy";
    case Errc::undefined_ratio: return "undefined-ratio";
    case Errc::achievability_violation: return "achievability-violation";
    case Errc::malformed_plan: return "malformed-plan";
    case Errc::invalid_weight: return "invalid-weight";
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::io_failure: return "io-failure";
    }
    return "unknown";
}

} // namespace misobc
