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

#ifndef MISOBC_ERROR_HPP
#define MISOBC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace misobc {

enum class Errc {
    invalid_snr,
    invalid_exponent,
    degenerate_direction,
    empty_sample,
    invalid_ladder,
    invalid_quality,
    unsupported_strategy,
    undefined_ratio,
    achievability_violation,
    malformed_plan,
    invalid_weight,
    invalid_argument,
    io_failure,
};

const char *to_string(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string &what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace misobc

#endif
