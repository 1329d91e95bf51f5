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

#ifndef MISOBC_VERIFY_HPP
#define MISOBC_VERIFY_HPP

#include "misobc/channel.hpp"

#include <optional>
#include <string>
#include <vector>

namespace misobc {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Invariant battery behind `misobc verify`: power identities, achievability
/// margins, analytic/descriptor agreement, a composition-identity sample and
/// the switching min-ratio certificates. Restricted to one scenario when given.
std::vector<CheckResult> run_verification(std::optional<ScenarioKind> only);

} // namespace misobc

#endif
