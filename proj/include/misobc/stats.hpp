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

#ifndef MISOBC_STATS_HPP
#define MISOBC_STATS_HPP

#include <cstddef>
#include <span>

namespace misobc {

/// Pairwise summation. The result depends only on the sequence, never on how
/// the caller produced it.
double pairwise_sum(std::span<const double> xs);

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double rms_residual = 0.0;
};

/// Ordinary least squares y = slope * x + intercept. Needs >= 2 distinct x.
LineFit fit_line(std::span<const double> x, std::span<const double> y);

} // namespace misobc

#endif
