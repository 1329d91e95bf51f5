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

#ifndef MISOBC_SWITCHER_HPP
#define MISOBC_SWITCHER_HPP

#include "misobc/channel.hpp"
#include "misobc/schemes.hpp"

#include <json.hpp>

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace misobc {

struct SweepCell {
    double beta = 0.0;
    double alpha = 0.0;
    double d_fdma = 0.0;
    double d_zfbf = 0.0;
    std::optional<double> d_s3; // unmatched only
    double d_opt = 0.0;
    Strategy best = Strategy::fdma;
    double ratio = 0.0;
};

inline constexpr double kTieTolerance = 1e-12;
inline constexpr std::string_view kOptimalNeeded = "optimal-needed";

/// Best of the scenario's sub-optimal strategies at q, ties going to the
/// earlier of fdma, zfbf, s3. Unmatched qualities with alpha > beta are
/// evaluated with the roles swapped.
SweepCell best_strategy(const QualityPair &q, ScenarioKind kind);

/// Map label: the winning strategy, or "optimal-needed" when ratio < rho.
std::string cell_label(const SweepCell &c, double rho);

struct SweepMap {
    ScenarioKind scenario = ScenarioKind::unmatched;
    double step = 0.01;
    double rho = 0.8;
    std::size_t points_per_axis = 0;
    std::vector<SweepCell> cells; // beta-major, alpha ascending within a row

    std::map<std::string, std::size_t> counts_by_label() const;
};

/// Full [0,1]^2 grid; 1/step must be an integer. Throws Errc::invalid_argument
/// for step outside (0, 0.1] or rho outside (0, 1].
SweepMap sweep(ScenarioKind kind, double step, double rho);

struct MinRatio {
    double ratio = 0.0;
    std::vector<QualityPair> argmin;
};

inline constexpr double kArgminTolerance = 1e-9;

MinRatio min_ratio(ScenarioKind kind, double step);

void write_csv(const SweepMap &map, std::ostream &os);

/// One parsed CSV row; `best` holds the label column verbatim.
struct SweepRow {
    double beta, alpha, d_fdma, d_zfbf;
    std::optional<double> d_s3;
    double d_opt;
    std::string best;
    double ratio;
};
std::vector<SweepRow> read_csv(std::istream &is);

nlohmann::json summary_json(const SweepMap &map, const MinRatio &mr);

/// pm3d-friendly "beta alpha ratio" blocks, one blank line between beta rows.
void write_gnuplot(const SweepMap &map, std::ostream &os);

} // namespace misobc

#endif
