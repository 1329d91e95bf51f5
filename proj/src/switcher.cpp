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

#include "misobc/switcher.hpp"

#include "misobc/error.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace misobc {

namespace {

std::size_t grid_points(double step) {
    if (!(step > 0.0 && step <= 0.1))
        throw Error(Errc::invalid_argument, "grid step must lie in (0, 0.1]");
    const double inv = 1.0 / step;
    const double n = std::round(inv);
    if (std::abs(inv - n) > 1e-6)
        throw Error(Errc::invalid_argument, "1/step must be an integer");
    return static_cast<std::size_t>(n) + 1;
}

std::string fmt(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

double parse_double(const std::string &s) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw Error(Errc::invalid_argument, "bad number in CSV: '" + s + "'");
    return v;
}

template <typename F> void for_each_cell(std::size_t n, F &&f) {
    const double denom = static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            f(QualityPair{static_cast<double>(i) / denom, static_cast<double>(k) / denom});
}

} // namespace

SweepCell best_strategy(const QualityPair &q_in, ScenarioKind kind) {
    const QualityPair given = QualityPair::make(q_in.beta, q_in.alpha);
    const QualityPair q = kind == ScenarioKind::unmatched && !given.ordered() ? given.swapped() : given;

    SweepCell c;
    c.beta = given.beta;
    c.alpha = given.alpha;
    c.d_fdma = analytic_sum_dof(Strategy::fdma, q, kind);
    c.d_zfbf = analytic_sum_dof(Strategy::zfbf, q, kind);
    c.d_opt = analytic_sum_dof(kind == ScenarioKind::unmatched ? Strategy::optimal : Strategy::matched_optimal,
                               q, kind);
    double best = c.d_fdma;
    c.best = Strategy::fdma;
    if (c.d_zfbf > best + kTieTolerance) {
        best = c.d_zfbf;
        c.best = Strategy::zfbf;
    }
    if (kind == ScenarioKind::unmatched) {
        c.d_s3 = analytic_sum_dof(Strategy::s3, q, kind);
        if (*c.d_s3 > best + kTieTolerance) {
            best = *c.d_s3;
            c.best = Strategy::s3;
        }
    }
    c.ratio = best / c.d_opt;
    return c;
}

std::string cell_label(const SweepCell &c, double rho) {
    if (c.ratio < rho - kTieTolerance)
        return std::string(kOptimalNeeded);
    return std::string(to_string(c.best));
}

std::map<std::string, std::size_t> SweepMap::counts_by_label() const {
    std::map<std::string, std::size_t> counts{{std::string(kOptimalNeeded), 0}, {"fdma", 0}, {"zfbf", 0}};
    if (scenario == ScenarioKind::unmatched)
        counts["s3"] = 0;
    for (const auto &c : cells)
        ++counts[cell_label(c, rho)];
    return counts;
}

SweepMap sweep(ScenarioKind kind, double step, double rho) {
    const std::size_t n = grid_points(step);
    if (!(rho > 0.0 && rho <= 1.0))
        throw Error(Errc::invalid_argument, "rho must lie in (0, 1]");
    SweepMap map;
    map.scenario = kind;
    map.step = step;
    map.rho = rho;
    map.points_per_axis = n;
    map.cells.reserve(n * n);
    for_each_cell(n, [&](const QualityPair &q) { map.cells.push_back(best_strategy(q, kind)); });
    return map;
}

MinRatio min_ratio(ScenarioKind kind, double step) {
    const std::size_t n = grid_points(step);
    std::vector<SweepCell> cells;
    cells.reserve(n * n);
    for_each_cell(n, [&](const QualityPair &q) { cells.push_back(best_strategy(q, kind)); });
    MinRatio mr;
    mr.ratio = std::numeric_limits<double>::infinity();
    for (const auto &c : cells)
        mr.ratio = std::min(mr.ratio, c.ratio);
    for (const auto &c : cells)
        if (c.ratio <= mr.ratio + kArgminTolerance)
            mr.argmin.push_back({c.beta, c.alpha});
    return mr;
}

void write_csv(const SweepMap &map, std::ostream &os) {
    os << "beta,alpha,d_fdma,d_zfbf,d_s3,d_opt,best,ratio\n";
    for (const auto &c : map.cells)
        os << fmt(c.beta) << ',' << fmt(c.alpha) << ',' << fmt(c.d_fdma) << ',' << fmt(c.d_zfbf) << ','
           << (c.d_s3 ? fmt(*c.d_s3) : "") << ',' << fmt(c.d_opt) << ',' << cell_label(c, map.rho) << ','
           << fmt(c.ratio) << '\n';
}

std::vector<SweepRow> read_csv(std::istream &is) {
    std::string line;
    if (!std::getline(is, line) || line != "beta,alpha,d_fdma,d_zfbf,d_s3,d_opt,best,ratio")
        throw Error(Errc::invalid_argument, "missing or unexpected sweep CSV header");
    std::vector<SweepRow> rows;
    while (std::getline(is, line)) {
        if (line.empty())
            continue;
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ','))
            f.push_back(field);
        if (line.back() == ',')
            f.emplace_back();
        if (f.size() != 8)
            throw Error(Errc::invalid_argument, "sweep CSV row needs 8 fields: " + line);
        SweepRow r;
        r.beta = parse_double(f[0]);
        r.alpha = parse_double(f[1]);
        r.d_fdma = parse_double(f[2]);
        r.d_zfbf = parse_double(f[3]);
        if (!f[4].empty())
            r.d_s3 = parse_double(f[4]);
        r.d_opt = parse_double(f[5]);
        r.best = f[6];
        r.ratio = parse_double(f[7]);
        rows.push_back(std::move(r));
    }
    return rows;
}

nlohmann::json summary_json(const SweepMap &map, const MinRatio &mr) {
    nlohmann::json j;
    j["scenario"] = to_string(map.scenario);
    j["step"] = map.step;
    j["rho"] = map.rho;
    j["cells"] = map.cells.size();
    j["min_ratio"] = mr.ratio;
    j["argmin"] = nlohmann::json::array();
    for (const auto &q : mr.argmin)
        j["argmin"].push_back({q.beta, q.alpha});
    j["counts_by_strategy"] = map.counts_by_label();
    return j;
}

void write_gnuplot(const SweepMap &map, std::ostream &os) {
    os << "# beta alpha ratio label\n";
    for (std::size_t i = 0; i < map.cells.size(); ++i) {
        const auto &c = map.cells[i];
        if (i > 0 && i % map.points_per_axis == 0)
            os << '\n';
        os << fmt(c.beta) << ' ' << fmt(c.alpha) << ' ' << fmt(c.ratio) << ' ' << cell_label(c, map.rho) << '\n';
    }
}

} // namespace misobc
