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

// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include "misobc/channel.hpp"
#include "misobc/linkmc.hpp"
#include "misobc/regions.hpp"
#include "misobc/schemes.hpp"
#include "misobc/switcher.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace misobc;

namespace {

struct Outcome {
    bool passed;
    std::string detail;
};

int failures = 0;

void criterion(const char *id, const char *title, const std::function<Outcome()> &body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception &e) {
        o = {false, std::string("threw: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] %s %s: %s (%.2f s)\n", o.passed ? "PASS" : "FAIL", id, title, o.detail.c_str(), s);
    std::fflush(stdout);
    if (!o.passed)
        ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double max_dot(const DofRegion &r, Point2 d) {
    double best = -INFINITY;
    for (auto v : r.vertices())
        best = std::max(best, v.d1 * d.d1 + v.d2 * d.d2);
    return best;
}

struct McCase {
    const char *label;
    const char *scheme;
    QualityPair q;
    ScenarioKind kind;
    double target;
    double tol;
};

const std::vector<McCase> kMcCases{
    {"fdma", "fdma", {0, 0}, ScenarioKind::unmatched, 1.00, 0.05},
    {"zfbf(1,1)", "zfbf", {1, 1}, ScenarioKind::unmatched, 2.00, 0.05},
    {"zfbf(0.8,0.5)", "zfbf", {0.8, 0.5}, ScenarioKind::unmatched, 1.30, 0.10},
    {"s3(1,0.5)", "s3", {1, 0.5}, ScenarioKind::unmatched, 1.50, 0.10},
    {"optimal-unmatched(0.8,0.5)", "optimal-unmatched", {0.8, 0.5}, ScenarioKind::unmatched, 1.65, 0.10},
    {"matched-optimal(0.8,0.5)", "matched-optimal", {0.8, 0.5}, ScenarioKind::matched, 1.65, 0.10},
};

std::vector<double> measured_slopes;

} // namespace

int main() {
    std::printf("misobc acceptance\n");

    criterion("AC1", "composition identity", [] {
        const auto t0 = std::chrono::steady_clock::now();
        std::mt19937_64 rng(1);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        int bad_u = 0, bad_m = 0;
        for (int t = 0; t < 1000; ++t) {
            double b = u(rng), a = u(rng);
            if (a > b)
                std::swap(a, b);
            if (!region_equal(compose_unmatched({b, a}), outer_bound({b, a}), 1e-9))
                ++bad_u;
        }
        for (int t = 0; t < 1000; ++t) {
            const QualityPair q{u(rng), u(rng)};
            if (!region_equal(compose_matched(q), outer_bound(q), 1e-9))
                ++bad_m;
        }
        const double s = seconds_since(t0);
        std::ostringstream os;
        os << "unmatched mismatches " << bad_u << "/1000, matched mismatches " << bad_m << "/1000, " << s
           << " s (limit 5 s)";
        return Outcome{bad_u == 0 && bad_m == 0 && s < 5.0, os.str()};
    });

    criterion("AC2", "composition figure at (0.8, 0.5)", [] {
        const QualityPair q{0.8, 0.5};
        const auto composed = compose_unmatched(q);
        const bool verts = oracle::same_vertex_set(composed.vertices(),
                                                   {{0, 0}, {1, 0}, {1, 0.65}, {0.65, 1}, {0, 1}}, 1e-9);
        const auto parts = unmatched_components(q);
        const bool square = oracle::same_vertex_set(parts.at(0).scaled.vertices(),
                                                    {{0, 0}, {0.5, 0}, {0.5, 0.5}, {0, 0.5}}, 1e-9);
        const double face = max_dot(parts.at(1).scaled, {1, 1});
        const bool tri =
            oracle::same_vertex_set(parts.at(2).scaled.vertices(), {{0, 0}, {0.2, 0}, {0, 0.2}}, 1e-9);
        const double total = max_dot(composed, {1, 1});
        const double parts_total = max_dot(parts[0].scaled, {1, 1}) + face + max_dot(parts[2].scaled, {1, 1});
        std::ostringstream os;
        os << "vertices " << (verts ? "match" : "DIFFER") << ", square side 0.5 " << (square ? "ok" : "BAD")
           << ", alternating sum face " << face << ", triangle leg 0.2 " << (tri ? "ok" : "BAD")
           << ", composed sum face " << total << " = " << parts_total;
        return Outcome{verts && square && tri && std::abs(face - 0.45) < 1e-9 && std::abs(total - 1.65) < 1e-9 &&
                           std::abs(total - parts_total) < 1e-9,
                       os.str()};
    });

    criterion("AC3", "switching guarantees", [] {
        const auto t0 = std::chrono::steady_clock::now();
        const auto u = min_ratio(ScenarioKind::unmatched, 0.005);
        const auto m = min_ratio(ScenarioKind::matched, 0.005);
        const double s = seconds_since(t0);
        bool u_at = !u.argmin.empty(), m_at = !m.argmin.empty();
        for (const auto &q : u.argmin)
            u_at = u_at && std::abs(q.beta - 2.0 / 3) <= 0.005 && std::abs(q.alpha - 2.0 / 3) <= 0.005;
        for (const auto &q : m.argmin)
            m_at = m_at && std::abs(q.beta + q.alpha - 1.0) < 1e-9;
        const double exact = best_strategy({2.0 / 3, 2.0 / 3}, ScenarioKind::unmatched).ratio;
        std::ostringstream os;
        os.precision(6);
        os << "unmatched " << u.ratio << " near (2/3,2/3) " << (u_at ? "yes" : "NO") << " (exact cell " << exact
           << "), matched " << m.ratio << " on beta+alpha=1 " << (m_at ? "yes" : "NO") << " (" << m.argmin.size()
           << " cells), " << s << " s (limit 10 s)";
        return Outcome{std::abs(u.ratio - 0.8) <= 1e-3 && std::abs(m.ratio - 0.6667) <= 1e-3 && u_at && m_at &&
                           std::abs(exact - 0.8) < 1e-12 && s < 10.0,
                       os.str()};
    });

    criterion("AC4", "optimal-needed share of the unmatched map", [] {
        const auto at = [](double rho) {
            const auto map = sweep(ScenarioKind::unmatched, 0.01, rho);
            const auto counts = map.counts_by_label();
            const auto it = counts.find(std::string(kOptimalNeeded));
            return std::pair{it == counts.end() ? std::size_t{0} : it->second, map.cells.size()};
        };
        const auto [n9, total] = at(0.9);
        const auto n8 = at(0.8).first;
        const double share = static_cast<double>(n9) / static_cast<double>(total);
        std::ostringstream os;
        os << "rho 0.9: " << n9 << "/" << total << " cells (" << 100.0 * share << "%), rho 0.8: " << n8;
        return Outcome{n9 > 0 && share >= 0.3 && share <= 0.6 && n8 == 0, os.str()};
    });

    criterion("AC5", "Monte Carlo DoF slopes", [] {
        std::vector<SnrPoint> ladder;
        for (double db : {40.0, 50.0, 60.0})
            ladder.push_back(SnrPoint::from_db(db));
        bool ok = true;
        std::ostringstream os;
        os.precision(4);
        for (const auto &c : kMcCases) {
            const auto t0 = std::chrono::steady_clock::now();
            const auto rep = estimate_dof(descriptor_by_name(c.scheme, c.q, c.kind), c.q, c.kind, ladder,
                                          McOptions{20000, 0, 1});
            const double s = seconds_since(t0);
            const double slope = rep.sum.value();
            measured_slopes.push_back(slope);
            const bool pass = std::abs(slope - c.target) <= c.tol && s < 60.0;
            ok = ok && pass;
            os << (measured_slopes.size() > 1 ? "; " : "") << c.label << " " << slope << " vs " << c.target
               << "+-" << c.tol << " (" << (rep.sum.used_top_pair ? "top-pair" : "ls") << ", residual "
               << rep.sum.residual << ", " << s << " s)" << (pass ? "" : " FAIL");
        }
        return Outcome{ok, os.str()};
    });

    criterion("AC6", "static achievability and power identity", [] {
        double worst = INFINITY;
        int checked = 0;
        bool identity = true;
        for (int i = 0; i <= 20; ++i)
            for (int j = 0; j <= i; ++j) {
                const QualityPair q{i * 0.05, j * 0.05};
                for (const auto &d : {optimal_unmatched_descriptor(q), matched_descriptor(q), fdma_descriptor(),
                                      zfbf_descriptor(q, ScenarioKind::unmatched),
                                      zfbf_descriptor(q, ScenarioKind::matched), s3_descriptor(q)}) {
                    worst = std::min(worst, static_achievability_check(d).min_margin());
                    for (Subband s : kSubbands)
                        identity = identity && slot_power_identity(d, s);
                    ++checked;
                }
            }
        std::ostringstream os;
        os << checked << " descriptors, min margin " << (std::abs(worst) <= kMarginTolerance ? 0.0 : worst)
           << ", power identity " << (identity ? "exact" : "BROKEN");
        return Outcome{worst >= -kMarginTolerance && identity, os.str()};
    });

    criterion("AC7", "outer-bound respect of measured slopes", [] {
        if (measured_slopes.size() != kMcCases.size())
            return Outcome{false, "AC5 slopes unavailable"};
        double worst = -INFINITY;
        for (std::size_t i = 0; i < kMcCases.size(); ++i) {
            const auto &q = kMcCases[i].q;
            worst = std::max(worst, measured_slopes[i] - (1.0 + (q.beta + q.alpha) / 2.0));
        }
        std::ostringstream os;
        os << "largest excess over 1+(beta+alpha)/2 is " << worst << " (limit 0.1)";
        return Outcome{worst <= 0.1, os.str()};
    });

    criterion("AC8", "private-phase ratios", [] {
        const Rational b(4, 5), a(1, 2);
        const Rational icc = private_phase_ratio(Strategy::icc_private, b, a);
        const Rational opt = private_phase_ratio(Strategy::optimal_private, b, a);
        bool order = true;
        for (int i = 1; i <= 20; ++i)
            for (int j = 0; j <= i; ++j) {
                const Rational x = private_phase_ratio(Strategy::icc_private, Rational(i, 20), Rational(j, 20));
                const Rational y = private_phase_ratio(Strategy::optimal_private, Rational(i, 20), Rational(j, 20));
                order = order && (i == j ? x == y : x < y);
            }
        std::ostringstream os;
        os << "icc-private " << icc << ", optimal-private " << opt << ", ordering on grid "
           << (order ? "holds" : "BROKEN");
        return Outcome{icc == Rational(32, 19) && opt == Rational(29, 16) && order, os.str()};
    });

    criterion("AC9", "error-scaling statistics", [] {
        std::vector<SnrPoint> ladder;
        for (double db : {40.0, 50.0, 60.0})
            ladder.push_back(SnrPoint::from_db(db));
        bool ok = true;
        std::ostringstream os;
        os.precision(4);
        for (double a : {0.0, 0.5, 1.0}) {
            const double m = measure_error_exponent(a, ladder, 100000, 0);
            ok = ok && std::abs(m - a) <= 0.02;
            os << (a > 0 ? ", " : "") << "a=" << a << " -> " << m;
        }
        return Outcome{ok, os.str()};
    });

    std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
    return failures == 0 ? 0 : 1;
}
