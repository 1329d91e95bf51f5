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

#include "misobc/verify.hpp"

#include "misobc/error.hpp"
#include "misobc/regions.hpp"
#include "misobc/schemes.hpp"
#include "misobc/switcher.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <sstream>

namespace misobc {

namespace {

// Descriptors checked for a scenario at quality q (unmatched q has beta >= alpha).
std::vector<std::pair<SchemeDescriptor, Strategy>> descriptors_at(const QualityPair &q, ScenarioKind kind) {
    std::vector<std::pair<SchemeDescriptor, Strategy>> out;
    out.emplace_back(fdma_descriptor(), Strategy::fdma);
    out.emplace_back(zfbf_descriptor(q, kind), Strategy::zfbf);
    if (kind == ScenarioKind::unmatched) {
        out.emplace_back(s3_descriptor(q), Strategy::s3);
        out.emplace_back(optimal_unmatched_descriptor(q), Strategy::optimal);
    } else {
        out.emplace_back(matched_descriptor(q), Strategy::matched_optimal);
    }
    return out;
}

void for_grid(ScenarioKind kind, const std::function<void(const QualityPair &)> &f) {
    constexpr int n = 20;
    for (int i = 0; i <= n; ++i)
        for (int k = 0; k <= n; ++k) {
            const QualityPair q{i / double(n), k / double(n)};
            if (kind == ScenarioKind::unmatched && !q.ordered())
                continue;
            f(q);
        }
}

std::string at(const QualityPair &q) {
    std::ostringstream os;
    os << "(beta=" << q.beta << ", alpha=" << q.alpha << ")";
    return os.str();
}

CheckResult power_identity(ScenarioKind kind) {
    CheckResult r{"power-identity/" + std::string(to_string(kind)), true, "all slots telescope to P"};
    for_grid(kind, [&](const QualityPair &q) {
        for (const auto &[d, s] : descriptors_at(q, kind))
            for (Subband b : kSubbands)
                if (r.passed && !slot_power_identity(d, b)) {
                    r.passed = false;
                    r.detail = d.name + " slot " + std::string(to_string(b)) + " at " + at(q);
                }
    });
    return r;
}

CheckResult achievability(ScenarioKind kind) {
    CheckResult r{"achievability/" + std::string(to_string(kind)), true, ""};
    double worst = INFINITY;
    for_grid(kind, [&](const QualityPair &q) {
        for (const auto &[d, s] : descriptors_at(q, kind)) {
            try {
                worst = std::min(worst, static_achievability_check(d).min_margin());
            } catch (const Error &e) {
                if (r.passed)
                    r.detail = std::string(e.what()) + " at " + at(q);
                r.passed = false;
            }
        }
    });
    if (r.passed) {
        std::ostringstream os;
        os << "min margin " << (std::abs(worst) <= kMarginTolerance ? 0.0 : worst);
        r.detail = os.str();
    }
    return r;
}

CheckResult analytic_agreement(ScenarioKind kind) {
    CheckResult r{"analytic-sum-dof/" + std::string(to_string(kind)), true, "descriptors match closed forms"};
    for_grid(kind, [&](const QualityPair &q) {
        for (const auto &[d, s] : descriptors_at(q, kind)) {
            const double diff = std::abs(descriptor_sum_dof(d) - analytic_sum_dof(s, q, kind));
            if (r.passed && diff > 1e-12) {
                r.passed = false;
                r.detail = d.name + " differs by " + std::to_string(diff) + " at " + at(q);
            }
        }
    });
    return r;
}

CheckResult composition(ScenarioKind kind) {
    CheckResult r{"composition-identity/" + std::string(to_string(kind)), true, "200 random qualities"};
    std::mt19937_64 rng(20130902);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int t = 0; t < 200 && r.passed; ++t) {
        QualityPair q{u(rng), u(rng)};
        if (kind == ScenarioKind::unmatched && !q.ordered())
            q = q.swapped();
        const DofRegion composed = kind == ScenarioKind::unmatched ? compose_unmatched(q) : compose_matched(q);
        if (!region_equal(composed, outer_bound(q), 1e-9)) {
            r.passed = false;
            r.detail = "mismatch at " + at(q);
        }
    }
    return r;
}

CheckResult certificate(ScenarioKind kind) {
    const double guarantee = kind == ScenarioKind::unmatched ? 0.8 : 2.0 / 3.0;
    const MinRatio mr = min_ratio(kind, 0.005);
    std::ostringstream os;
    os.precision(6);
    os << "min_ratio " << std::fixed << mr.ratio << " (guarantee " << guarantee << ", "
       << mr.argmin.size() << " argmin cells";
    if (!mr.argmin.empty())
        os << ", first " << at(mr.argmin.front());
    os << ")";
    return {"min-ratio/" + std::string(to_string(kind)), mr.ratio >= guarantee - 1e-9, os.str()};
}

} // namespace

std::vector<CheckResult> run_verification(std::optional<ScenarioKind> only) {
    std::vector<CheckResult> out;
    for (ScenarioKind kind : {ScenarioKind::unmatched, ScenarioKind::matched}) {
        if (only && *only != kind)
            continue;
        out.push_back(power_identity(kind));
        out.push_back(achievability(kind));
        out.push_back(analytic_agreement(kind));
        out.push_back(composition(kind));
        out.push_back(certificate(kind));
    }
    return out;
}

} // namespace misobc
