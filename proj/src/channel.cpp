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

#include "misobc/channel.hpp"

#include "misobc/error.hpp"
#include "misobc/stats.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace misobc {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

void check_exponent(double a) {
    if (!(a >= 0.0 && a <= 1.0))
        throw Error(Errc::invalid_exponent, "quality exponent " + std::to_string(a) + " outside [0,1]");
}

ComplexVec2 draw_cn(std::normal_distribution<double> &nd, Rng &rng, double variance) {
    const double s = std::sqrt(variance / 2.0);
    ComplexVec2 v;
    for (auto &c : v.x) {
        const double re = nd(rng);
        const double im = nd(rng);
        c = {s * re, s * im};
    }
    return v;
}

} // namespace

std::string_view to_string(User u) { return u == User::one ? "user1" : "user2"; }
std::string_view to_string(Subband s) { return s == Subband::A ? "A" : "B"; }
std::string_view to_string(ScenarioKind k) {
    return k == ScenarioKind::unmatched ? "unmatched" : "matched";
}

ScenarioKind parse_scenario(std::string_view name) {
    if (name == "unmatched")
        return ScenarioKind::unmatched;
    if (name == "matched")
        return ScenarioKind::matched;
    throw Error(Errc::invalid_argument, "unknown scenario '" + std::string(name) + "'");
}

QualityPair QualityPair::make(double beta, double alpha) {
    if (!(beta >= 0.0 && beta <= 1.0 && alpha >= 0.0 && alpha <= 1.0))
        throw Error(Errc::invalid_quality, "beta and alpha must lie in [0,1]");
    return {beta, alpha};
}

const QualityPair &QualityPair::require_ordered() const {
    if (!ordered())
        throw Error(Errc::invalid_quality, "unmatched CSIT requires beta >= alpha");
    return *this;
}

double quality(ScenarioKind kind, const QualityPair &q, User user, Subband band) {
    if (kind == ScenarioKind::matched)
        return band == Subband::A ? q.beta : q.alpha;
    const bool strong = (user == User::one) == (band == Subband::A);
    return strong ? q.beta : q.alpha;
}

SnrPoint SnrPoint::linear(double p) {
    if (!(p > 1.0) || !std::isfinite(p))
        throw Error(Errc::invalid_snr, "SNR must be finite and > 1 (got " + std::to_string(p) + ")");
    return SnrPoint(p);
}

SnrPoint SnrPoint::from_db(double db) { return linear(std::pow(10.0, db / 10.0)); }

double SnrPoint::db() const { return 10.0 * std::log10(p_); }
double SnrPoint::log2p() const { return std::log2(p_); }

double ComplexVec2::norm() const { return std::sqrt(norm2()); }

Rng substream(std::uint64_t seed, std::uint64_t index) {
    return Rng(splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632BE59BD9B4E019ULL)));
}

double error_variance(double a, SnrPoint p) {
    check_exponent(a);
    return std::pow(p.p(), -a);
}

ChannelSample sample_pair(Rng &rng, double a, SnrPoint p) {
    const double sigma2 = error_variance(a, p);
    std::normal_distribution<double> nd(0.0, 1.0);
    ChannelSample s;
    s.estimate = draw_cn(nd, rng, 1.0 - sigma2);
    s.error = draw_cn(nd, rng, sigma2);
    s.actual = s.estimate + s.error;
    return s;
}

ChannelRealization sample_realization(Rng &rng, const QualityPair &q, ScenarioKind kind,
                                      SnrPoint p) {
    ChannelRealization r;
    for (User u : kUsers)
        for (Subband b : kSubbands)
            r.at(u, b) = sample_pair(rng, quality(kind, q, u, b), p);
    return r;
}

ComplexVec2 zf_direction(const ComplexVec2 &v) {
    const double n = v.norm();
    if (!(n > kDirectionTolerance))
        throw Error(Errc::degenerate_direction, "cannot zero-force against a near-zero vector");
    return {{-std::conj(v[1]) / n, std::conj(v[0]) / n}};
}

ComplexVec2 unit_direction(const ComplexVec2 &v) {
    const double n = v.norm();
    if (!(n > kDirectionTolerance))
        throw Error(Errc::degenerate_direction, "cannot normalize a near-zero vector");
    return (1.0 / n) * v;
}

double measure_error_exponent(double a, std::span<const SnrPoint> ladder, std::size_t trials,
                              std::uint64_t seed) {
    check_exponent(a);
    if (trials == 0)
        throw Error(Errc::empty_sample, "trials must be >= 1");
    if (ladder.size() < 2)
        throw Error(Errc::invalid_ladder, "need at least two SNR points");
    for (std::size_t i = 1; i < ladder.size(); ++i)
        if (!(ladder[i].p() > ladder[i - 1].p()))
            throw Error(Errc::invalid_ladder, "SNR ladder must be strictly ascending");

    std::vector<double> x, y, sq(trials);
    for (const SnrPoint &p : ladder) {
        for (std::size_t t = 0; t < trials; ++t) {
            Rng rng = substream(seed, t);
            sq[t] = sample_pair(rng, a, p).error.norm2();
        }
        const double mean = pairwise_sum(sq) / static_cast<double>(trials);
        x.push_back(p.log2p());
        y.push_back(-std::log2(mean / 2.0));
    }
    return fit_line(x, y).slope;
}

} // namespace misobc
