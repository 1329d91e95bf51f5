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

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace misobc;

namespace {

template <typename F> Errc error_code_of(F &&f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    FAIL("expected misobc::Error");
    return Errc::invalid_argument;
}

const cplx I{0.0, 1.0};

} // namespace

TEST_CASE("scenario assignment of quality exponents") {
    const QualityPair q{0.8, 0.5};
    CHECK(quality(ScenarioKind::unmatched, q, User::one, Subband::A) == 0.8);
    CHECK(quality(ScenarioKind::unmatched, q, User::one, Subband::B) == 0.5);
    CHECK(quality(ScenarioKind::unmatched, q, User::two, Subband::A) == 0.5);
    CHECK(quality(ScenarioKind::unmatched, q, User::two, Subband::B) == 0.8);
    for (User u : kUsers) {
        CHECK(quality(ScenarioKind::matched, q, u, Subband::A) == 0.8);
        CHECK(quality(ScenarioKind::matched, q, u, Subband::B) == 0.5);
    }
    CHECK(error_code_of([] { QualityPair::make(1.1, 0.0); }) == Errc::invalid_quality);
    CHECK(error_code_of([] { QualityPair::make(0.5, 0.8).require_ordered(); }) == Errc::invalid_quality);
}

TEST_CASE("error variance scales as p^-a") {
    CHECK(error_variance(1.0, SnrPoint::linear(100.0)) == doctest::Approx(0.01).epsilon(1e-15));
    CHECK(error_variance(0.0, SnrPoint::linear(100.0)) == 1.0);
    CHECK(error_code_of([] { SnrPoint::linear(1.0); }) == Errc::invalid_snr);
    CHECK(error_code_of([] { SnrPoint::from_db(-3.0); }) == Errc::invalid_snr);
    CHECK(error_code_of([] { error_variance(1.5, SnrPoint::linear(10.0)); }) == Errc::invalid_exponent);
}

TEST_CASE("a = 0 gives a zero estimate and zero-forcing on it fails loudly") {
    Rng rng = substream(1, 0);
    const ChannelSample s = sample_pair(rng, 0.0, SnrPoint::linear(100.0));
    CHECK(s.estimate.norm() == 0.0);
    CHECK(s.error.norm() > 0.0);
    CHECK(error_code_of([&] { zf_direction(s.estimate); }) == Errc::degenerate_direction);
    CHECK(error_code_of([&] { unit_direction(s.estimate); }) == Errc::degenerate_direction);
}

TEST_CASE("sampled error power matches 2 sigma^2") {
    const SnrPoint p = SnrPoint::linear(1e4);
    std::vector<double> sq(100000);
    for (std::size_t t = 0; t < sq.size(); ++t) {
        Rng rng = substream(42, t);
        sq[t] = sample_pair(rng, 0.5, p).error.norm2();
    }
    const double mean = pairwise_sum(sq) / static_cast<double>(sq.size());
    CHECK(mean >= 0.0196);
    CHECK(mean <= 0.0204);
}

TEST_CASE("actual channel is the bitwise sum of estimate and error") {
    for (double a : {0.0, 0.3, 1.0})
        for (std::uint64_t t = 0; t < 2000; ++t) {
            Rng rng = substream(9, t);
            const ChannelSample s = sample_pair(rng, a, SnrPoint::from_db(30.0));
            REQUIRE(s.actual == s.estimate + s.error);
        }
}

TEST_CASE("zf_direction explicit cases") {
    const ComplexVec2 w1 = zf_direction({{1.0, 0.0}});
    CHECK(w1[0] == cplx(0.0, 0.0));
    CHECK(w1[1] == cplx(1.0, 0.0));

    const ComplexVec2 w2 = zf_direction({{0.0, 1.0}});
    CHECK(w2[0] == cplx(-1.0, 0.0));
    CHECK(std::abs(w2[1]) == 0.0);

    const ComplexVec2 v{{1.0 / std::sqrt(2.0), I / std::sqrt(2.0)}};
    const ComplexVec2 w3 = zf_direction(v);
    CHECK(std::abs(inner(v, w3)) < 1e-12);
    CHECK(std::abs(w3.norm() - 1.0) < 1e-12);

    CHECK(error_code_of([] { zf_direction({{1e-14, 0.0}}); }) == Errc::degenerate_direction);
}

TEST_CASE("property: zf_direction is orthogonal and unit norm") {
    Rng rng(2024);
    std::normal_distribution<double> nd;
    for (int t = 0; t < 10000; ++t) {
        const ComplexVec2 v{{cplx(nd(rng), nd(rng)), cplx(nd(rng), nd(rng))}};
        const ComplexVec2 w = zf_direction(v);
        REQUIRE(std::abs(inner(v, w)) < 1e-12);
        REQUIRE(std::abs(w.norm() - 1.0) < 1e-12);
    }
}

TEST_CASE("property: ZF residual power equals sigma^2") {
    const SnrPoint p = SnrPoint::linear(1e4);
    // a = 0 leaves no estimate to zero-force against; covered above.
    for (double a : {0.25, 0.5, 1.0}) {
        std::vector<double> leak(100000);
        for (std::size_t t = 0; t < leak.size(); ++t) {
            Rng rng = substream(77, t);
            const ChannelSample s = sample_pair(rng, a, p);
            leak[t] = std::norm(inner(s.actual, zf_direction(s.estimate)));
        }
        const double mean = pairwise_sum(leak) / static_cast<double>(leak.size());
        const double sigma2 = std::pow(p.p(), -a);
        CAPTURE(a);
        CHECK(std::abs(mean / sigma2 - 1.0) < 0.05);
    }
}

TEST_CASE("identical seeds give bit-identical realizations") {
    const QualityPair q{0.8, 0.5};
    for (std::uint64_t t = 0; t < 50; ++t) {
        Rng a = substream(123, t), b = substream(123, t);
        const auto ra = sample_realization(a, q, ScenarioKind::unmatched, SnrPoint::from_db(40));
        const auto rb = sample_realization(b, q, ScenarioKind::unmatched, SnrPoint::from_db(40));
        for (User u : kUsers)
            for (Subband s : kSubbands)
                REQUIRE(ra.at(u, s).actual == rb.at(u, s).actual);
    }
    Rng a = substream(123, 0), b = substream(124, 0);
    CHECK(a() != b());
}

TEST_CASE("measured error exponent") {
    const std::vector<SnrPoint> ladder{SnrPoint::from_db(30), SnrPoint::from_db(40), SnrPoint::from_db(50)};
    CHECK(measure_error_exponent(0.0, ladder, 20000, 3) == doctest::Approx(0.0).epsilon(0.02));
    CHECK(std::abs(measure_error_exponent(0.5, ladder, 20000, 3) - 0.5) < 0.02);
    CHECK(std::abs(measure_error_exponent(1.0, ladder, 20000, 3) - 1.0) < 0.02);
    CHECK(error_code_of([&] { measure_error_exponent(0.5, ladder, 0, 3); }) == Errc::empty_sample);
    CHECK(error_code_of([&] { measure_error_exponent(0.5, std::span(ladder).first(1), 10, 3); }) ==
          Errc::invalid_ladder);
    const std::vector<SnrPoint> descending{ladder[2], ladder[1]};
    CHECK(error_code_of([&] { measure_error_exponent(0.5, descending, 10, 3); }) == Errc::invalid_ladder);
}

TEST_CASE("fit_line and pairwise_sum") {
    const std::vector<double> x{1, 2, 3, 4}, y{3, 5, 7, 9};
    const LineFit f = fit_line(x, y);
    CHECK(f.slope == doctest::Approx(2.0));
    CHECK(f.intercept == doctest::Approx(1.0));
    CHECK(f.rms_residual == doctest::Approx(0.0));
    std::vector<double> ones(1000, 0.1);
    CHECK(pairwise_sum(ones) == doctest::Approx(100.0).epsilon(1e-14));
}
