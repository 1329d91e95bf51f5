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

#ifndef MISOBC_LINKMC_HPP
#define MISOBC_LINKMC_HPP

#include "misobc/channel.hpp"
#include "misobc/schemes.hpp"

#include <json.hpp>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace misobc {

/// Per decoding user: symbol id -> rate in bits per channel use of the slot
/// the symbol was decoded in.
struct InstantRates {
    std::array<std::map<std::string, double>, 2> per_user;

    const std::map<std::string, double> &of(User u) const { return per_user[index(u)]; }
};

/// Unit-norm beamformer for a precoder given the CSIT in `r`.
ComplexVec2 precoder_vector(const Precoder &pc, const ChannelRealization &r);

/// |channel(user, slot)^H w|^2 times the power term at p.
double received_power(const ChannelRealization &r, const Transmission &t, User user, SnrPoint p);
/// Same, for a symbol's transmission in `slot`; 0 when it is not sent there.
double received_power(const ChannelRealization &r, const SymbolSpec &s, Subband slot, User user,
                      SnrPoint p);

/// Walks every decode step: rate = log2(1 + S / (1 + I)) with I summing all
/// same-slot transmissions outside the step's cancel list.
InstantRates sic_rates(const SchemeDescriptor &d, const ChannelRealization &r, SnrPoint p);

/// Rates over both slots reduced to what the scheme delivers.
struct RateSummary {
    // Delivered rate per symbol: the minimum over the users that decode it.
    std::map<std::string, double> symbol;
    // Duration-weighted, per channel use.
    double user1 = 0.0;
    double user2 = 0.0;
    double sum = 0.0;
};

RateSummary summarize(const SchemeDescriptor &d, const InstantRates &rates);

struct McOptions {
    std::size_t trials = 20000;
    std::uint64_t seed = 0;
    unsigned workers = 1;
};

/// Monte Carlo mean of summarize(sic_rates(...)). Trial t always draws its
/// realization from substream(seed, t), and means are pairwise sums in trial
/// order, so the result is bit-identical for any worker count.
RateSummary ergodic_rates(const SchemeDescriptor &d, const QualityPair &q, ScenarioKind kind,
                          SnrPoint p, const McOptions &opt);

struct SlopeEstimate {
    double least_squares = 0.0;
    double top_pair = 0.0;
    double residual = 0.0; // RMS residual of the LS fit, bits per channel use
    bool used_top_pair = false;

    double value() const { return used_top_pair ? top_pair : least_squares; }
};

inline constexpr double kResidualThreshold = 0.02;

/// LS slope of rate vs log2 p; falls back to the two highest SNR points when
/// the residual exceeds kResidualThreshold.
SlopeEstimate estimate_slope(std::span<const double> log2p, std::span<const double> rates);

struct SimReport {
    std::string scheme;
    QualityPair q;
    ScenarioKind scenario = ScenarioKind::unmatched;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::vector<double> ladder_db;
    std::map<std::string, std::vector<double>> symbol_rates; // aligned with ladder_db
    std::vector<double> user1_rates, user2_rates, sum_rates;
    SlopeEstimate user1, user2, sum;
    std::optional<double> analytic_sum_dof;
};

/// Needs >= 3 strictly ascending SNR points.
SimReport estimate_dof(const SchemeDescriptor &d, const QualityPair &q, ScenarioKind kind,
                       std::span<const SnrPoint> ladder, const McOptions &opt);

nlohmann::json to_json(const SimReport &r);
SimReport sim_report_from_json(const nlohmann::json &j);

/// Key used for an SNR in the JSON rate maps ("40", "42.5").
std::string snr_key(double db);

} // namespace misobc

#endif
