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

#ifndef MISOBC_SCHEMES_HPP
#define MISOBC_SCHEMES_HPP

#include "misobc/channel.hpp"
#include "misobc/rational.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace misobc {

enum class Owner : std::uint8_t { user1, user2, common };

struct Precoder {
    enum class Kind : std::uint8_t { basis_e1, zf_orth, aligned };

    Kind kind = Kind::basis_e1;
    // Reference link for zf_orth / aligned; ignored for basis_e1.
    User user = User::one;
    Subband band = Subband::A;

    static Precoder basis_e1() { return {}; }
    static Precoder zf_orth(User u, Subband b) { return {Kind::zf_orth, u, b}; }
    static Precoder aligned(User u, Subband b) { return {Kind::aligned, u, b}; }

    friend bool operator==(const Precoder &, const Precoder &) = default;
};

/// coeff * (P^hi - P^lo), or coeff * P^hi when lo is empty.
struct PowerTerm {
    double hi = 1.0;
    std::optional<double> lo;
    Rational coeff{1};

    static PowerTerm single(Rational coeff, double hi);
    /// Requires hi > lo.
    static PowerTerm difference(Rational coeff, double hi, double lo);

    double value(double p) const;
};

/// One transmit instance of a symbol.
struct Transmission {
    Subband slot = Subband::A;
    Precoder precoder;
    PowerTerm power;
};

struct SymbolSpec {
    std::string id;
    Owner owner = Owner::common;
    // Usually one entry; a payload repeated across slots (u_0) has two.
    std::vector<Transmission> transmissions;
    // Prelog of the symbol's rate per channel use of the slot it is decoded in.
    double rate_exponent = 0.0;
    // Fraction of a common symbol's rate credited to user 1.
    double user1_share = 0.0;

    const Transmission *in_slot(Subband s) const;
    Subband primary_slot() const { return transmissions.front().slot; }
};

struct SlotSpec {
    Subband id = Subband::A;
    double duration = 1.0;
};

struct DecodeStep {
    User user = User::one;
    Subband slot = Subband::A;
    std::string symbol;
    // Symbols already known to this user and removed before decoding.
    std::vector<std::string> cancel;
};

struct SchemeDescriptor {
    std::string name;
    ScenarioKind scenario = ScenarioKind::unmatched;
    QualityPair q;
    std::vector<SlotSpec> slots;
    std::vector<SymbolSpec> symbols;
    std::vector<DecodeStep> decode_plan;

    const SymbolSpec *find(std::string_view id) const;
    const SlotSpec *slot(Subband id) const;
    double total_duration() const;
};

enum class Strategy : std::uint8_t {
    fdma,
    zfbf,
    s3,
    optimal,
    matched_optimal,
    icc_private,
    optimal_private,
};

std::string_view to_string(Strategy s);
Strategy parse_strategy(std::string_view name);

SchemeDescriptor optimal_unmatched_descriptor(const QualityPair &q);
SchemeDescriptor matched_descriptor(const QualityPair &q);
SchemeDescriptor fdma_descriptor();
SchemeDescriptor zfbf_descriptor(const QualityPair &q, ScenarioKind kind);
SchemeDescriptor s3_descriptor(const QualityPair &q, ScenarioKind kind = ScenarioKind::unmatched);

/// Looks up a descriptor by its CLI name: optimal-unmatched, matched-optimal,
/// fdma, zfbf, s3.
SchemeDescriptor descriptor_by_name(std::string_view scheme, const QualityPair &q,
                                    ScenarioKind kind);
/// Strategy whose closed-form sum DoF is the target of the named scheme.
Strategy analytic_strategy_for(std::string_view scheme);

/// Reassigns the common-message split: x_{c,A} and x_{c,B} credit the given
/// fractions of their rate to user 1 and the rest to user 2.
SchemeDescriptor with_common_split(SchemeDescriptor d, double slot_a_user1, double slot_b_user1);

/// Closed-form sum DoF of a strategy. s3 is defined for the unmatched
/// scenario only; the private-phase ratios need beta > 0.
double analytic_sum_dof(Strategy s, const QualityPair &q, ScenarioKind kind);

/// Exact evaluation of the private-phase sum DoF ratios (icc_private,
/// optimal_private) for rational qualities.
Rational private_phase_ratio(Strategy s, Rational beta, Rational alpha);

/// Checks symbol references, slot membership and that every cancel list
/// only names symbols this user decoded earlier. Throws Errc::malformed_plan.
void validate_plan(const SchemeDescriptor &d);

/// Symbolic check that the slot's power terms telescope to exactly P.
bool slot_power_identity(const SchemeDescriptor &d, Subband slot);

struct StepMargin {
    User user;
    Subband slot;
    std::string symbol;
    double signal_exponent;
    double interference_exponent; // -inf when nothing interferes
    double rate_exponent;
    double margin;
};

struct AchievabilityReport {
    std::vector<StepMargin> steps;
    double min_margin() const;
};

inline constexpr double kMarginTolerance = 1e-12;

/// Exponent-ladder achievability check: for every decode step the rate
/// exponent must not exceed signal exponent minus max(interference, noise)
/// exponent. Throws Errc::achievability_violation naming the first bad step.
AchievabilityReport static_achievability_check(const SchemeDescriptor &d);

/// Received-power exponent of a transmission at `user`: the power term's
/// leading exponent, lowered by the user's CSIT quality when the precoder
/// zero-forces against that same user in that subband.
double received_exponent(const SchemeDescriptor &d, const Transmission &t, User user);

/// Duration-weighted rate exponents per channel use.
double descriptor_sum_dof(const SchemeDescriptor &d);
std::array<double, 2> descriptor_user_dof(const SchemeDescriptor &d);

nlohmann::json to_json(const SchemeDescriptor &d);

} // namespace misobc

#endif
