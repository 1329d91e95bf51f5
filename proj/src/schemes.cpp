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

#include "misobc/schemes.hpp"

#include "misobc/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <utility>

namespace misobc {

namespace {

const Rational kHalf{1, 2};

QualityPair checked(const QualityPair &q) { return QualityPair::make(q.beta, q.alpha); }

SymbolSpec symbol(std::string id, Owner owner, double rate, std::vector<Transmission> tx,
                  double user1_share = 0.0) {
    SymbolSpec s;
    s.id = std::move(id);
    s.owner = owner;
    s.rate_exponent = rate;
    s.transmissions = std::move(tx);
    s.user1_share = owner == Owner::user1 ? 1.0 : owner == Owner::user2 ? 0.0 : user1_share;
    return s;
}

struct PlannedDecode {
    User user;
    Subband slot;
    const char *symbol;
};

// Builds the decode plan from (user, slot, symbol) triples, skipping symbols
// the descriptor dropped. Each step cancels everything the same user decoded
// before that is present in the step's slot.
void fill_plan(SchemeDescriptor &d, std::initializer_list<PlannedDecode> order) {
    std::map<User, std::vector<std::string>> known;
    for (const auto &p : order) {
        const SymbolSpec *s = d.find(p.symbol);
        if (s == nullptr)
            continue;
        DecodeStep step{p.user, p.slot, p.symbol, {}};
        for (const auto &k : known[p.user])
            if (d.find(k)->in_slot(p.slot) != nullptr)
                step.cancel.push_back(k);
        d.decode_plan.push_back(std::move(step));
        known[p.user].emplace_back(p.symbol);
    }
}

std::vector<SlotSpec> two_slots() { return {{Subband::A, 1.0}, {Subband::B, 1.0}}; }

std::string step_name(const DecodeStep &s) {
    return std::string(to_string(s.user)) + " decodes " + s.symbol + " in slot " +
           std::string(to_string(s.slot));
}

} // namespace

PowerTerm PowerTerm::single(Rational coeff, double hi) { return {hi, std::nullopt, coeff}; }

PowerTerm PowerTerm::difference(Rational coeff, double hi, double lo) {
    if (!(hi > lo))
        throw Error(Errc::invalid_argument, "power term needs hi > lo");
    return {hi, lo, coeff};
}

double PowerTerm::value(double p) const {
    double v = std::pow(p, hi);
    if (lo)
        v -= std::pow(p, *lo);
    return coeff.to_double() * v;
}

const Transmission *SymbolSpec::in_slot(Subband s) const {
    for (const auto &t : transmissions)
        if (t.slot == s)
            return &t;
    return nullptr;
}

const SymbolSpec *SchemeDescriptor::find(std::string_view id) const {
    for (const auto &s : symbols)
        if (s.id == id)
            return &s;
    return nullptr;
}

const SlotSpec *SchemeDescriptor::slot(Subband id) const {
    for (const auto &s : slots)
        if (s.id == id)
            return &s;
    return nullptr;
}

double SchemeDescriptor::total_duration() const {
    double t = 0.0;
    for (const auto &s : slots)
        t += s.duration;
    return t;
}

std::string_view to_string(Strategy s) {
    switch (s) {
    case Strategy::fdma: return "fdma";
    case Strategy::zfbf: return "zfbf";
    case Strategy::s3: return "s3";
    case Strategy::optimal: return "optimal";
    case Strategy::matched_optimal: return "matched-optimal";
    case Strategy::icc_private: return "icc-private";
    case Strategy::optimal_private: return "optimal-private";
    }
    return "?";
}

Strategy parse_strategy(std::string_view name) {
    for (Strategy s : {Strategy::fdma, Strategy::zfbf, Strategy::s3, Strategy::optimal,
                       Strategy::matched_optimal, Strategy::icc_private, Strategy::optimal_private})
        if (to_string(s) == name)
            return s;
    throw Error(Errc::unsupported_strategy, "unknown strategy '" + std::string(name) + "'");
}

SchemeDescriptor optimal_unmatched_descriptor(const QualityPair &q_in) {
    const QualityPair q = checked(q_in).require_ordered();
    const double b = q.beta, a = q.alpha;

    SchemeDescriptor d;
    d.name = "optimal-unmatched";
    d.scenario = ScenarioKind::unmatched;
    d.q = q;
    d.slots = two_slots();

    using enum Subband;
    if (b < 1.0) {
        d.symbols.push_back(symbol("x_cA", Owner::common, 1.0 - b,
                                   {{A, Precoder::basis_e1(), PowerTerm::difference(1, 1.0, b)}}, 1.0));
        d.symbols.push_back(symbol("x_cB", Owner::common, 1.0 - b,
                                   {{B, Precoder::basis_e1(), PowerTerm::difference(1, 1.0, b)}}, 0.0));
    }
    d.symbols.push_back(symbol("u_A", Owner::user1, a,
                               {{A, Precoder::zf_orth(User::two, A), PowerTerm::single(kHalf, a)}}));
    if (b > a) {
        d.symbols.push_back(
            symbol("u_0", Owner::user1, b - a,
                   {{A, Precoder::aligned(User::two, A), PowerTerm::difference(kHalf, b, a)},
                    {B, Precoder::aligned(User::one, B), PowerTerm::difference(kHalf, b, a)}}));
    }
    d.symbols.push_back(symbol("v_A", Owner::user2, b,
                               {{A, Precoder::zf_orth(User::one, A), PowerTerm::single(kHalf, b)}}));
    d.symbols.push_back(symbol("v_B", Owner::user2, a,
                               {{B, Precoder::zf_orth(User::one, B), PowerTerm::single(kHalf, a)}}));
    d.symbols.push_back(symbol("u_B", Owner::user1, b,
                               {{B, Precoder::zf_orth(User::two, B), PowerTerm::single(kHalf, b)}}));

    fill_plan(d, {{User::one, A, "x_cA"},
                  {User::one, A, "u_0"},
                  {User::one, A, "u_A"},
                  {User::one, B, "x_cB"},
                  {User::one, B, "u_B"},
                  {User::two, B, "x_cB"},
                  {User::two, B, "u_0"},
                  {User::two, B, "v_B"},
                  {User::two, A, "x_cA"},
                  {User::two, A, "v_A"}});
    return d;
}

SchemeDescriptor matched_descriptor(const QualityPair &q_in) {
    const QualityPair q = checked(q_in);

    SchemeDescriptor d;
    d.name = "matched-optimal";
    d.scenario = ScenarioKind::matched;
    d.q = q;
    d.slots = two_slots();

    for (Subband s : kSubbands) {
        const double j = s == Subband::A ? q.beta : q.alpha;
        const std::string tag(to_string(s));
        const double share = s == Subband::A ? 1.0 : 0.0;
        if (j == 0.0) {
            // Useless CSIT: the slot degenerates to a single full-power common stream.
            d.symbols.push_back(symbol("x_c" + tag, Owner::common, 1.0,
                                       {{s, Precoder::basis_e1(), PowerTerm::single(1, 1.0)}}, share));
            continue;
        }
        if (j < 1.0)
            d.symbols.push_back(symbol("x_c" + tag, Owner::common, 1.0 - j,
                                       {{s, Precoder::basis_e1(), PowerTerm::difference(1, 1.0, j)}},
                                       share));
        d.symbols.push_back(symbol("u_" + tag, Owner::user1, j,
                                   {{s, Precoder::zf_orth(User::two, s), PowerTerm::single(kHalf, j)}}));
        d.symbols.push_back(symbol("v_" + tag, Owner::user2, j,
                                   {{s, Precoder::zf_orth(User::one, s), PowerTerm::single(kHalf, j)}}));
    }

    using enum Subband;
    fill_plan(d, {{User::one, A, "x_cA"},
                  {User::one, A, "u_A"},
                  {User::one, B, "x_cB"},
                  {User::one, B, "u_B"},
                  {User::two, A, "x_cA"},
                  {User::two, A, "v_A"},
                  {User::two, B, "x_cB"},
                  {User::two, B, "v_B"}});
    return d;
}

SchemeDescriptor fdma_descriptor() {
    SchemeDescriptor d;
    d.name = "fdma";
    d.scenario = ScenarioKind::unmatched;
    d.q = {0.0, 0.0};
    d.slots = two_slots();
    using enum Subband;
    d.symbols.push_back(
        symbol("x_A", Owner::user1, 1.0, {{A, Precoder::basis_e1(), PowerTerm::single(1, 1.0)}}));
    d.symbols.push_back(
        symbol("x_B", Owner::user2, 1.0, {{B, Precoder::basis_e1(), PowerTerm::single(1, 1.0)}}));
    fill_plan(d, {{User::one, A, "x_A"}, {User::two, B, "x_B"}});
    return d;
}

SchemeDescriptor zfbf_descriptor(const QualityPair &q_in, ScenarioKind kind) {
    QualityPair q = checked(q_in);
    if (kind == ScenarioKind::unmatched)
        q.require_ordered();

    SchemeDescriptor d;
    d.name = "zfbf";
    d.scenario = kind;
    d.q = q;
    d.slots = two_slots();
    for (Subband s : kSubbands) {
        const std::string tag(to_string(s));
        // Each stream survives the other stream's leakage P * P^-a, a being
        // the quality of the receiver's own estimate.
        d.symbols.push_back(symbol("u_" + tag, Owner::user1, quality(kind, q, User::one, s),
                                   {{s, Precoder::zf_orth(User::two, s), PowerTerm::single(kHalf, 1.0)}}));
        d.symbols.push_back(symbol("v_" + tag, Owner::user2, quality(kind, q, User::two, s),
                                   {{s, Precoder::zf_orth(User::one, s), PowerTerm::single(kHalf, 1.0)}}));
    }
    using enum Subband;
    fill_plan(d, {{User::one, A, "u_A"},
                  {User::one, B, "u_B"},
                  {User::two, A, "v_A"},
                  {User::two, B, "v_B"}});
    return d;
}

SchemeDescriptor s3_descriptor(const QualityPair &q_in, ScenarioKind kind) {
    if (kind != ScenarioKind::unmatched)
        throw Error(Errc::unsupported_strategy, "s3 needs alternating (unmatched) CSIT");
    const QualityPair q = checked(q_in).require_ordered();

    SchemeDescriptor d;
    d.name = "s3";
    d.scenario = kind;
    d.q = q;
    d.slots = two_slots();
    using enum Subband;
    d.symbols.push_back(symbol("u_0", Owner::user1, q.beta,
                               {{A, Precoder::aligned(User::two, A), PowerTerm::single(kHalf, 1.0)},
                                {B, Precoder::aligned(User::one, B), PowerTerm::single(kHalf, 1.0)}}));
    d.symbols.push_back(symbol("v_A", Owner::user2, 1.0,
                               {{A, Precoder::zf_orth(User::one, A), PowerTerm::single(kHalf, 1.0)}}));
    d.symbols.push_back(symbol("u_B", Owner::user1, 1.0,
                               {{B, Precoder::zf_orth(User::two, B), PowerTerm::single(kHalf, 1.0)}}));
    fill_plan(d, {{User::one, A, "u_0"},
                  {User::one, B, "u_B"},
                  {User::two, B, "u_0"},
                  {User::two, A, "v_A"}});
    return d;
}

SchemeDescriptor descriptor_by_name(std::string_view scheme, const QualityPair &q,
                                    ScenarioKind kind) {
    if (scheme == "optimal-unmatched") {
        if (kind != ScenarioKind::unmatched)
            throw Error(Errc::unsupported_strategy, "optimal-unmatched needs the unmatched scenario");
        return optimal_unmatched_descriptor(q);
    }
    if (scheme == "matched-optimal") {
        if (kind != ScenarioKind::matched)
            throw Error(Errc::unsupported_strategy, "matched-optimal needs the matched scenario");
        return matched_descriptor(q);
    }
    if (scheme == "fdma")
        return fdma_descriptor();
    if (scheme == "zfbf")
        return zfbf_descriptor(q, kind);
    if (scheme == "s3")
        return s3_descriptor(q, kind);
    throw Error(Errc::unsupported_strategy, "unknown scheme '" + std::string(scheme) + "'");
}

Strategy analytic_strategy_for(std::string_view scheme) {
    if (scheme == "optimal-unmatched")
        return Strategy::optimal;
    if (scheme == "matched-optimal")
        return Strategy::matched_optimal;
    return parse_strategy(scheme);
}

SchemeDescriptor with_common_split(SchemeDescriptor d, double slot_a_user1, double slot_b_user1) {
    for (double s : {slot_a_user1, slot_b_user1})
        if (!(s >= 0.0 && s <= 1.0))
            throw Error(Errc::invalid_argument, "common split must lie in [0,1]");
    for (auto &s : d.symbols)
        if (s.owner == Owner::common)
            s.user1_share = s.primary_slot() == Subband::A ? slot_a_user1 : slot_b_user1;
    return d;
}

double analytic_sum_dof(Strategy s, const QualityPair &q_in, ScenarioKind kind) {
    QualityPair q = checked(q_in);
    if (kind == ScenarioKind::unmatched)
        q.require_ordered();
    const double b = q.beta, a = q.alpha;
    switch (s) {
    case Strategy::fdma: return 1.0;
    case Strategy::zfbf: return b + a;
    case Strategy::optimal:
    case Strategy::matched_optimal: return 1.0 + (b + a) / 2.0;
    case Strategy::s3:
    case Strategy::icc_private:
    case Strategy::optimal_private:
        if (kind != ScenarioKind::unmatched)
            throw Error(Errc::unsupported_strategy,
                        std::string(to_string(s)) + " is defined for unmatched CSIT only");
        if (s == Strategy::s3)
            return 1.0 + b / 2.0;
        if (b == 0.0)
            throw Error(Errc::undefined_ratio, "private-phase ratio is 0/0 at beta = 0");
        if (s == Strategy::icc_private)
            return (2 * b + 2 * a + 2 * (b - a)) / (3 * b - a);
        return (2 * b + 2 * a + (b - a)) / (2 * b);
    }
    throw Error(Errc::unsupported_strategy, "unhandled strategy");
}

Rational private_phase_ratio(Strategy s, Rational beta, Rational alpha) {
    if (beta < Rational(0) || beta > Rational(1) || alpha < Rational(0) || alpha > beta)
        throw Error(Errc::invalid_quality, "need 0 <= alpha <= beta <= 1");
    if (beta == Rational(0))
        throw Error(Errc::undefined_ratio, "private-phase ratio is 0/0 at beta = 0");
    const Rational two{2}, three{3};
    if (s == Strategy::icc_private)
        return (two * beta + two * alpha + two * (beta - alpha)) / (three * beta - alpha);
    if (s == Strategy::optimal_private)
        return (two * beta + two * alpha + (beta - alpha)) / (two * beta);
    throw Error(Errc::unsupported_strategy, "not a private-phase diagnostic");
}

void validate_plan(const SchemeDescriptor &d) {
    if (d.slots.empty() || !(d.total_duration() > 0.0))
        throw Error(Errc::malformed_plan, d.name + ": total duration must be positive");
    for (const auto &sl : d.slots)
        if (!(sl.duration >= 0.0))
            throw Error(Errc::malformed_plan, d.name + ": negative slot duration");

    std::set<std::string> ids;
    for (const auto &s : d.symbols) {
        if (!ids.insert(s.id).second)
            throw Error(Errc::malformed_plan, d.name + ": duplicate symbol " + s.id);
        if (s.transmissions.empty())
            throw Error(Errc::malformed_plan, d.name + ": symbol " + s.id + " is never transmitted");
        for (const auto &t : s.transmissions)
            if (d.slot(t.slot) == nullptr)
                throw Error(Errc::malformed_plan, d.name + ": symbol " + s.id + " uses an unknown slot");
    }

    std::map<User, std::set<std::string>> decoded;
    for (const auto &step : d.decode_plan) {
        const SymbolSpec *s = d.find(step.symbol);
        if (s == nullptr)
            throw Error(Errc::malformed_plan, d.name + ": plan references unknown symbol " + step.symbol);
        if (s->in_slot(step.slot) == nullptr)
            throw Error(Errc::malformed_plan, d.name + ": " + step_name(step) + " but it is not sent there");
        for (const auto &c : step.cancel)
            if (!decoded[step.user].contains(c))
                throw Error(Errc::malformed_plan,
                            d.name + ": " + step_name(step) + " cancels " + c + " before knowing it");
        decoded[step.user].insert(step.symbol);
    }
    for (const auto &s : d.symbols)
        if (!decoded[User::one].contains(s.id) && !decoded[User::two].contains(s.id))
            throw Error(Errc::malformed_plan, d.name + ": nobody decodes " + s.id);
}

bool slot_power_identity(const SchemeDescriptor &d, Subband slot) {
    std::map<double, Rational> poly;
    for (const auto &s : d.symbols)
        for (const auto &t : s.transmissions) {
            if (t.slot != slot)
                continue;
            poly[t.power.hi] += t.power.coeff;
            if (t.power.lo)
                poly[*t.power.lo] -= t.power.coeff;
        }
    std::erase_if(poly, [](const auto &kv) { return kv.second == Rational(0); });
    return poly == std::map<double, Rational>{{1.0, Rational(1)}};
}

double AchievabilityReport::min_margin() const {
    double m = std::numeric_limits<double>::infinity();
    for (const auto &s : steps)
        m = std::min(m, s.margin);
    return m;
}

double received_exponent(const SchemeDescriptor &d, const Transmission &t, User user) {
    if (t.power.lo && *t.power.lo >= t.power.hi)
        return -std::numeric_limits<double>::infinity();
    double e = t.power.hi;
    if (t.precoder.kind == Precoder::Kind::zf_orth && t.precoder.user == user && t.precoder.band == t.slot)
        e -= quality(d.scenario, d.q, user, t.slot);
    return e;
}

AchievabilityReport static_achievability_check(const SchemeDescriptor &d) {
    validate_plan(d);
    AchievabilityReport report;
    for (const auto &step : d.decode_plan) {
        const SymbolSpec &target = *d.find(step.symbol);
        const double signal = received_exponent(d, *target.in_slot(step.slot), step.user);
        double interference = -std::numeric_limits<double>::infinity();
        for (const auto &s : d.symbols) {
            if (s.id == step.symbol ||
                std::find(step.cancel.begin(), step.cancel.end(), s.id) != step.cancel.end())
                continue;
            if (const Transmission *t = s.in_slot(step.slot))
                interference = std::max(interference, received_exponent(d, *t, step.user));
        }
        const double floor = std::max(interference, 0.0); // unit-power noise is P^0
        const double margin = signal - floor - target.rate_exponent;
        if (margin < -kMarginTolerance)
            throw Error(Errc::achievability_violation,
                        d.name + ": " + step_name(step) + " has margin " + std::to_string(margin));
        report.steps.push_back(
            {step.user, step.slot, step.symbol, signal, interference, target.rate_exponent, margin});
    }
    return report;
}

double descriptor_sum_dof(const SchemeDescriptor &d) {
    double total = 0.0;
    for (const auto &s : d.symbols)
        total += s.rate_exponent * d.slot(s.primary_slot())->duration;
    return total / d.total_duration();
}

std::array<double, 2> descriptor_user_dof(const SchemeDescriptor &d) {
    std::array<double, 2> out{0.0, 0.0};
    for (const auto &s : d.symbols) {
        const double w = s.rate_exponent * d.slot(s.primary_slot())->duration;
        out[0] += w * s.user1_share;
        out[1] += w * (1.0 - s.user1_share);
    }
    out[0] /= d.total_duration();
    out[1] /= d.total_duration();
    return out;
}

namespace {

std::string_view to_string(Owner o) {
    switch (o) {
    case Owner::user1: return "user1";
    case Owner::user2: return "user2";
    case Owner::common: return "common";
    }
    return "?";
}

nlohmann::json precoder_json(const Precoder &p) {
    switch (p.kind) {
    case Precoder::Kind::basis_e1: return {{"kind", "basis_e1"}};
    case Precoder::Kind::zf_orth:
        return {{"kind", "zf_orth"}, {"user", to_string(p.user)}, {"subband", to_string(p.band)}};
    case Precoder::Kind::aligned:
        return {{"kind", "aligned"}, {"user", to_string(p.user)}, {"subband", to_string(p.band)}};
    }
    return {};
}

nlohmann::json power_json(const PowerTerm &t) {
    nlohmann::json j{{"coeff", {t.coeff.num(), t.coeff.den()}}, {"hi", t.hi}};
    j["lo"] = t.lo ? nlohmann::json(*t.lo) : nlohmann::json(nullptr);
    return j;
}

} // namespace

nlohmann::json to_json(const SchemeDescriptor &d) {
    nlohmann::json j;
    j["name"] = d.name;
    j["scenario"] = to_string(d.scenario);
    j["beta"] = d.q.beta;
    j["alpha"] = d.q.alpha;
    j["slots"] = nlohmann::json::array();
    for (const auto &s : d.slots)
        j["slots"].push_back({{"id", to_string(s.id)}, {"duration", s.duration}});
    j["symbols"] = nlohmann::json::array();
    for (const auto &s : d.symbols) {
        nlohmann::json tx = nlohmann::json::array();
        for (const auto &t : s.transmissions)
            tx.push_back({{"slot", to_string(t.slot)},
                          {"precoder", precoder_json(t.precoder)},
                          {"power", power_json(t.power)}});
        j["symbols"].push_back({{"id", s.id},
                                {"owner", to_string(s.owner)},
                                {"rate_exponent", s.rate_exponent},
                                {"user1_share", s.user1_share},
                                {"transmissions", std::move(tx)}});
    }
    j["decode_plan"] = nlohmann::json::array();
    for (const auto &st : d.decode_plan)
        j["decode_plan"].push_back({{"user", to_string(st.user)},
                                    {"slot", to_string(st.slot)},
                                    {"symbol", st.symbol},
                                    {"cancel", st.cancel}});
    return j;
}

} // namespace misobc
