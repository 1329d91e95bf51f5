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

#include "misobc/linkmc.hpp"

#include "misobc/error.hpp"
#include "misobc/stats.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <exception>
#include <limits>
#include <thread>

namespace misobc {

namespace {

bool cancelled(const DecodeStep &step, const std::string &id) {
    return std::find(step.cancel.begin(), step.cancel.end(), id) != step.cancel.end();
}

InstantRates sic_rates_unchecked(const SchemeDescriptor &d, const ChannelRealization &r, SnrPoint p) {
    InstantRates out;
    for (const auto &step : d.decode_plan) {
        double signal = 0.0, interference = 0.0;
        for (const auto &s : d.symbols) {
            if (s.id == step.symbol)
                signal = received_power(r, s, step.slot, step.user, p);
            else if (!cancelled(step, s.id))
                interference += received_power(r, s, step.slot, step.user, p);
        }
        out.per_user[index(step.user)][step.symbol] = std::log2(1.0 + signal / (1.0 + interference));
    }
    return out;
}

const char *method_name(const SlopeEstimate &s) { return s.used_top_pair ? "top-pair" : "least-squares"; }

nlohmann::json slope_json(const SlopeEstimate &s) {
    return {{"least_squares", s.least_squares},
            {"top_pair", s.top_pair},
            {"residual", s.residual},
            {"method", method_name(s)}};
}

SlopeEstimate slope_from_json(const nlohmann::json &j) {
    SlopeEstimate s;
    s.least_squares = j.at("least_squares").get<double>();
    s.top_pair = j.at("top_pair").get<double>();
    s.residual = j.at("residual").get<double>();
    s.used_top_pair = j.at("method").get<std::string>() == "top-pair";
    return s;
}

nlohmann::json series_json(const std::vector<double> &ladder, const std::vector<double> &v) {
    nlohmann::json j = nlohmann::json::object();
    for (std::size_t i = 0; i < ladder.size(); ++i)
        j[snr_key(ladder[i])] = v[i];
    return j;
}

std::vector<double> series_from_json(const std::vector<double> &ladder, const nlohmann::json &j) {
    std::vector<double> v;
    for (double db : ladder)
        v.push_back(j.at(snr_key(db)).get<double>());
    return v;
}

} // namespace

ComplexVec2 precoder_vector(const Precoder &pc, const ChannelRealization &r) {
    switch (pc.kind) {
    case Precoder::Kind::basis_e1: return {{cplx(1.0, 0.0), cplx(0.0, 0.0)}};
    case Precoder::Kind::zf_orth: return zf_direction(r.at(pc.user, pc.band).estimate);
    case Precoder::Kind::aligned: return unit_direction(r.at(pc.user, pc.band).estimate);
    }
    throw Error(Errc::invalid_argument, "unknown precoder kind");
}

double received_power(const ChannelRealization &r, const Transmission &t, User user, SnrPoint p) {
    const double power = t.power.value(p.p());
    if (!(power > 0.0))
        return 0.0;
    const ComplexVec2 w = precoder_vector(t.precoder, r);
    return std::norm(inner(r.at(user, t.slot).actual, w)) * power;
}

double received_power(const ChannelRealization &r, const SymbolSpec &s, Subband slot, User user,
                      SnrPoint p) {
    const Transmission *t = s.in_slot(slot);
    return t == nullptr ? 0.0 : received_power(r, *t, user, p);
}

InstantRates sic_rates(const SchemeDescriptor &d, const ChannelRealization &r, SnrPoint p) {
    validate_plan(d);
    return sic_rates_unchecked(d, r, p);
}

RateSummary summarize(const SchemeDescriptor &d, const InstantRates &rates) {
    RateSummary out;
    const double total = d.total_duration();
    for (const auto &s : d.symbols) {
        double delivered = std::numeric_limits<double>::infinity();
        for (User u : kUsers)
            if (auto it = rates.of(u).find(s.id); it != rates.of(u).end())
                delivered = std::min(delivered, it->second);
        if (!std::isfinite(delivered))
            throw Error(Errc::malformed_plan, "no rate recorded for " + s.id);
        out.symbol[s.id] = delivered;
        const double w = delivered * d.slot(s.primary_slot())->duration / total;
        out.user1 += w * s.user1_share;
        out.user2 += w * (1.0 - s.user1_share);
        out.sum += w;
    }
    return out;
}

RateSummary ergodic_rates(const SchemeDescriptor &d, const QualityPair &q, ScenarioKind kind,
                          SnrPoint p, const McOptions &opt) {
    if (opt.trials == 0)
        throw Error(Errc::empty_sample, "trials must be >= 1");
    validate_plan(d);

    const std::size_t nsym = d.symbols.size();
    const std::size_t width = nsym + 3;
    std::vector<double> table(opt.trials * width);

    auto run_range = [&](std::size_t begin, std::size_t end) {
        for (std::size_t t = begin; t < end; ++t) {
            Rng rng = substream(opt.seed, t);
            const ChannelRealization r = sample_realization(rng, q, kind, p);
            const RateSummary s = summarize(d, sic_rates_unchecked(d, r, p));
            double *row = &table[t * width];
            for (std::size_t k = 0; k < nsym; ++k)
                row[k] = s.symbol.at(d.symbols[k].id);
            row[nsym] = s.user1;
            row[nsym + 1] = s.user2;
            row[nsym + 2] = s.sum;
        }
    };

    const std::size_t workers = std::clamp<std::size_t>(opt.workers, 1, opt.trials);
    if (workers == 1) {
        run_range(0, opt.trials);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(workers);
        const std::size_t chunk = (opt.trials + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t b = std::min(opt.trials, w * chunk);
            const std::size_t e = std::min(opt.trials, b + chunk);
            pool.emplace_back([&, w, b, e] {
                try {
                    run_range(b, e);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto &th : pool)
            th.join();
        for (auto &e : errors)
            if (e)
                std::rethrow_exception(e);
    }

    std::vector<double> column(opt.trials);
    auto mean_of = [&](std::size_t k) {
        for (std::size_t t = 0; t < opt.trials; ++t)
            column[t] = table[t * width + k];
        return pairwise_sum(column) / static_cast<double>(opt.trials);
    };
    RateSummary out;
    for (std::size_t k = 0; k < nsym; ++k)
        out.symbol[d.symbols[k].id] = mean_of(k);
    out.user1 = mean_of(nsym);
    out.user2 = mean_of(nsym + 1);
    out.sum = mean_of(nsym + 2);
    return out;
}

SlopeEstimate estimate_slope(std::span<const double> log2p, std::span<const double> rates) {
    const LineFit fit = fit_line(log2p, rates);
    const std::size_t n = log2p.size();
    SlopeEstimate s;
    s.least_squares = fit.slope;
    s.top_pair = (rates[n - 1] - rates[n - 2]) / (log2p[n - 1] - log2p[n - 2]);
    s.residual = fit.rms_residual;
    s.used_top_pair = fit.rms_residual > kResidualThreshold;
    return s;
}

SimReport estimate_dof(const SchemeDescriptor &d, const QualityPair &q, ScenarioKind kind,
                       std::span<const SnrPoint> ladder, const McOptions &opt) {
    if (ladder.size() < 3)
        throw Error(Errc::invalid_ladder, "DoF estimation needs at least three SNR points");
    for (std::size_t i = 1; i < ladder.size(); ++i)
        if (!(ladder[i].p() > ladder[i - 1].p()))
            throw Error(Errc::invalid_ladder, "SNR ladder must be strictly ascending");

    SimReport rep;
    rep.scheme = d.name;
    rep.q = q;
    rep.scenario = kind;
    rep.seed = opt.seed;
    rep.trials = opt.trials;

    std::vector<double> x;
    for (const SnrPoint &p : ladder) {
        const RateSummary s = ergodic_rates(d, q, kind, p, opt);
        rep.ladder_db.push_back(p.db());
        x.push_back(p.log2p());
        for (const auto &[id, rate] : s.symbol)
            rep.symbol_rates[id].push_back(rate);
        rep.user1_rates.push_back(s.user1);
        rep.user2_rates.push_back(s.user2);
        rep.sum_rates.push_back(s.sum);
    }
    rep.user1 = estimate_slope(x, rep.user1_rates);
    rep.user2 = estimate_slope(x, rep.user2_rates);
    rep.sum = estimate_slope(x, rep.sum_rates);
    try {
        rep.analytic_sum_dof = analytic_sum_dof(analytic_strategy_for(d.name), q, kind);
    } catch (const Error &) {
        rep.analytic_sum_dof.reset();
    }
    return rep;
}

std::string snr_key(double db) {
    const double rounded = std::round(db * 1e9) / 1e9;
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, rounded);
    return std::string(buf, end);
}

nlohmann::json to_json(const SimReport &r) {
    nlohmann::json j;
    j["scheme"] = r.scheme;
    j["beta"] = r.q.beta;
    j["alpha"] = r.q.alpha;
    j["scenario"] = to_string(r.scenario);
    j["seed"] = r.seed;
    j["trials"] = r.trials;
    j["ladder_db"] = r.ladder_db;
    j["rates"] = nlohmann::json::object();
    for (const auto &[id, v] : r.symbol_rates)
        j["rates"][id] = series_json(r.ladder_db, v);
    j["user_rates"] = {{"user1", series_json(r.ladder_db, r.user1_rates)},
                       {"user2", series_json(r.ladder_db, r.user2_rates)},
                       {"sum", series_json(r.ladder_db, r.sum_rates)}};
    j["dof"] = {{"user1", r.user1.value()},
                {"user2", r.user2.value()},
                {"sum", r.sum.value()},
                {"residual", r.sum.residual},
                {"fits", {{"user1", slope_json(r.user1)},
                          {"user2", slope_json(r.user2)},
                          {"sum", slope_json(r.sum)}}}};
    j["analytic_sum_dof"] = r.analytic_sum_dof ? nlohmann::json(*r.analytic_sum_dof) : nlohmann::json(nullptr);
    return j;
}

SimReport sim_report_from_json(const nlohmann::json &j) {
    SimReport r;
    r.scheme = j.at("scheme").get<std::string>();
    r.q = {j.at("beta").get<double>(), j.at("alpha").get<double>()};
    r.scenario = parse_scenario(j.at("scenario").get<std::string>());
    r.seed = j.at("seed").get<std::uint64_t>();
    r.trials = j.at("trials").get<std::size_t>();
    r.ladder_db = j.at("ladder_db").get<std::vector<double>>();
    for (const auto &[id, series] : j.at("rates").items())
        r.symbol_rates[id] = series_from_json(r.ladder_db, series);
    const auto &ur = j.at("user_rates");
    r.user1_rates = series_from_json(r.ladder_db, ur.at("user1"));
    r.user2_rates = series_from_json(r.ladder_db, ur.at("user2"));
    r.sum_rates = series_from_json(r.ladder_db, ur.at("sum"));
    const auto &fits = j.at("dof").at("fits");
    r.user1 = slope_from_json(fits.at("user1"));
    r.user2 = slope_from_json(fits.at("user2"));
    r.sum = slope_from_json(fits.at("sum"));
    if (!j.at("analytic_sum_dof").is_null())
        r.analytic_sum_dof = j.at("analytic_sum_dof").get<double>();
    return r;
}

} // namespace misobc
