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

#include "misobc/cli.hpp"

#include "misobc/error.hpp"
#include "misobc/linkmc.hpp"
#include "misobc/regions.hpp"
#include "misobc/schemes.hpp"
#include "misobc/switcher.hpp"
#include "misobc/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace misobc {

namespace {

int code_for(const Error &e) {
    switch (e.code()) {
    case Errc::io_failure: return exit_code::io_error;
    case Errc::achievability_violation: return exit_code::failed;
    default: return exit_code::bad_args;
    }
}

OutputFormat parse_format(const std::optional<std::string> &f, OutputFormat fallback) {
    if (!f)
        return fallback;
    if (*f == "json")
        return OutputFormat::json;
    if (*f == "csv")
        return OutputFormat::csv;
    if (*f == "gnuplot")
        return OutputFormat::gnuplot;
    throw Error(Errc::invalid_argument, "unknown format '" + *f + "'");
}

QualityPair require_quality(const RunConfig &cfg) {
    if (!cfg.beta || !cfg.alpha)
        throw Error(Errc::invalid_argument, "--beta and --alpha are required");
    return QualityPair::make(*cfg.beta, *cfg.alpha);
}

// Writes the artifact to --out or to `out`. Returns the stream the
// human-readable summary should go to: stdout when the artifact went to a
// file, stderr otherwise.
std::ostream &emit(const RunConfig &cfg, std::ostream &out, std::ostream &err,
                   const std::function<void(std::ostream &)> &write) {
    if (!cfg.out) {
        write(out);
        return err;
    }
    std::ofstream f(*cfg.out, std::ios::binary);
    if (!f)
        throw Error(Errc::io_failure, "cannot open " + *cfg.out + " for writing");
    write(f);
    f.flush();
    if (!f)
        throw Error(Errc::io_failure, "write to " + *cfg.out + " failed");
    return out;
}

template <typename F> int guarded(std::ostream &err, F &&body) {
    try {
        return body();
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return code_for(e);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return exit_code::failed;
    }
}

} // namespace

int cmd_regions(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        const ScenarioKind kind = parse_scenario(cfg.scenario.value_or("unmatched"));
        const QualityPair q = require_quality(cfg);
        if (kind == ScenarioKind::unmatched)
            q.require_ordered();
        const OutputFormat fmt = parse_format(cfg.format, OutputFormat::json);
        if (fmt == OutputFormat::csv)
            throw Error(Errc::invalid_argument, "regions supports --format json or gnuplot");

        const nlohmann::json report = regions_report(q, kind);
        std::ostream &note = emit(cfg, out, err, [&](std::ostream &os) {
            if (fmt == OutputFormat::json)
                os << report.dump(2) << '\n';
            else
                write_gnuplot(q, kind, os);
        });
        const bool equal = report.at("equal").get<bool>();
        note << "composed sum face " << report.at("composed").at("sum_face").get<double>()
             << ", outer bound sum face " << report.at("outer_bound").at("sum_face").get<double>()
             << (equal ? " (equal)" : " (DIFFERENT)") << '\n';
        return equal ? exit_code::ok : exit_code::failed;
    });
}

int cmd_simulate(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        if (!cfg.scheme)
            throw Error(Errc::invalid_argument, "--scheme is required");
        const std::string &scheme = *cfg.scheme;
        std::optional<ScenarioKind> implied;
        if (scheme == "optimal-unmatched")
            implied = ScenarioKind::unmatched;
        else if (scheme == "matched-optimal")
            implied = ScenarioKind::matched;
        ScenarioKind kind = implied.value_or(ScenarioKind::unmatched);
        if (cfg.scenario) {
            kind = parse_scenario(*cfg.scenario);
            if (implied && *implied != kind)
                throw Error(Errc::invalid_argument, scheme + " cannot run in the " + *cfg.scenario + " scenario");
        }
        QualityPair q{0.0, 0.0};
        if (scheme != "fdma" || cfg.beta || cfg.alpha)
            q = require_quality(cfg);
        if (parse_format(cfg.format, OutputFormat::json) != OutputFormat::json)
            throw Error(Errc::invalid_argument, "simulate writes JSON only");
        if (cfg.trials == 0)
            throw Error(Errc::invalid_argument, "--trials must be >= 1");

        const SchemeDescriptor d = descriptor_by_name(scheme, q, kind);
        std::vector<SnrPoint> ladder;
        for (double db : cfg.snr_db)
            ladder.push_back(SnrPoint::from_db(db));

        McOptions opt;
        opt.trials = cfg.trials;
        opt.seed = cfg.seed;
        opt.workers = std::max(1u, cfg.workers);
        const SimReport rep = estimate_dof(d, q, kind, ladder, opt);

        std::ostream &note = emit(cfg, out, err, [&](std::ostream &os) { os << to_json(rep).dump(2) << '\n'; });
        note << std::fixed << std::setprecision(4) << "sum DoF slope " << rep.sum.value() << " ("
             << (rep.sum.used_top_pair ? "top-pair" : "least-squares") << ", residual " << rep.sum.residual
             << ")";
        if (rep.analytic_sum_dof)
            note << ", analytic target " << *rep.analytic_sum_dof;
        note << '\n';
        return exit_code::ok;
    });
}

int cmd_sweep(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        const ScenarioKind kind = parse_scenario(cfg.scenario.value_or("unmatched"));
        const OutputFormat fmt = parse_format(cfg.format, OutputFormat::csv);
        const SweepMap map = sweep(kind, cfg.step, cfg.rho);
        const MinRatio mr = min_ratio(kind, cfg.step);
        const nlohmann::json summary = summary_json(map, mr);

        std::ostream &note = emit(cfg, out, err, [&](std::ostream &os) {
            switch (fmt) {
            case OutputFormat::csv: write_csv(map, os); break;
            case OutputFormat::json: os << summary.dump(2) << '\n'; break;
            case OutputFormat::gnuplot: write_gnuplot(map, os); break;
            }
        });
        if (fmt != OutputFormat::json)
            note << summary.dump() << '\n';
        return exit_code::ok;
    });
}

int cmd_verify(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        std::optional<ScenarioKind> only;
        if (cfg.scenario)
            only = parse_scenario(*cfg.scenario);
        const auto results = run_verification(only);
        bool ok = true;
        std::ostringstream report;
        for (const auto &r : results) {
            ok = ok && r.passed;
            report << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << '\n';
        }
        report << (ok ? "verified" : "verification FAILED") << '\n';
        if (cfg.out)
            emit(cfg, out, err, [&](std::ostream &os) { os << report.str(); });
        out << report.str();
        return ok ? exit_code::ok : exit_code::failed;
    });
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Two-user MISO broadcast channel DoF toolkit", "misobc"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string scenario, scheme, out_path, format;
    double beta = 0.0, alpha = 0.0;

    const auto common = [&](CLI::App *sub) {
        sub->add_option("--scenario", scenario, "unmatched | matched");
        sub->add_option("--out", out_path, "output path (default: stdout)");
        sub->add_option("--format", format, "json | csv | gnuplot");
    };
    const auto quality = [&](CLI::App *sub) {
        sub->add_option("--beta", beta, "stronger CSIT quality exponent")->check(CLI::Range(0.0, 1.0));
        sub->add_option("--alpha", alpha, "weaker CSIT quality exponent")->check(CLI::Range(0.0, 1.0));
    };

    auto *regions = app.add_subcommand("regions", "compose DoF regions and compare with the outer bound");
    common(regions);
    quality(regions);

    auto *simulate = app.add_subcommand("simulate", "Monte Carlo rates and DoF slopes of a scheme");
    common(simulate);
    quality(simulate);
    simulate->add_option("--scheme", scheme, "optimal-unmatched | matched-optimal | fdma | zfbf | s3");
    simulate->add_option("--snr", cfg.snr_db, "SNR ladder in dB, comma separated")->delimiter(',');
    simulate->add_option("--trials", cfg.trials, "Monte Carlo trials per SNR point");
    simulate->add_option("--seed", cfg.seed, "64-bit master seed");
    simulate->add_option("--workers", cfg.workers, "worker threads (results do not depend on it)");

    auto *sw = app.add_subcommand("sweep", "best sub-optimal strategy over the (beta, alpha) grid");
    common(sw);
    sw->add_option("--step", cfg.step, "grid step");
    sw->add_option("--rho", cfg.rho, "required fraction of the optimal sum DoF");

    auto *verify = app.add_subcommand("verify", "run the invariant battery");
    common(verify);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return exit_code::bad_args;
    }

    const auto given = [](CLI::App *sub, const char *name) { return sub->count(name) > 0; };
    CLI::App *sub = app.get_subcommands().front();
    cfg.command = sub->get_name();
    if (given(sub, "--scenario"))
        cfg.scenario = scenario;
    if (given(sub, "--out"))
        cfg.out = out_path;
    if (given(sub, "--format"))
        cfg.format = format;
    if (cfg.command == "regions" || cfg.command == "simulate") {
        if (given(sub, "--beta"))
            cfg.beta = beta;
        if (given(sub, "--alpha"))
            cfg.alpha = alpha;
    }
    if (cfg.command == "simulate" && given(sub, "--scheme"))
        cfg.scheme = scheme;

    if (cfg.command == "regions")
        return cmd_regions(cfg, out, err);
    if (cfg.command == "simulate")
        return cmd_simulate(cfg, out, err);
    if (cfg.command == "sweep")
        return cmd_sweep(cfg, out, err);
    return cmd_verify(cfg, out, err);
}

} // namespace misobc
