// Copyright 2026 The qeu Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

// Command-line driver. `run` is separate from main() so the commands can be
// exercised in-process.
//
// Exit codes: 0 success, 1 validation error, 2 infeasibility finding with
// --fail-on-infeasible, 64 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qeu/attitudes.hpp"
#include "qeu/choice_data.hpp"
#include "qeu/error.hpp"
#include "qeu/report.hpp"
#include "qeu/seut.hpp"
#include "qeu/two_urn.hpp"

namespace qeu::cli {

using nlohmann::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitInfeasible = 2;
inline constexpr int kExitUsage = 64;

struct Options {
    std::optional<std::string> out_path;
    bool fail_on_infeasible = false;

    two_urn::PhaseConvention phases;
    double alpha = two_urn::published::kAlpha;
    double rate12 = two_urn::published::kRate12;
    double rate34 = two_urn::published::kRate34;
    std::size_t scan_steps = 0;

    double u0 = 0.0;
    double u100 = 1.0;

    double pstar = 0.5;
    double beta = 1.0;
    double delta = 0.1;
    std::string frame = "gain";

    std::string csv_path;
};

namespace detail {

struct Outcome {
    json document;
    int exit_code = kExitOk;
};

inline Outcome reproduce(const Options& o) {
    const auto r = two_urn::reproduce_published(o.alpha);
    return {report::envelope("reproduce-paper", two_urn::reproduction_json(r)), kExitOk};
}

inline Outcome fit(const Options& o) {
    if (o.scan_steps > 0) {
        json family = json::array();
        for (const auto& f : two_urn::scan_alpha(o.rate12, o.rate34, o.scan_steps, o.phases)) {
            family.push_back(f);
        }
        return {report::envelope("fit", {{"rate12", o.rate12},
                                          {"rate34", o.rate34},
                                          {"phase_convention", o.phases},
                                          {"family", std::move(family)}}),
                kExitOk};
    }
    const auto f = two_urn::fit(o.rate12, o.rate34, o.alpha, o.phases);
    const auto model = two_urn::TwoUrnModel::create(f.alpha, f.params, o.phases);
    json result = f;
    result["rate12"] = o.rate12;
    result["rate34"] = o.rate34;
    result["phase_convention"] = o.phases;
    result["M"] = report::matrix_json(model.m.matrix());
    result["N"] = report::matrix_json(model.n.matrix());
    return {report::envelope("fit", std::move(result)), kExitOk};
}

inline Outcome ingest_summarize(const Options& o) {
    const auto dataset = data::ingest(o.csv_path);
    const auto summary = data::summarize(dataset);
    json result = {{"input", o.csv_path}, {"summary", summary}};
    try {
        result["fit"] =
            two_urn::fit(summary.rate12.value(), summary.rate34.value(), o.alpha, o.phases);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::InfeasibleRate) {
            throw;
        }
        result["fit"] = nullptr;
        result["fit_error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
        return {report::envelope("ingest-summarize", std::move(result)),
                o.fail_on_infeasible ? kExitInfeasible : kExitOk};
    }
    return {report::envelope("ingest-summarize", std::move(result)), kExitOk};
}

inline Outcome verify_paradox(const Options& o) {
    using seut::EllsbergAct;
    using seut::PreferenceStatement;
    const auto u = seut::UtilityFunction::from_endpoints(o.u0, o.u100);
    struct Pattern {
        const char* name;
        std::vector<PreferenceStatement> statements;
    };
    const std::vector<Pattern> patterns = {
        {"f2>f1, f4>f3", {{EllsbergAct::F2, EllsbergAct::F1}, {EllsbergAct::F4, EllsbergAct::F3}}},
        {"f1>f2, f4>f3", {{EllsbergAct::F1, EllsbergAct::F2}, {EllsbergAct::F4, EllsbergAct::F3}}},
        {"f2>f1, f3>f4", {{EllsbergAct::F2, EllsbergAct::F1}, {EllsbergAct::F3, EllsbergAct::F4}}},
        {"f1>f2, f3>f4", {{EllsbergAct::F1, EllsbergAct::F2}, {EllsbergAct::F3, EllsbergAct::F4}}},
    };
    json classical = json::array();
    bool any_infeasible = false;
    for (const auto& p : patterns) {
        const auto r = seut::seut_feasible(p.statements, u);
        any_infeasible = any_infeasible || !r.feasible;
        json entry = r;
        entry["pattern"] = p.name;
        classical.push_back(std::move(entry));
    }
    const auto ellsberg = two_urn::verify_ellsberg_preferences(two_urn::build_states(o.alpha), u);
    json result = {{"u0", o.u0},
                   {"u100", o.u100},
                   {"classical", std::move(classical)},
                   {"quantum", {{"alpha", o.alpha}, {"ellsberg", ellsberg}}}};
    return {report::envelope("verify-paradox", std::move(result)),
            (o.fail_on_infeasible && any_infeasible) ? kExitInfeasible : kExitOk};
}

inline Outcome crossover(const Options& o) {
    const attitudes::AttitudeParams a{o.pstar, o.beta};
    const auto frame = attitudes::parse_frame(o.frame);
    const double p_cross = attitudes::find_crossover(a, o.delta, frame);
    json sweep = json::array();
    for (int k = 1; k < 20; ++k) {
        const double p = 0.05 * k;
        if (o.delta > std::min(p, 1.0 - p)) {
            continue;
        }
        const attitudes::AmbiguousScenario s{p, o.delta, 1.0, 0.0, frame};
        sweep.push_back({{"p", p}, {"choice", attitudes::to_string(attitudes::predict_choice(s, a))}});
    }
    return {report::envelope("crossover", {{"pstar", o.pstar},
                                           {"beta", o.beta},
                                           {"delta", o.delta},
                                           {"frame", o.frame},
                                           {"crossover", p_cross},
                                           {"predictions", std::move(sweep)}}),
            kExitOk};
}

inline void add_phase_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--theta-m", o.phases.theta_m_deg, "theta_m in degrees");
    cmd->add_option("--phi-m", o.phases.phi_m_deg, "phi_m in degrees");
    cmd->add_option("--theta-n", o.phases.theta_n_deg, "theta_n in degrees");
    cmd->add_option("--phi-n", o.phases.phi_n_deg, "phi_n in degrees");
}

} // namespace detail

/// Runs one command; args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Quantum expected utility for the Ellsberg two-urn experiment", "qeu"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--out", o.out_path, "write the JSON report to this path");
    app.add_flag("--fail-on-infeasible", o.fail_on_infeasible,
                 "exit 2 when an infeasibility is found");

    auto* reproduce = app.add_subcommand("reproduce-paper", "rebuild the published two-urn model");
    reproduce->add_option("--alpha", o.alpha, "state parameter alpha");

    auto* fit = app.add_subcommand("fit", "fit M and N to preference rates");
    fit->add_option("--rate12", o.rate12, "fraction preferring f2 over f1");
    fit->add_option("--rate34", o.rate34, "fraction preferring f4 over f3");
    fit->add_option("--alpha", o.alpha, "state parameter alpha in [0, 1/2)");
    fit->add_option("--scan-alpha", o.scan_steps, "report the solution family on N alphas");
    detail::add_phase_flags(fit, o);

    auto* ingest = app.add_subcommand("ingest-summarize", "summarize a choice CSV and fit it");
    ingest->add_option("csv", o.csv_path, "CSV with respondent_id,choice12,choice34")->required();
    ingest->add_option("--alpha", o.alpha, "state parameter alpha for the fit");
    detail::add_phase_flags(ingest, o);

    auto* paradox = app.add_subcommand("verify-paradox", "classical feasibility of choice patterns");
    paradox->add_option("--u0", o.u0, "u(0)");
    paradox->add_option("--u100", o.u100, "u(100)");
    paradox->add_option("--alpha", o.alpha, "state parameter alpha for the quantum check");

    auto* cross = app.add_subcommand("crossover", "locate the hope/fear crossover");
    cross->add_option("--pstar", o.pstar, "crossover probability p*");
    cross->add_option("--beta", o.beta, "attitude strength");
    cross->add_option("--delta", o.delta, "ambiguity half-width");
    cross->add_option("--frame", o.frame, "gain or loss");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    std::string command;
    detail::Outcome outcome;
    try {
        if (reproduce->parsed()) {
            command = "reproduce-paper";
            outcome = detail::reproduce(o);
        } else if (fit->parsed()) {
            command = "fit";
            outcome = detail::fit(o);
        } else if (ingest->parsed()) {
            command = "ingest-summarize";
            outcome = detail::ingest_summarize(o);
        } else if (paradox->parsed()) {
            command = "verify-paradox";
            outcome = detail::verify_paradox(o);
        } else {
            command = "crossover";
            outcome = detail::crossover(o);
        }
    } catch (const Error& e) {
        const bool infeasible = e.code() == ErrorCode::InfeasibleRate;
        outcome.document = report::error_document(command, std::string(to_string(e.code())), e.what());
        outcome.exit_code = infeasible && o.fail_on_infeasible ? kExitInfeasible : kExitValidation;
        err << "error: " << e.what() << '\n';
    }

    const std::string text = outcome.document.dump(2) + "\n";
    if (o.out_path) {
        std::ofstream file(*o.out_path);
        if (!file) {
            err << "error: cannot write " << *o.out_path << '\n';
            return kExitValidation;
        }
        file << text;
    } else {
        out << text;
    }
    return outcome.exit_code;
}

} // namespace qeu::cli
