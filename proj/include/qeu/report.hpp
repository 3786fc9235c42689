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

// JSON encoding of reports. Every document carries "schema": "qeu-report/1".
// Complex numbers are {"re": x, "im": y}; matrices are row-major arrays of rows.
// Numbers are written at full double precision; fields compared against
// five-decimal published values are repeated under "rounded".

#include <cmath>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qeu/attitudes.hpp"
#include "qeu/choice_data.hpp"
#include "qeu/hilbert.hpp"
#include "qeu/seut.hpp"
#include "qeu/two_urn.hpp"

namespace qeu::report {

using nlohmann::json;

inline constexpr const char* kSchema = "qeu-report/1";

inline double round5(double x) { return std::round(x * 1e5) / 1e5; }

inline json envelope(const std::string& command, json result) {
    return json{{"schema", kSchema}, {"command", command}, {"result", std::move(result)}};
}

inline json error_document(const std::string& command, const std::string& code,
                           const std::string& message) {
    return json{{"schema", kSchema},
                {"command", command},
                {"error", {{"code", code}, {"message", message}}}};
}

inline json complex_json(hilbert::Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

inline hilbert::Complex complex_from_json(const json& j) {
    return {j.at("re").get<double>(), j.at("im").get<double>()};
}

inline json matrix_json(const hilbert::Matrix& m, bool rounded = false) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.dimension(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.dimension(); ++c) {
            const auto z = m(r, c);
            row.push_back(rounded ? complex_json({round5(z.real()), round5(z.imag())})
                                  : complex_json(z));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline hilbert::Matrix matrix_from_json(const json& j) {
    const std::size_t n = j.size();
    std::vector<hilbert::Complex> data;
    for (const auto& row : j) {
        if (row.size() != n) {
            throw Error(ErrorCode::MalformedInput, "matrix rows must have n entries");
        }
        for (const auto& z : row) {
            data.push_back(complex_from_json(z));
        }
    }
    return hilbert::Matrix(n, std::move(data));
}

inline json state_json(const hilbert::StateVector& v) {
    json out = json::array();
    for (const auto& a : v.amplitudes()) {
        out.push_back(complex_json(a));
    }
    return out;
}

inline hilbert::StateVector state_from_json(const json& j) {
    std::vector<hilbert::Complex> amps;
    for (const auto& z : j) {
        amps.push_back(complex_from_json(z));
    }
    return hilbert::StateVector(std::move(amps));
}

} // namespace qeu::report

namespace qeu::two_urn {

inline void to_json(nlohmann::json& j, const DecisionParameters& p) {
    j = {{"rho_m", p.rho_m}, {"tau_m", p.tau_m}, {"rho_n", p.rho_n}, {"tau_n", p.tau_n}};
}
inline void from_json(const nlohmann::json& j, DecisionParameters& p) {
    j.at("rho_m").get_to(p.rho_m);
    j.at("tau_m").get_to(p.tau_m);
    j.at("rho_n").get_to(p.rho_n);
    j.at("tau_n").get_to(p.tau_n);
}

inline void to_json(nlohmann::json& j, const PhaseConvention& p) {
    j = {{"theta_m_deg", p.theta_m_deg},
         {"phi_m_deg", p.phi_m_deg},
         {"theta_n_deg", p.theta_n_deg},
         {"phi_n_deg", p.phi_n_deg}};
}
inline void from_json(const nlohmann::json& j, PhaseConvention& p) {
    j.at("theta_m_deg").get_to(p.theta_m_deg);
    j.at("phi_m_deg").get_to(p.phi_m_deg);
    j.at("theta_n_deg").get_to(p.theta_n_deg);
    j.at("phi_n_deg").get_to(p.phi_n_deg);
}

inline void to_json(nlohmann::json& j, const Residual& r) {
    j = {{"equation", r.equation}, {"abs_error", r.value}};
}
inline void from_json(const nlohmann::json& j, Residual& r) {
    j.at("equation").get_to(r.equation);
    j.at("abs_error").get_to(r.value);
}

inline void to_json(nlohmann::json& j, const FitResult& f) {
    j = {{"alpha", f.alpha},
         {"rho_m", f.params.rho_m},
         {"tau_m", f.params.tau_m},
         {"rho_n", f.params.rho_n},
         {"tau_n", f.params.tau_n},
         {"residuals", f.residuals},
         {"max_residual", f.max_residual()},
         {"refinement_deviation", f.refinement_deviation},
         {"refinement_iterations", f.refinement_iterations},
         {"rounded",
          {{"alpha", report::round5(f.alpha)},
           {"rho_m", report::round5(f.params.rho_m)},
           {"tau_m", report::round5(f.params.tau_m)},
           {"rho_n", report::round5(f.params.rho_n)},
           {"tau_n", report::round5(f.params.tau_n)}}}};
}
inline void from_json(const nlohmann::json& j, FitResult& f) {
    j.at("alpha").get_to(f.alpha);
    j.at("rho_m").get_to(f.params.rho_m);
    j.at("tau_m").get_to(f.params.tau_m);
    j.at("rho_n").get_to(f.params.rho_n);
    j.at("tau_n").get_to(f.params.tau_n);
    j.at("residuals").get_to(f.residuals);
    j.at("refinement_deviation").get_to(f.refinement_deviation);
    j.at("refinement_iterations").get_to(f.refinement_iterations);
}

inline void to_json(nlohmann::json& j, const Check& c) {
    j = {{"criterion", c.id},      {"name", c.name},           {"value", c.value},
         {"expected", c.expected}, {"tolerance", c.tolerance}, {"pass", c.pass}};
}
inline void from_json(const nlohmann::json& j, Check& c) {
    j.at("criterion").get_to(c.id);
    j.at("name").get_to(c.name);
    j.at("value").get_to(c.value);
    j.at("expected").get_to(c.expected);
    j.at("tolerance").get_to(c.tolerance);
    j.at("pass").get_to(c.pass);
}

inline std::string to_string(quantum::Preference p, const char* f, const char* g) {
    switch (p) {
    case quantum::Preference::FStrict: return f;
    case quantum::Preference::GStrict: return g;
    case quantum::Preference::Indifferent: return "indifferent";
    }
    return "?";
}

inline void to_json(nlohmann::json& j, const EllsbergReport& e) {
    j = {{"W_v12_f1", e.w_v12_f1},
         {"W_v0_f2", e.w_v0_f2},
         {"W_v34_f3", e.w_v34_f3},
         {"W_v0_f4", e.w_v0_f4},
         {"preferred_12", to_string(e.f1_vs_f2, "f1", "f2")},
         {"preferred_34", to_string(e.f3_vs_f4, "f3", "f4")},
         {"ellsberg_preferences", e.ellsberg_preferences()},
         {"reversed_preferences", e.reversed_preferences()}};
}

inline nlohmann::json model_json(const TwoUrnModel& m) {
    return {{"alpha", m.alpha},
            {"v0", report::state_json(m.states.v0)},
            {"v12", report::state_json(m.states.v12)},
            {"v34", report::state_json(m.states.v34)},
            {"phase_convention", m.phases},
            {"M", report::matrix_json(m.m.matrix())},
            {"N", report::matrix_json(m.n.matrix())},
            {"rounded",
             {{"M", report::matrix_json(m.m.matrix(), true)},
              {"N", report::matrix_json(m.n.matrix(), true)}}}};
}

inline nlohmann::json reproduction_json(const Reproduction& r) {
    nlohmann::json j = {{"fit", r.fit},
                        {"model", model_json(r.model)},
                        {"ellsberg", r.ellsberg},
                        {"checks", r.checks},
                        {"all_pass", r.all_pass()}};
    if (r.rounding_consistent_alpha) {
        j["rounding_consistent_alpha"] = {{"lo", r.rounding_consistent_alpha->lo},
                                          {"hi", r.rounding_consistent_alpha->hi}};
    } else {
        j["rounding_consistent_alpha"] = nullptr;
    }
    return j;
}

} // namespace qeu::two_urn

namespace qeu::data {

inline void to_json(nlohmann::json& j, const Fraction& f) {
    j = {{"num", f.num}, {"den", f.den}, {"value", f.value()}};
}
inline void from_json(const nlohmann::json& j, Fraction& f) {
    f = Fraction::of(j.at("num").get<std::uint64_t>(), j.at("den").get<std::uint64_t>());
}

inline void to_json(nlohmann::json& j, const CellCounts& c) {
    j = {{"f1_f3", c.f1_f3}, {"f1_f4", c.f1_f4}, {"f2_f3", c.f2_f3}, {"f2_f4", c.f2_f4}};
}
inline void from_json(const nlohmann::json& j, CellCounts& c) {
    j.at("f1_f3").get_to(c.f1_f3);
    j.at("f1_f4").get_to(c.f1_f4);
    j.at("f2_f3").get_to(c.f2_f3);
    j.at("f2_f4").get_to(c.f2_f4);
}

inline void to_json(nlohmann::json& j, const SummaryRates& s) {
    j = {{"n", s.n},
         {"cells", s.cells},
         {"rate12", s.rate12},
         {"rate34", s.rate34},
         {"inversion_rate", s.inversion_rate},
         {"consistent_pair_rate", s.consistent_rate},
         {"p12", s.p12},
         {"p34", s.p34},
         {"significance_test", "exact two-sided binomial vs 0.5 (minlike)"}};
}
inline void from_json(const nlohmann::json& j, SummaryRates& s) {
    j.at("n").get_to(s.n);
    j.at("cells").get_to(s.cells);
    j.at("rate12").get_to(s.rate12);
    j.at("rate34").get_to(s.rate34);
    j.at("inversion_rate").get_to(s.inversion_rate);
    j.at("consistent_pair_rate").get_to(s.consistent_rate);
    j.at("p12").get_to(s.p12);
    j.at("p34").get_to(s.p34);
}

} // namespace qeu::data

namespace qeu::seut {

inline void to_json(nlohmann::json& j, const Interval& i) {
    if (i.empty()) {
        j = nullptr;
        return;
    }
    j = {{"lo", i.lo}, {"hi", i.hi}, {"lo_open", i.lo_open}, {"hi_open", i.hi_open}};
}

inline void to_json(nlohmann::json& j, const FeasibilityResult& r) {
    j = {{"feasible", r.feasible},
         {"region_p_red", r.region},
         {"witness_p_red", r.witness ? nlohmann::json(*r.witness) : nlohmann::json(nullptr)},
         {"witness_verified", r.witness_verified},
         {"grid_step", kGridStep},
         {"grid_hits", r.grid_hits},
         {"oracle_agrees", r.oracle_agrees}};
}

} // namespace qeu::seut
