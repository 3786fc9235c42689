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

// State-dependent expected utility: acts become operators diagonal in the
// event basis, and the EU of an act depends on the state of the decision
// entity through the Born rule.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qeu/error.hpp"
#include "qeu/hilbert.hpp"
#include "qeu/seut.hpp"

namespace qeu::quantum {

using hilbert::Complex;
using hilbert::HermitianOperator;
using hilbert::Projector;
using hilbert::StateVector;

/// An act f = (E_1, x_1; ...; E_n, x_n) together with its operator
/// F = sum_i u(x_i) P_i over the canonical spectral family.
class QuantumAct {
public:
    QuantumAct(seut::Act act, seut::UtilityFunction u, HermitianOperator op)
        : act_(std::move(act)), u_(std::move(u)), op_(std::move(op)) {
        if (op_.dimension() != act_.payoffs.size()) {
            throw Error(ErrorCode::DimensionMismatch, "operator and act sizes differ");
        }
        if (!op_.matrix().is_diagonal(hilbert::kConstructTolerance)) {
            throw Error(ErrorCode::NonDiagonalAct, "act operators are diagonal in the event basis");
        }
        for (std::size_t i = 0; i < act_.payoffs.size(); ++i) {
            if (std::abs(op_(i, i) - Complex{u_(act_.payoffs[i]), 0.0}) >
                hilbert::kConstructTolerance) {
                throw Error(ErrorCode::InvalidArgument, "diagonal entry differs from u(payoff)");
            }
        }
    }

    [[nodiscard]] const seut::Act& act() const noexcept { return act_; }
    [[nodiscard]] const seut::UtilityFunction& utility() const noexcept { return u_; }
    [[nodiscard]] const HermitianOperator& as_operator() const noexcept { return op_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return op_.dimension(); }

private:
    seut::Act act_;
    seut::UtilityFunction u_;
    HermitianOperator op_;
};

inline QuantumAct make_quantum_act(const seut::Act& act, const seut::UtilityFunction& u) {
    for (double x : act.payoffs) {
        if (!std::isfinite(x)) {
            throw Error(ErrorCode::InvalidArgument, "non-finite payoff");
        }
    }
    u.check_strictly_increasing(act.payoffs);
    std::vector<double> diag;
    diag.reserve(act.payoffs.size());
    for (double x : act.payoffs) {
        diag.push_back(u(x));
    }
    return QuantumAct(act, u, HermitianOperator::diagonal(diag));
}

/// W_v(f) = <v|F|v>.
inline double quantum_eu(const StateVector& v, const QuantumAct& qa) {
    return hilbert::expectation(v, qa.as_operator());
}

/// Subjective measure induced by the state: p(E_i) = |<alpha_i|v>|^2.
inline seut::KolmogorovMeasure induced_measure(const StateVector& v) {
    std::vector<double> p;
    double total = 0.0;
    for (const auto& proj : hilbert::canonical_spectral_family(v.dimension())) {
        p.push_back(hilbert::born_probability(v, proj));
        total += p.back();
    }
    // Remove the last ulp of drift so the measure passes its own invariant.
    for (double& x : p) {
        x /= total;
    }
    return seut::KolmogorovMeasure(std::move(p));
}

enum class Preference { FStrict, GStrict, Indifferent };

inline Preference compare_utilities(double wf, double wg) {
    const double d = wf - wg;
    if (std::abs(d) <= seut::kIndifferenceTolerance) {
        return Preference::Indifferent;
    }
    return d > 0.0 ? Preference::FStrict : Preference::GStrict;
}

/// f against g with each act evaluated in its own state, as when pondering
/// changes the ambiguous urn but leaves the known urn alone.
inline Preference prefers_in_states(const StateVector& state_f, const QuantumAct& f,
                                    const StateVector& state_g, const QuantumAct& g) {
    return compare_utilities(quantum_eu(state_f, f), quantum_eu(state_g, g));
}

/// f >=_v g iff W_v(f) >= W_v(g).
inline Preference prefers(const StateVector& v, const QuantumAct& f, const QuantumAct& g) {
    return prefers_in_states(v, f, v, g);
}

enum class ContextKind { ProjectiveMeasurement, Pondering };

struct ContextTransition {
    StateVector initial;
    StateVector final_state;
    std::string context_label;
    ContextKind kind = ContextKind::ProjectiveMeasurement;
    double transition_probability = 0.0;
};

/// Lueders update: project onto the outcome subspace and renormalize.
inline ContextTransition transition(const StateVector& initial, const Projector& outcome,
                                    std::string label = "measurement") {
    const double prob = hilbert::born_probability(initial, outcome);
    if (!(prob > hilbert::kConstructTolerance)) {
        throw Error(ErrorCode::ZeroProbabilityOutcome, "outcome has zero probability");
    }
    return {initial, StateVector::normalized(hilbert::apply(outcome.matrix(), initial)),
            std::move(label), ContextKind::ProjectiveMeasurement, prob};
}

/// Records a cognitive context (such as pondering a pair of acts) whose final
/// state is supplied by the model rather than generated by a law. The stored
/// probability is the overlap |<final|initial>|^2.
inline ContextTransition pondering(const StateVector& initial, const StateVector& final_state,
                                   std::string label) {
    const double overlap = std::norm(hilbert::inner_product(final_state, initial));
    return {initial, final_state, std::move(label), ContextKind::Pondering,
            std::min(overlap, 1.0)};
}

} // namespace qeu::quantum
