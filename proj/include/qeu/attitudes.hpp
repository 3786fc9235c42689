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

// Hope and fear effects: a risky option with known gain (or loss) probability
// p against an ambiguous option whose probability is only known to lie in
// [p - delta, p + delta].
//
// Pondering the ambiguous option tilts the decision entity's state. The tilt
// is linear around a crossover probability p*:
//   p_eff = clamp(p - strength * delta * (p - p*), 0, 1)
// where p is the framed probability (of a gain in the gain frame, of a loss in
// the loss frame). Above p* the framed probability shrinks, below p* it grows,
// giving fear above the crossover for gains and hope above it for losses.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "qeu/error.hpp"
#include "qeu/hilbert.hpp"
#include "qeu/quantum_eu.hpp"
#include "qeu/seut.hpp"

namespace qeu::attitudes {

using hilbert::Complex;
using hilbert::StateVector;

enum class Frame { Gain, Loss };

inline std::string to_string(Frame f) { return f == Frame::Gain ? "gain" : "loss"; }

inline Frame parse_frame(const std::string& s) {
    if (s == "gain") {
        return Frame::Gain;
    }
    if (s == "loss") {
        return Frame::Loss;
    }
    throw Error(ErrorCode::InvalidArgument, "frame must be 'gain' or 'loss'");
}

struct AmbiguousScenario {
    double p = 0.5;        // framed probability of the risky option
    double delta = 0.0;    // half-width of the ambiguous range
    double gain_utility = 1.0;
    double loss_utility = 0.0;
    Frame frame = Frame::Gain;

    void validate() const {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw Error(ErrorCode::InvalidArgument, "p outside [0, 1]");
        }
        if (!(delta >= 0.0) || delta > std::min(p, 1.0 - p) + 1e-15) {
            throw Error(ErrorCode::InvalidArgument, "delta must lie in [0, min(p, 1 - p)]");
        }
        if (!(gain_utility > loss_utility)) {
            throw Error(ErrorCode::InvalidArgument, "gain utility must exceed loss utility");
        }
    }
};

struct AttitudeParams {
    double crossover = 0.5;
    double strength = 1.0;

    void validate() const {
        if (!(crossover > 0.0 && crossover < 1.0)) {
            throw Error(ErrorCode::InvalidArgument, "crossover must lie in (0, 1)");
        }
        if (!(strength >= 0.0) || !std::isfinite(strength)) {
            throw Error(ErrorCode::InvalidArgument, "strength must be non-negative");
        }
    }
};

enum class Choice { Risky, Ambiguous, Indifferent };

inline std::string to_string(Choice c) {
    switch (c) {
    case Choice::Risky: return "risky";
    case Choice::Ambiguous: return "ambiguous";
    case Choice::Indifferent: return "indifferent";
    }
    return "?";
}

namespace detail {

inline double tilted(double p, double delta, const AttitudeParams& a) {
    return std::clamp(p - a.strength * delta * (p - a.crossover), 0.0, 1.0);
}

/// State over (gain, loss) given the framed probability.
inline StateVector framed_state(double framed_p, Frame frame) {
    const double gain = frame == Frame::Gain ? framed_p : 1.0 - framed_p;
    return StateVector({Complex{std::sqrt(gain), 0.0}, Complex{std::sqrt(1.0 - gain), 0.0}});
}

inline quantum::QuantumAct gamble(double gain_utility, double loss_utility) {
    return quantum::make_quantum_act(seut::Act{{gain_utility, loss_utility}},
                                     seut::UtilityFunction::linear(1.0, 0.0));
}

/// EU(ambiguous) - EU(risky), without the delta range check so that it can be
/// evaluated over the whole unit interval.
inline double eu_gap(double p, double delta, Frame frame, const AttitudeParams& a,
                     double gain_utility = 1.0, double loss_utility = 0.0) {
    const auto act = gamble(gain_utility, loss_utility);
    return quantum::quantum_eu(framed_state(tilted(p, delta, a), frame), act) -
           quantum::quantum_eu(framed_state(p, frame), act);
}

} // namespace detail

/// State of the decision entity after pondering the ambiguous option.
inline StateVector effective_state(const AmbiguousScenario& s, const AttitudeParams& a) {
    s.validate();
    a.validate();
    return detail::framed_state(detail::tilted(s.p, s.delta, a), s.frame);
}

/// State for the risky option, which pondering leaves untouched.
inline StateVector risky_state(const AmbiguousScenario& s) {
    s.validate();
    return detail::framed_state(s.p, s.frame);
}

inline Choice predict_choice(const AmbiguousScenario& s, const AttitudeParams& a) {
    const auto act = detail::gamble(s.gain_utility, s.loss_utility);
    switch (quantum::prefers_in_states(effective_state(s, a), act, risky_state(s), act)) {
    case quantum::Preference::FStrict: return Choice::Ambiguous;
    case quantum::Preference::GStrict: return Choice::Risky;
    case quantum::Preference::Indifferent: return Choice::Indifferent;
    }
    return Choice::Indifferent;
}

/// Bisection for the framed probability where the EU gap changes sign.
inline double find_crossover(const AttitudeParams& a, double delta, Frame frame) {
    a.validate();
    if (!(a.strength > 0.0) || !(delta > 0.0)) {
        throw Error(ErrorCode::NoCrossover, "no crossover without ambiguity and attitude");
    }
    double lo = 1e-6;
    double hi = 1.0 - 1e-6;
    double g_lo = detail::eu_gap(lo, delta, frame, a);
    const double g_hi = detail::eu_gap(hi, delta, frame, a);
    if (g_lo == 0.0) {
        return lo;
    }
    if (g_hi == 0.0) {
        return hi;
    }
    if ((g_lo > 0.0) == (g_hi > 0.0)) {
        throw Error(ErrorCode::NoCrossover, "EU gap does not change sign on (0, 1)");
    }
    double mid = 0.5 * (lo + hi);
    for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
        mid = 0.5 * (lo + hi);
        const double g = detail::eu_gap(mid, delta, frame, a);
        if (g == 0.0) {
            return mid;
        }
        if ((g > 0.0) == (g_lo > 0.0)) {
            lo = mid;
            g_lo = g;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace qeu::attitudes
