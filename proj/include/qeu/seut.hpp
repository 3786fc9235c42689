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

// Classical subjective expected utility over a finite event partition, and
// the feasibility check for preference patterns over the two-urn acts.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qeu/error.hpp"

namespace qeu::seut {

/// Ties closer than this are reported as indifference.
inline constexpr double kIndifferenceTolerance = 1e-12;

class EventPartition {
public:
    explicit EventPartition(std::vector<std::string> labels) : labels_(std::move(labels)) {
        if (labels_.size() < 2) {
            throw Error(ErrorCode::InvalidArgument, "partition needs at least two events");
        }
        std::set<std::string> seen(labels_.begin(), labels_.end());
        if (seen.size() != labels_.size()) {
            throw Error(ErrorCode::InvalidArgument, "event labels must be distinct");
        }
    }

    [[nodiscard]] std::size_t size() const noexcept { return labels_.size(); }
    [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }

private:
    std::vector<std::string> labels_;
};

class KolmogorovMeasure {
public:
    explicit KolmogorovMeasure(std::vector<double> probabilities) : p_(std::move(probabilities)) {
        if (p_.size() < 2) {
            throw Error(ErrorCode::InvalidMeasure, "measure needs at least two events");
        }
        double total = 0.0;
        for (double p : p_) {
            if (!(p >= 0.0 && p <= 1.0)) {
                throw Error(ErrorCode::InvalidMeasure, "probability outside [0, 1]");
            }
            total += p;
        }
        if (std::abs(total - 1.0) > 1e-12) {
            throw Error(ErrorCode::InvalidMeasure, "probabilities do not sum to 1");
        }
    }

    /// (p, 1 - p) over a two-event partition.
    static KolmogorovMeasure binary(double p) { return KolmogorovMeasure({p, 1.0 - p}); }

    [[nodiscard]] std::size_t size() const noexcept { return p_.size(); }
    [[nodiscard]] double operator[](std::size_t i) const { return p_.at(i); }
    [[nodiscard]] std::span<const double> probabilities() const noexcept { return p_; }

private:
    std::vector<double> p_;
};

/// Strictly increasing utility of a monetary payoff, optionally composed with
/// a positive affine map a*u + b.
class UtilityFunction {
public:
    enum class Kind { Tabulated, Linear, Power };

    /// u(x) = slope * x + intercept.
    static UtilityFunction linear(double slope, double intercept) {
        if (!(slope > 0.0) || !std::isfinite(slope) || !std::isfinite(intercept)) {
            throw Error(ErrorCode::InvalidUtility, "linear utility needs a positive finite slope");
        }
        UtilityFunction u(Kind::Linear);
        u.params_ = {slope, intercept};
        return u;
    }

    /// u(x) = x / 100, so that u(0) = 0 and u(100) = 1.
    static UtilityFunction normalized() { return linear(0.01, 0.0); }

    /// u(x) = (x / scale)^exponent on x >= 0.
    static UtilityFunction power(double exponent, double scale = 100.0) {
        if (!(exponent > 0.0) || !(scale > 0.0)) {
            throw Error(ErrorCode::InvalidUtility, "power utility needs positive exponent and scale");
        }
        UtilityFunction u(Kind::Power);
        u.params_ = {exponent, scale};
        return u;
    }

    /// Piecewise-linear interpolation through (payoff, utility) points.
    /// Evaluation outside the tabulated payoff range is an error.
    static UtilityFunction tabulated(std::vector<std::pair<double, double>> points) {
        if (points.size() < 2) {
            throw Error(ErrorCode::InvalidUtility, "tabulated utility needs two points");
        }
        std::sort(points.begin(), points.end());
        for (std::size_t i = 1; i < points.size(); ++i) {
            if (!(points[i].first > points[i - 1].first) ||
                !(points[i].second > points[i - 1].second)) {
                throw Error(ErrorCode::InvalidUtility, "tabulated utility must be strictly increasing");
            }
        }
        UtilityFunction u(Kind::Tabulated);
        u.table_ = std::move(points);
        return u;
    }

    /// Utility with u(0) = u0 and u(100) = u100.
    static UtilityFunction from_endpoints(double u0, double u100) {
        if (!(u100 > u0)) {
            throw Error(ErrorCode::InvalidUtility, "u(100) must exceed u(0)");
        }
        return tabulated({{0.0, u0}, {100.0, u100}});
    }

    [[nodiscard]] UtilityFunction affine(double scale, double shift) const {
        if (!(scale > 0.0)) {
            throw Error(ErrorCode::InvalidUtility, "affine transformation needs a positive scale");
        }
        UtilityFunction out = *this;
        out.scale_ = scale * scale_;
        out.shift_ = scale * shift_ + shift;
        return out;
    }

    [[nodiscard]] Kind kind() const noexcept { return kind_; }

    double operator()(double payoff) const {
        if (!std::isfinite(payoff)) {
            throw Error(ErrorCode::InvalidUtility, "non-finite payoff");
        }
        return scale_ * base(payoff) + shift_;
    }

    /// Throws InvalidUtility unless u is strictly increasing over the payoffs.
    void check_strictly_increasing(std::span<const double> payoffs) const {
        std::vector<double> xs(payoffs.begin(), payoffs.end());
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
        for (std::size_t i = 1; i < xs.size(); ++i) {
            if (!((*this)(xs[i]) > (*this)(xs[i - 1]))) {
                throw Error(ErrorCode::InvalidUtility, "utility not strictly increasing on payoffs");
            }
        }
    }

private:
    explicit UtilityFunction(Kind k) : kind_(k) {}

    [[nodiscard]] double base(double x) const {
        switch (kind_) {
        case Kind::Linear:
            return params_[0] * x + params_[1];
        case Kind::Power:
            if (x < 0.0) {
                throw Error(ErrorCode::InvalidUtility, "power utility undefined for negative payoff");
            }
            return std::pow(x / params_[1], params_[0]);
        case Kind::Tabulated: {
            if (x < table_.front().first || x > table_.back().first) {
                throw Error(ErrorCode::InvalidUtility, "payoff outside tabulated range");
            }
            auto hi = std::lower_bound(table_.begin(), table_.end(), x,
                                       [](const auto& pt, double v) { return pt.first < v; });
            if (hi->first == x) {
                return hi->second;
            }
            auto lo = hi - 1;
            const double t = (x - lo->first) / (hi->first - lo->first);
            return lo->second + t * (hi->second - lo->second);
        }
        }
        return 0.0;
    }

    Kind kind_;
    std::array<double, 2> params_{};
    std::vector<std::pair<double, double>> table_;
    double scale_ = 1.0;
    double shift_ = 0.0;
};

/// f = (E_1, x_1; ...; E_n, x_n): payoffs aligned with an event partition.
struct Act {
    std::vector<double> payoffs;

    friend bool operator==(const Act&, const Act&) = default;
};

/// W(f) = sum_i p(E_i) u(x_i).
inline double classical_eu(const Act& act, const KolmogorovMeasure& measure,
                           const UtilityFunction& u) {
    if (act.payoffs.size() != measure.size()) {
        throw Error(ErrorCode::DimensionMismatch, "act and measure lengths differ");
    }
    double w = 0.0;
    for (std::size_t i = 0; i < act.payoffs.size(); ++i) {
        w += measure[i] * u(act.payoffs[i]);
    }
    return w;
}

// ---------------------------------------------------------------------------
// Two-urn example. Urn I holds red and black balls in unknown proportion,
// urn II holds them 50/50. Acts pay 100 or 0 on the colour drawn.

enum class EllsbergAct { F1 = 0, F2 = 1, F3 = 2, F4 = 3 };
enum class Urn { Ambiguous, Known };

inline constexpr std::array<EllsbergAct, 4> kEllsbergActs = {EllsbergAct::F1, EllsbergAct::F2,
                                                             EllsbergAct::F3, EllsbergAct::F4};

inline std::string to_string(EllsbergAct a) {
    return "f" + std::to_string(static_cast<int>(a) + 1);
}

struct TwoUrnAct {
    Urn urn;
    Act act; // payoffs on (Red, Black)
};

inline TwoUrnAct two_urn_act(EllsbergAct a) {
    switch (a) {
    case EllsbergAct::F1: return {Urn::Ambiguous, {{100.0, 0.0}}};
    case EllsbergAct::F2: return {Urn::Known, {{100.0, 0.0}}};
    case EllsbergAct::F3: return {Urn::Ambiguous, {{0.0, 100.0}}};
    case EllsbergAct::F4: return {Urn::Known, {{0.0, 100.0}}};
    }
    throw Error(ErrorCode::InvalidArgument, "unknown act");
}

inline EventPartition two_urn_partition() { return EventPartition({"Red", "Black"}); }

/// Classical EU of a two-urn act when the subjective probability of red in
/// urn I is p_red. Urn II acts always use the known 1/2.
inline double two_urn_eu(EllsbergAct a, double p_red, const UtilityFunction& u) {
    const TwoUrnAct t = two_urn_act(a);
    const double p = t.urn == Urn::Known ? 0.5 : p_red;
    return classical_eu(t.act, KolmogorovMeasure::binary(p), u);
}

enum class Relation { Strict, Weak, Indifferent };

struct PreferenceStatement {
    EllsbergAct preferred;
    EllsbergAct other;
    Relation relation = Relation::Strict;

    friend bool operator==(const PreferenceStatement&, const PreferenceStatement&) = default;
};

/// Whether a difference W(preferred) - W(other) satisfies the relation.
inline bool relation_holds(Relation r, double difference) {
    switch (r) {
    case Relation::Strict: return difference > kIndifferenceTolerance;
    case Relation::Weak: return difference >= -kIndifferenceTolerance;
    case Relation::Indifferent: return std::abs(difference) <= kIndifferenceTolerance;
    }
    return false;
}

enum class Choice12 { PrefersF1, PrefersF2, Indifferent };
enum class Choice34 { PrefersF3, PrefersF4, Indifferent };

struct SignCondition {
    Choice12 first;
    Choice34 second;

    friend bool operator==(const SignCondition&, const SignCondition&) = default;
};

/// W(f2) > W(f1) iff (p_R - 1/2)(u(100) - u(0)) < 0, and W(f4) > W(f3) iff the
/// same product is positive.
inline SignCondition ellsberg_sign_condition(double p_red, const UtilityFunction& u) {
    if (!(p_red >= 0.0 && p_red <= 1.0)) {
        throw Error(ErrorCode::InvalidMeasure, "p_R outside [0, 1]");
    }
    const double spread = u(100.0) - u(0.0);
    if (!(spread > 0.0)) {
        throw Error(ErrorCode::InvalidUtility, "u(100) must exceed u(0)");
    }
    const double s = (p_red - 0.5) * spread;
    if (std::abs(s) <= kIndifferenceTolerance) {
        return {Choice12::Indifferent, Choice34::Indifferent};
    }
    return s < 0.0 ? SignCondition{Choice12::PrefersF2, Choice34::PrefersF3}
                   : SignCondition{Choice12::PrefersF1, Choice34::PrefersF4};
}

/// Subset of [0, 1] for p_R, possibly with open ends.
struct Interval {
    double lo = 0.0;
    double hi = 1.0;
    bool lo_open = false;
    bool hi_open = false;

    [[nodiscard]] bool empty() const {
        return lo > hi || (lo == hi && (lo_open || hi_open));
    }
    [[nodiscard]] bool contains(double p) const {
        return (lo_open ? p > lo : p >= lo) && (hi_open ? p < hi : p <= hi);
    }
    [[nodiscard]] Interval intersect(const Interval& o) const {
        Interval r = *this;
        if (o.lo > r.lo || (o.lo == r.lo && o.lo_open)) {
            r.lo = o.lo;
            r.lo_open = o.lo_open;
        }
        if (o.hi < r.hi || (o.hi == r.hi && o.hi_open)) {
            r.hi = o.hi;
            r.hi_open = o.hi_open;
        }
        return r;
    }
    /// A representative interior point (the midpoint, or the single point).
    [[nodiscard]] double witness() const { return 0.5 * (lo + hi); }

    friend bool operator==(const Interval&, const Interval&) = default;
};

namespace detail {
/// W(f) - (u(0) + u(100))/2 = sigma_f * (p_R - 1/2)(u(100) - u(0)).
inline int ambiguity_sign(EllsbergAct a) {
    switch (a) {
    case EllsbergAct::F1: return 1;
    case EllsbergAct::F3: return -1;
    default: return 0;
    }
}

/// Allowed signs of d = W(first) - W(second) for the unordered pair, as a
/// bitmask over {negative, zero, positive}.
inline unsigned allowed_signs(const PreferenceStatement& s, bool flipped) {
    constexpr unsigned kNeg = 1, kZero = 2, kPos = 4;
    unsigned mask = 0;
    switch (s.relation) {
    case Relation::Strict: mask = kPos; break;
    case Relation::Weak: mask = kPos | kZero; break;
    case Relation::Indifferent: mask = kZero; break;
    }
    if (flipped) {
        mask = ((mask & kPos) ? kNeg : 0u) | (mask & kZero) | ((mask & kNeg) ? kPos : 0u);
    }
    return mask;
}
} // namespace detail

/// Feasible p_R (with d = k (p_R - 1/2) Delta u) for one statement.
inline Interval statement_region(const PreferenceStatement& s) {
    const int k = detail::ambiguity_sign(s.preferred) - detail::ambiguity_sign(s.other);
    const Interval everything{0.0, 1.0, false, false};
    const Interval nothing{1.0, 0.0, false, false};
    if (k == 0) {
        return s.relation == Relation::Strict ? nothing : everything;
    }
    switch (s.relation) {
    case Relation::Strict:
        return k > 0 ? Interval{0.5, 1.0, true, false} : Interval{0.0, 0.5, false, true};
    case Relation::Weak:
        return k > 0 ? Interval{0.5, 1.0, false, false} : Interval{0.0, 0.5, false, false};
    case Relation::Indifferent:
        return Interval{0.5, 0.5, false, false};
    }
    return nothing;
}

/// Throws ContradictoryStatements when two statements about the same pair of
/// acts cannot both hold, whatever the measure.
inline void check_consistent(std::span<const PreferenceStatement> statements) {
    std::array<unsigned, 16> masks{};
    masks.fill(7u);
    for (const auto& s : statements) {
        const int a = static_cast<int>(s.preferred);
        const int b = static_cast<int>(s.other);
        if (a == b) {
            if (s.relation == Relation::Strict) {
                throw Error(ErrorCode::ContradictoryStatements,
                            "strict preference of " + to_string(s.preferred) + " over itself");
            }
            continue;
        }
        const bool flipped = a > b;
        const int key = flipped ? b * 4 + a : a * 4 + b;
        masks[key] &= detail::allowed_signs(s, flipped);
        if (masks[key] == 0) {
            throw Error(ErrorCode::ContradictoryStatements,
                        "contradictory statements about " + to_string(s.preferred) + " and " +
                            to_string(s.other));
        }
    }
}

inline bool statements_hold(std::span<const PreferenceStatement> statements, double p_red,
                            const UtilityFunction& u) {
    return std::all_of(statements.begin(), statements.end(), [&](const PreferenceStatement& s) {
        return relation_holds(s.relation,
                              two_urn_eu(s.preferred, p_red, u) - two_urn_eu(s.other, p_red, u));
    });
}

inline constexpr double kGridStep = 1e-4;

struct GridSearchResult {
    std::size_t hits = 0;
    std::optional<double> first_hit;
};

/// Brute-force oracle: evaluates every statement by classical EU at
/// p_R = k * 1e-4 for k = 0..10000.
inline GridSearchResult grid_search(std::span<const PreferenceStatement> statements,
                                    const UtilityFunction& u) {
    constexpr int kSteps = 10000;
    GridSearchResult out;
    for (int k = 0; k <= kSteps; ++k) {
        const double p = static_cast<double>(k) / kSteps;
        if (statements_hold(statements, p, u)) {
            ++out.hits;
            if (!out.first_hit) {
                out.first_hit = p;
            }
        }
    }
    return out;
}

struct FeasibilityResult {
    bool feasible = false;
    Interval region;                 // analytic feasible set for p_R
    std::optional<double> witness;   // p_R of a verified witness measure
    bool witness_verified = false;
    std::size_t grid_hits = 0;
    bool oracle_agrees = false;
};

/// Decides whether some Kolmogorovian measure (p_R, 1 - p_R) on urn I makes
/// every statement hold under classical EU. The analytic region is
/// cross-checked against the grid oracle; a witness is re-verified by EU.
inline FeasibilityResult seut_feasible(std::span<const PreferenceStatement> statements,
                                       const UtilityFunction& u = UtilityFunction::normalized()) {
    check_consistent(statements);
    if (!(u(100.0) > u(0.0))) {
        throw Error(ErrorCode::InvalidUtility, "u(100) must exceed u(0)");
    }
    FeasibilityResult r;
    for (const auto& s : statements) {
        r.region = r.region.intersect(statement_region(s));
    }
    r.feasible = !r.region.empty();
    if (r.feasible) {
        r.witness = r.region.witness();
        r.witness_verified = statements_hold(statements, *r.witness, u);
    }
    const GridSearchResult grid = grid_search(statements, u);
    r.grid_hits = grid.hits;
    r.oracle_agrees = (grid.hits > 0) == r.feasible;
    return r;
}

} // namespace qeu::seut
