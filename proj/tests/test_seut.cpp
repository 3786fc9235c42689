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
#include <algorithm>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "qeu/seut.hpp"

namespace {

using qeu::Error;
using qeu::ErrorCode;
using namespace qeu::seut;

const Act kF1{{100.0, 0.0}};
const Act kF3{{0.0, 100.0}};

TEST(ClassicalEu, Examples) {
    const auto u = UtilityFunction::normalized();
    EXPECT_DOUBLE_EQ(classical_eu(kF1, KolmogorovMeasure::binary(0.5), u), 0.5);
    EXPECT_DOUBLE_EQ(classical_eu(kF1, KolmogorovMeasure::binary(0.3), u), 0.3);
    EXPECT_DOUBLE_EQ(classical_eu(kF3, KolmogorovMeasure::binary(0.3), u), 0.7);
}

TEST(ClassicalEu, Errors) {
    const auto u = UtilityFunction::normalized();
    EXPECT_THROW(classical_eu(Act{{1.0, 2.0, 3.0}}, KolmogorovMeasure::binary(0.5), u), Error);
    EXPECT_THROW(KolmogorovMeasure({0.5, 0.6}), Error);
    EXPECT_THROW(KolmogorovMeasure({-0.1, 1.1}), Error);
}

TEST(ClassicalEu, BoundedByPayoffUtilities) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> x(0.0, 100.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const auto u = UtilityFunction::power(0.5);
    for (int i = 0; i < 500; ++i) {
        const Act a{{x(rng), x(rng), x(rng)}};
        const double p = unit(rng);
        const double q = unit(rng) * (1.0 - p);
        const double w = classical_eu(a, KolmogorovMeasure({p, q, 1.0 - p - q}), u);
        const auto [lo, hi] = std::minmax({u(a.payoffs[0]), u(a.payoffs[1]), u(a.payoffs[2])});
        ASSERT_GE(w, lo - 1e-12);
        ASSERT_LE(w, hi + 1e-12);
    }
}

TEST(UtilityFunction, KindsAndValidation) {
    EXPECT_DOUBLE_EQ(UtilityFunction::normalized()(100.0), 1.0);
    EXPECT_DOUBLE_EQ(UtilityFunction::power(0.5)(25.0), 0.5);
    const auto t = UtilityFunction::tabulated({{0.0, 0.0}, {50.0, 0.8}, {100.0, 1.0}});
    EXPECT_DOUBLE_EQ(t(25.0), 0.4);
    EXPECT_DOUBLE_EQ(t(75.0), 0.9);
    EXPECT_THROW(t(150.0), Error);
    EXPECT_THROW(UtilityFunction::tabulated({{0.0, 1.0}, {100.0, 0.5}}), Error);
    EXPECT_THROW(UtilityFunction::linear(-1.0, 0.0), Error);
    EXPECT_THROW(UtilityFunction::from_endpoints(1.0, 1.0), Error);
    EXPECT_DOUBLE_EQ(UtilityFunction::normalized().affine(2.0, 3.0)(50.0), 4.0);
    EXPECT_THROW(UtilityFunction::normalized().affine(0.0, 1.0), Error);
}

TEST(EventPartition, Invariants) {
    EXPECT_EQ(two_urn_partition().size(), 2u);
    EXPECT_THROW(EventPartition({"Red"}), Error);
    EXPECT_THROW(EventPartition({"Red", "Red"}), Error);
}

TEST(SignCondition, Examples) {
    const auto u = UtilityFunction::normalized();
    EXPECT_EQ(ellsberg_sign_condition(0.3, u), (SignCondition{Choice12::PrefersF2, Choice34::PrefersF3}));
    EXPECT_EQ(ellsberg_sign_condition(0.5, u),
              (SignCondition{Choice12::Indifferent, Choice34::Indifferent}));
    EXPECT_EQ(ellsberg_sign_condition(0.7, u), (SignCondition{Choice12::PrefersF1, Choice34::PrefersF4}));
    EXPECT_THROW(ellsberg_sign_condition(1.5, u), Error);
}

TEST(SignCondition, AgreesWithClassicalEu) {
    const auto u = UtilityFunction::power(0.7);
    for (int k = 0; k <= 1000; ++k) {
        const double p = k / 1000.0;
        const auto s = ellsberg_sign_condition(p, u);
        const double d12 = two_urn_eu(EllsbergAct::F2, p, u) - two_urn_eu(EllsbergAct::F1, p, u);
        const double d34 = two_urn_eu(EllsbergAct::F4, p, u) - two_urn_eu(EllsbergAct::F3, p, u);
        ASSERT_EQ(s.first == Choice12::PrefersF2, d12 > 1e-12) << p;
        ASSERT_EQ(s.second == Choice34::PrefersF4, d34 > 1e-12) << p;
        // The Ellsberg pattern is never produced by any p_R.
        ASSERT_FALSE(s.first == Choice12::PrefersF2 && s.second == Choice34::PrefersF4);
    }
}

TEST(SeutFeasible, EllsbergPatternIsInfeasible) {
    const std::vector<PreferenceStatement> st = {{EllsbergAct::F2, EllsbergAct::F1},
                                                 {EllsbergAct::F4, EllsbergAct::F3}};
    const auto r = seut_feasible(st);
    EXPECT_FALSE(r.feasible);
    EXPECT_EQ(r.grid_hits, 0u);
    EXPECT_TRUE(r.oracle_agrees);
    EXPECT_FALSE(r.witness.has_value());
}

TEST(SeutFeasible, OtherStrictPatternsHaveWitnesses) {
    const auto u = UtilityFunction::normalized();
    const std::vector<PreferenceStatement> above = {{EllsbergAct::F1, EllsbergAct::F2},
                                                    {EllsbergAct::F4, EllsbergAct::F3}};
    auto r = seut_feasible(above, u);
    ASSERT_TRUE(r.feasible);
    EXPECT_GT(*r.witness, 0.5);
    EXPECT_TRUE(r.witness_verified);
    EXPECT_TRUE(r.oracle_agrees);
    // Witness 0.7 satisfies the pattern too.
    EXPECT_TRUE(statements_hold(above, 0.7, u));

    const std::vector<PreferenceStatement> below = {{EllsbergAct::F2, EllsbergAct::F1},
                                                    {EllsbergAct::F3, EllsbergAct::F4}};
    r = seut_feasible(below, u);
    ASSERT_TRUE(r.feasible);
    EXPECT_LT(*r.witness, 0.5);
    EXPECT_TRUE(r.witness_verified);
    EXPECT_TRUE(statements_hold(below, 0.3, u));

    const std::vector<PreferenceStatement> reversed = {{EllsbergAct::F1, EllsbergAct::F2},
                                                       {EllsbergAct::F3, EllsbergAct::F4}};
    r = seut_feasible(reversed, u);
    EXPECT_FALSE(r.feasible);
    EXPECT_TRUE(r.oracle_agrees);
}

TEST(SeutFeasible, IndifferencePinsHalf) {
    const std::vector<PreferenceStatement> st = {
        {EllsbergAct::F1, EllsbergAct::F2, Relation::Indifferent},
        {EllsbergAct::F4, EllsbergAct::F3, Relation::Weak}};
    const auto r = seut_feasible(st);
    ASSERT_TRUE(r.feasible);
    EXPECT_DOUBLE_EQ(*r.witness, 0.5);
    EXPECT_EQ(r.grid_hits, 1u);
}

TEST(SeutFeasible, ContradictionsAreErrors) {
    const std::vector<PreferenceStatement> st = {{EllsbergAct::F2, EllsbergAct::F1},
                                                 {EllsbergAct::F1, EllsbergAct::F2}};
    try {
        (void)seut_feasible(st);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ContradictoryStatements);
    }
    const std::vector<PreferenceStatement> st2 = {
        {EllsbergAct::F2, EllsbergAct::F1},
        {EllsbergAct::F1, EllsbergAct::F2, Relation::Indifferent}};
    EXPECT_THROW((void)seut_feasible(st2), Error);
    const std::vector<PreferenceStatement> weak_both = {
        {EllsbergAct::F2, EllsbergAct::F1, Relation::Weak},
        {EllsbergAct::F1, EllsbergAct::F2, Relation::Weak}};
    EXPECT_NO_THROW((void)seut_feasible(weak_both));
}

TEST(SeutProperties, GridOracleAgreesWithAnalytic) {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<int> act(0, 3);
    std::uniform_int_distribution<int> rel(0, 2);
    std::uniform_int_distribution<int> count(1, 4);
    const auto u = UtilityFunction::from_endpoints(-2.0, 5.0);
    int checked = 0;
    while (checked < 1000) {
        std::vector<PreferenceStatement> st;
        const int n = count(rng);
        for (int i = 0; i < n; ++i) {
            st.push_back({static_cast<EllsbergAct>(act(rng)), static_cast<EllsbergAct>(act(rng)),
                          static_cast<Relation>(rel(rng))});
        }
        FeasibilityResult r;
        try {
            r = seut_feasible(st, u);
        } catch (const Error& e) {
            ASSERT_EQ(e.code(), ErrorCode::ContradictoryStatements);
            continue;
        }
        ASSERT_TRUE(r.oracle_agrees);
        if (r.feasible) {
            ASSERT_TRUE(r.witness_verified);
        }
        ++checked;
    }
}

TEST(SeutProperties, AffineUtilityPreservesArgmax) {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> x(0.0, 100.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> scale(0.01, 50.0);
    std::uniform_real_distribution<double> shift(-100.0, 100.0);
    const auto u = UtilityFunction::power(0.6);
    for (int trial = 0; trial < 500; ++trial) {
        const auto measure = KolmogorovMeasure::binary(unit(rng));
        std::vector<Act> acts;
        for (int i = 0; i < 5; ++i) {
            acts.push_back(Act{{x(rng), x(rng)}});
        }
        const auto v = u.affine(scale(rng), shift(rng));
        const auto argmax = [&](const UtilityFunction& f) {
            std::size_t best = 0;
            for (std::size_t i = 1; i < acts.size(); ++i) {
                if (classical_eu(acts[i], measure, f) > classical_eu(acts[best], measure, f)) {
                    best = i;
                }
            }
            return best;
        };
        ASSERT_EQ(argmax(u), argmax(v));
    }
}

} // namespace
