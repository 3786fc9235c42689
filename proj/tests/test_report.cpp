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
#include <random>
#include <string>

#include <gtest/gtest.h>

#include "qeu/report.hpp"

namespace {

using nlohmann::json;
using namespace qeu;

TEST(Report, FitResultRoundTrips) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const double alpha = 0.45 * unit(rng);
        const double r12 = alpha + (1 - 2 * alpha) * unit(rng);
        const double r34 = alpha + (1 - 2 * alpha) * unit(rng);
        const auto f = two_urn::fit(r12, r34, alpha);
        const json doc = report::envelope("fit", f);
        const json parsed = json::parse(doc.dump());
        ASSERT_EQ(parsed, doc);
        ASSERT_EQ(parsed.at("result").get<two_urn::FitResult>(), f);
    }
}

TEST(Report, SummaryRoundTrips) {
    const auto s = data::summarize(data::synthesize({26, 10, 6, 158}));
    const json doc = s;
    EXPECT_EQ(json::parse(doc.dump()).get<data::SummaryRates>(), s);
}

TEST(Report, MatrixAndStateEncoding) {
    const auto r = two_urn::reproduce_published();
    const json m = report::matrix_json(r.model.m.matrix());
    ASSERT_EQ(m.size(), 2u);
    EXPECT_EQ(m[0][1].at("re").get<double>(), 0.0);
    EXPECT_GT(m[0][1].at("im").get<double>(), 0.2078);
    EXPECT_EQ(report::matrix_from_json(json::parse(m.dump())), r.model.m.matrix());
    const json v = report::state_json(r.model.states.v34);
    EXPECT_EQ(report::state_from_json(json::parse(v.dump())), r.model.states.v34);
}

TEST(Report, ReproductionDocument) {
    const auto r = two_urn::reproduce_published();
    const json doc = report::envelope("reproduce-paper", two_urn::reproduction_json(r));
    EXPECT_EQ(doc.at("schema"), "qeu-report/1");
    const auto& res = doc.at("result");
    EXPECT_EQ(res.at("fit").at("rounded").at("tau_m").get<double>(), 0.97711);
    EXPECT_EQ(res.at("model").at("rounded").at("M")[1][1].at("re").get<double>(), 0.95474);
    EXPECT_EQ(res.at("checks").size(), r.checks.size());
    EXPECT_EQ(json::parse(doc.dump()), doc);
    for (const auto& c : res.at("checks")) {
        const auto back = c.get<two_urn::Check>();
        EXPECT_EQ(back.pass, c.at("pass").get<bool>());
    }
}

TEST(Report, RoundingHelper) {
    EXPECT_EQ(report::round5(0.212745774), 0.21275);
    EXPECT_EQ(report::round5(0.9771075864), 0.97711);
}

} // namespace
