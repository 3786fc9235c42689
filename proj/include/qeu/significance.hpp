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

// Exact two-sided binomial test, computed in log space.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "qeu/error.hpp"

namespace qeu::stats {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

/// log P(X = k) for X ~ Binomial(n, p).
inline double log_binomial_pmf(std::uint64_t k, std::uint64_t n, double p) {
    if (k > n) {
        return kNegInf;
    }
    if (p <= 0.0) {
        return k == 0 ? 0.0 : kNegInf;
    }
    if (p >= 1.0) {
        return k == n ? 0.0 : kNegInf;
    }
    const auto dn = static_cast<double>(n);
    const auto dk = static_cast<double>(k);
    return std::lgamma(dn + 1.0) - std::lgamma(dk + 1.0) - std::lgamma(dn - dk + 1.0) +
           dk * std::log(p) + (dn - dk) * std::log1p(-p);
}

/// log(sum exp(x_i)) without overflow.
inline double log_sum_exp(const std::vector<double>& xs) {
    const double top = xs.empty() ? kNegInf : *std::max_element(xs.begin(), xs.end());
    if (top == kNegInf) {
        return kNegInf;
    }
    double s = 0.0;
    for (double x : xs) {
        s += std::exp(x - top);
    }
    return top + std::log(s);
}

/// Two-sided p-value: total probability of outcomes no more likely than the
/// observed one. A relative slack of 1e-7 keeps symmetric outcomes together.
inline double binomial_two_sided(std::uint64_t k, std::uint64_t n, double p0) {
    if (n < 1 || k > n) {
        throw Error(ErrorCode::InvalidArgument, "binomial test needs 0 <= k <= n and n >= 1");
    }
    if (!(p0 >= 0.0 && p0 <= 1.0)) {
        throw Error(ErrorCode::InvalidArgument, "p0 outside [0, 1]");
    }
    const double observed = log_binomial_pmf(k, n, p0);
    const double threshold = observed + std::log1p(1e-7);
    std::vector<double> tail;
    std::vector<double> all;
    for (std::uint64_t i = 0; i <= n; ++i) {
        const double lp = log_binomial_pmf(i, n, p0);
        all.push_back(lp);
        if (lp <= threshold) {
            tail.push_back(lp);
        }
    }
    // Normalizing by the summed pmf gives exactly 1 when every outcome is in the tail.
    return std::min(1.0, std::exp(log_sum_exp(tail) - log_sum_exp(all)));
}

} // namespace qeu::stats
