// Copyright 2026 The pst Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "pst/errors.hpp"

namespace pst {

/// log C(n, k) in extended precision.
inline long double log_choose(std::uint64_t n, std::uint64_t k) {
    if (k > n) {
        return -INFINITY;
    }
    return std::lgamma(static_cast<long double>(n) + 1) - std::lgamma(static_cast<long double>(k) + 1) -
           std::lgamma(static_cast<long double>(n - k) + 1);
}

/// Exact C(n, k) as a double (rounded once from the log form for large n).
inline double choose(std::uint64_t n, std::uint64_t k) {
    if (k > n) {
        return 0.0;
    }
    k = std::min(k, n - k);
    if (n <= 60) {
        // Exact integer arithmetic; C(60, 30) < 2^63.
        std::uint64_t c = 1;
        for (std::uint64_t i = 1; i <= k; ++i) {
            c = c * (n - k + i) / i;
        }
        return static_cast<double>(c);
    }
    return static_cast<double>(std::exp(log_choose(n, k)));
}

namespace detail {

// Sums exp(log_terms) with max-term scaling.
inline double sum_log_terms(const std::vector<long double> &log_terms) {
    if (log_terms.empty()) {
        return 0.0;
    }
    long double top = *std::max_element(log_terms.begin(), log_terms.end());
    if (std::isinf(top) && top < 0) {
        return 0.0;
    }
    long double acc = 0;
    for (long double t : log_terms) {
        acc += std::exp(t - top);
    }
    return static_cast<double>(std::exp(top) * acc);
}

inline void check_tail_range(std::uint64_t n, std::uint64_t from, const char *what) {
    // from == n + 1 is the empty tail and evaluates to zero.
    if (from > n + 1) {
        throw DomainError(std::string(what) + ": lower index " + std::to_string(from) + " exceeds " +
                          std::to_string(n) + " + 1");
    }
}

}  // namespace detail

/// Sum_{r=w}^{S} C(S, r) x^r, the weight-enumerator tail shared by both
/// error bounds and the concatenation level maps.
inline double binomial_tail(std::uint64_t S, std::uint64_t w, double x) {
    detail::check_tail_range(S, w, "binomial_tail");
    if (!(x >= 0)) {
        throw DomainError("binomial_tail: x must be nonnegative");
    }
    if (x == 0) {
        return w == 0 ? 1.0 : 0.0;
    }
    const long double lx = std::log(static_cast<long double>(x));
    std::vector<long double> terms;
    terms.reserve(S + 1 - std::min(w, S + 1));
    for (std::uint64_t r = w; r <= S; ++r) {
        terms.push_back(log_choose(S, r) + static_cast<long double>(r) * lx);
    }
    return detail::sum_log_terms(terms);
}

/// Sum_{r=from}^{M} C(M, r) eps^r (1 - eps)^(M - r): probability that at
/// least `from` of M independent locations fail.
inline double bernoulli_tail(std::uint64_t M, std::uint64_t from, double eps) {
    detail::check_tail_range(M, from, "bernoulli_tail");
    if (!(eps >= 0 && eps <= 1)) {
        throw DomainError("bernoulli_tail: eps must lie in [0, 1]");
    }
    if (eps == 0) {
        return from == 0 ? 1.0 : 0.0;
    }
    if (eps == 1) {
        return from <= M ? 1.0 : 0.0;
    }
    const long double le = std::log(static_cast<long double>(eps));
    const long double l1 = std::log1p(-static_cast<long double>(eps));
    std::vector<long double> terms;
    for (std::uint64_t r = from; r <= M; ++r) {
        terms.push_back(log_choose(M, r) + static_cast<long double>(r) * le +
                        static_cast<long double>(M - r) * l1);
    }
    return detail::sum_log_terms(terms);
}

}  // namespace pst
