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

#include <gtest/gtest.h>

#include <cmath>

#include "pst/binomial.hpp"
#include "pst/bounds.hpp"
#include "support/gen.hpp"
#include "support/oracles.hpp"

namespace pst {
namespace {

TEST(BinomialTail, EmptySumPastTheEnd) { EXPECT_EQ(binomial_tail(10, 11, 0.37), 0.0); }

TEST(BinomialTail, FullSumIsBinomialTheorem) { EXPECT_NEAR(binomial_tail(10, 0, 1.0), 1024.0, 1e-9); }

TEST(BinomialTail, MatchesDirectSum) {
    EXPECT_NEAR(binomial_tail(10, 2, 0.010101), 0.004717244749150005, 1e-12);
    EXPECT_NEAR(binomial_tail(10, 2, 0.010101), oracle::direct_sum(10, 2, 10, 0.010101L), 1e-15);
}

TEST(BinomialTail, RejectsWeightBeyondEmptySum) {
    EXPECT_THROW(binomial_tail(10, 12, 0.1), DomainError);
    EXPECT_THROW(binomial_tail(10, 2, -0.1), DomainError);
}

TEST(BinomialTail, LargeS) {
    // Term-by-term in long double is still fine at this size.
    const double got = binomial_tail(400, 5, 1e-3);
    EXPECT_NEAR(got / oracle::direct_sum(400, 5, 400, 1e-3L), 1.0, 1e-10);
    EXPECT_TRUE(std::isfinite(binomial_tail(10000, 100, 0.02)));
}

TEST(BinomialTailProperty, TailPlusHeadIsPower) {
    gen::for_all(11, [](gen::Draw &d, int) {
        const auto S = d.integer(1, 200);
        const auto w = d.integer(0, S);
        const double x = d.log_uniform(1e-4, 3.0);
        const double head = w == 0 ? 0.0 : oracle::direct_sum(static_cast<unsigned>(S), 0, static_cast<unsigned>(w - 1), x);
        const double total = std::pow(1.0L + x, static_cast<long double>(S));
        EXPECT_NEAR((binomial_tail(S, w, x) + head) / total, 1.0, 1e-12) << "S=" << S << " w=" << w << " x=" << x;
    });
}

TEST(BernoulliTail, MatchesDirectSum) {
    gen::for_all(12, [](gen::Draw &d, int) {
        const auto M = static_cast<unsigned>(d.integer(1, 80));
        const auto from = static_cast<unsigned>(d.integer(0, M));
        const double e = d.uniform(0.0, 1.0);
        EXPECT_NEAR(bernoulli_tail(M, from, e), oracle::direct_sum(M, from, M, e, 1.0L - e), 1e-12);
    });
}

TEST(Choose, SmallValuesExact) {
    EXPECT_EQ(choose(5, 2), 10.0);
    EXPECT_EQ(choose(100, 3), 161700.0);
    EXPECT_EQ(choose(3, 4), 0.0);
}

TEST(GateNoiseProfile, Validation) {
    EXPECT_THROW(GateNoiseProfile::iid(1.0, 3), DomainError);
    EXPECT_THROW(GateNoiseProfile::per_location({0.1, -0.1}), DomainError);
    EXPECT_NO_THROW(GateNoiseProfile::per_location({0.0, 0.5}));
}

TEST(FaultySetSpec, Validation) {
    EXPECT_THROW(FaultySetSpec{0}.validate(10), DomainError);
    EXPECT_THROW(FaultySetSpec{11}.validate(10), DomainError);
    EXPECT_THROW((FaultySetSpec{1, {0, 3}}.validate(2)), DomainError);
    EXPECT_NO_THROW((FaultySetSpec{1, {0, 2, 1}}.validate(2)));
}

TEST(StandardBound, Examples) {
    EXPECT_EQ(standard_error_bound(GateNoiseProfile::iid(0.0, 10), {2}).value, 0.0);
    EXPECT_NEAR(standard_error_bound(GateNoiseProfile::iid(0.01, 10), {2}).value, 0.03507320181134368, 1e-12);
    EXPECT_NEAR(standard_error_bound(GateNoiseProfile::iid(0.01, 10), {1}).value, 0.40048010080480007, 1e-12);
    const double x = 2 * 0.01 / 0.99;
    EXPECT_NEAR(standard_error_bound(GateNoiseProfile::iid(0.01, 10), {2}).value,
                2 * std::pow(0.99, 10) * oracle::direct_sum(10, 2, 10, x), 1e-14);
}

TEST(StandardBound, ReportedUncapped) {
    const auto r = standard_error_bound(GateNoiseProfile::iid(0.3, 40), {1});
    EXPECT_GT(r.value, 1.0);
    EXPECT_EQ(r.regime, BoundRegime::standard);
}

TEST(PostselectedBound, Examples) {
    EXPECT_EQ(postselected_error_bound(GateNoiseProfile::iid(0.0, 10), {2}).value, 0.0);
    EXPECT_NEAR(postselected_error_bound(GateNoiseProfile::iid(0.01, 10), {2}).value, 0.009434508623559101, 1e-12);
    EXPECT_NEAR(postselected_error_bound(GateNoiseProfile::iid(0.05, 20), {3}).value, 0.4211248981904103, 1e-12);
    EXPECT_NEAR(postselected_error_bound(GateNoiseProfile::iid(0.05, 20), {3}).value,
                2 * oracle::direct_sum(20, 3, 20, 0.05L / 0.95L), 1e-14);
}

TEST(PostselectedBound, RefusesGeneralNoise) {
    EXPECT_THROW(postselected_error_bound(GateNoiseProfile::iid(0.01, 10, NoiseKind::general), {2}), DomainError);
    EXPECT_NO_THROW(standard_error_bound(GateNoiseProfile::iid(0.01, 10, NoiseKind::general), {2}));
}

TEST(PostselectedBound, ExplicitEnumerator) {
    // a_2 = 3, a_3 = 1 on S = 3 locations at the largest strength.
    const auto prof = GateNoiseProfile::per_location({0.01, 0.02, 0.04});
    const double x = 0.04 / 0.96;
    EXPECT_NEAR(postselected_error_bound(prof, {2, {0, 0, 3, 1}}).value, 2 * (3 * x * x + x * x * x), 1e-15);
    EXPECT_NEAR(postselected_error_bound(prof, {2, {0, 0, 1, 0}}).value, 2 * x * x, 1e-15);
}

TEST(PostselectionProbability, Examples) {
    EXPECT_EQ(postselection_prob_lower_bound(GateNoiseProfile::iid(0.0, 7)), 1.0);
    EXPECT_NEAR(postselection_prob_lower_bound(GateNoiseProfile::iid(0.01, 100)), 0.3660323412732295, 1e-13);
    EXPECT_NEAR(postselection_prob_lower_bound(GateNoiseProfile::per_location({0.1, 0.2})), 0.72, 1e-15);
}

TEST(BoundsProperty, PostselectedTailBelowStandardTail) {
    gen::for_all(21, [](gen::Draw &d, int) {
        const auto S = d.integer(1, 300);
        const auto w = d.integer(1, S);
        const double e = d.log_uniform(1e-5, 0.3);
        EXPECT_LE(binomial_tail(S, w, e / (1 - e)), binomial_tail(S, w, 2 * e / (1 - e)));
    });
}

TEST(BoundsProperty, MonotoneInEpsAndWeight) {
    gen::for_all(22, [](gen::Draw &d, int) {
        const auto S = d.integer(2, 200);
        const auto w = d.integer(1, S - 1);
        const double e1 = d.log_uniform(1e-5, 0.2);
        const double e2 = e1 * d.uniform(1.01, 2.0);
        for (auto bound : {&postselected_error_bound, &standard_error_bound}) {
            const double base = bound(GateNoiseProfile::iid(e1, S), {w}).value;
            EXPECT_LE(base, bound(GateNoiseProfile::iid(e2, S), {w}).value);
            EXPECT_GE(base, bound(GateNoiseProfile::iid(e1, S), {w + 1}).value);
        }
    });
}

// Decision-gap left-hand side, evaluated independently in long double.
long double gap_lhs(std::uint64_t n, long double kappa) {
    const long double p = std::pow(2.0L, -static_cast<long double>(6 * n + 4));
    const long double e = std::exp(-kappa);
    return 2 * e / ((p - e) * p) + e / p;
}

TEST(KappaBudget, Examples) {
    EXPECT_NEAR(kappa_budget(1), 15.25, 0.05);
    EXPECT_NEAR(kappa_budget(1), 15.249970007, 1e-3);
    EXPECT_NEAR(kappa_budget(2), 15.25 + 12 * std::log(2.0), 0.1);
    EXPECT_NEAR(kappa_budget(3), 31.884770485, 1e-3);
}

TEST(KappaBudget, SatisfiesInequalityBySubstitution) {
    for (std::uint64_t n : {1, 2, 3, 5, 8}) {
        for (double gap : {0.1, 0.5, 0.9}) {
            const double k = kappa_budget(n, gap);
            EXPECT_LT(gap_lhs(n, k), gap) << n;
            EXPECT_GE(gap_lhs(n, k - 1e-3), gap) << n;
        }
    }
}

TEST(KappaBudget, Monotone) {
    double prev = 0;
    for (std::uint64_t n = 1; n <= 30; ++n) {
        const double k = kappa_budget(n);
        EXPECT_GE(k, prev);
        prev = k;
    }
    EXPECT_LT(kappa_budget(2, 0.9), kappa_budget(2, 0.5));
    EXPECT_LT(kappa_budget(2, 0.99), kappa_budget(2, 0.9));
}

TEST(KappaBudget, Rejects) {
    EXPECT_THROW(kappa_budget(0), DomainError);
    EXPECT_THROW(kappa_budget(1, 1.0), DomainError);
    EXPECT_THROW(kappa_budget(1, 0.0), DomainError);
}

}  // namespace
}  // namespace pst
