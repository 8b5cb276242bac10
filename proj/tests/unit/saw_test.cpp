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
#include <cstdlib>
#include <sstream>

#include "pst/saw.hpp"
#include "pst/surface_threshold.hpp"
#include "support/gen.hpp"
#include "support/oracles.hpp"

namespace pst {
namespace {

const std::vector<std::uint64_t> kKnownCounts{1,       6,        30,        150,        726,         3534,       16926,
                                              81390,   387966,   1853886,   8809878,    41934150,    198842742};

const SawTable &table12() {
    static const SawTable t = count_saws(12);
    return t;
}

TEST(CountSaws, SmallLengths) {
    const auto t = count_saws(4);
    ASSERT_EQ(t.counts.size(), 5u);
    EXPECT_EQ(t.counts[0], 1u);
    EXPECT_EQ(t.counts[1], 6u);
    EXPECT_EQ(t.counts[2], 30u);
    EXPECT_EQ(t.counts[3], 150u);
    EXPECT_EQ(t.counts[4], 726u);
    EXPECT_EQ(count_saws(1).counts, (std::vector<std::uint64_t>{1, 6}));
}

TEST(CountSaws, MatchesNaiveEnumeratorThroughEight) {
    const auto naive = oracle::naive_saw_counts(8);
    for (std::uint64_t l = 1; l <= 8; ++l) {
        EXPECT_EQ(count_saws(l).counts, std::vector<std::uint64_t>(naive.begin(), naive.begin() + l + 1)) << l;
    }
}

TEST(CountSaws, ReferenceEnumeratorAgrees) {
    EXPECT_EQ(count_saws_reference(9).counts, count_saws(9).counts);
    EXPECT_THROW(count_saws_reference(0), DomainError);
    EXPECT_THROW(count_saws_reference(20), ResourceError);
}

TEST(CountSaws, TwelveMatchesPublishedSequence) { EXPECT_EQ(table12().counts, kKnownCounts); }

TEST(CountSaws, IndependentOfThreadCount) {
    ::setenv("PST_THREADS", "1", 1);
    const auto one = count_saws(9);
    ::setenv("PST_THREADS", "4", 1);
    const auto four = count_saws(9);
    ::unsetenv("PST_THREADS");
    EXPECT_EQ(one.counts, four.counts);
}

TEST(CountSaws, Limits) {
    EXPECT_THROW(count_saws(0), DomainError);
    EXPECT_THROW(count_saws(kSawLengthCeiling + 1), ResourceError);
    EXPECT_THROW(count_saws(6, 5), ResourceError);
}

TEST(SawTableProperty, GrowthAndBound) {
    const auto &c = table12().counts;
    for (std::size_t l = 1; l + 1 < c.size(); ++l) {
        EXPECT_LE(c[l + 1], 5 * c[l]);
    }
}

TEST(SawBound, Report) {
    const auto rep = verify_saw_bound(table12());
    EXPECT_TRUE(rep.holds);
    EXPECT_FALSE(rep.first_violation);
    EXPECT_EQ(rep.ratios[1], 1.0);
    EXPECT_EQ(rep.ratios[2], 1.0);
    EXPECT_NEAR(rep.ratios[4], 726.0 / 750.0, 1e-15);
    EXPECT_NEAR(rep.ratios[4], 0.968, 1e-12);
    EXPECT_EQ(rep.max_ratio, 1.0);
    EXPECT_EQ(rep.max_ratio_length, 1u);
    // 150 = (6/5) 5^3 as well.
    EXPECT_EQ(rep.ratios[3], 1.0);
    for (std::size_t l = 4; l < rep.ratios.size(); ++l) {
        EXPECT_LT(rep.ratios[l], 1.0);
    }
}

TEST(SawBound, NamesViolation) {
    SawTable bad{{1, 6, 30, 151}};
    const auto rep = verify_saw_bound(bad);
    EXPECT_FALSE(rep.holds);
    ASSERT_TRUE(rep.first_violation);
    EXPECT_EQ(*rep.first_violation, 3u);
    EXPECT_THROW(verify_saw_bound(SawTable{{1}}), InputError);
}

TEST(TopologicalTail, ZeroAndDivergence) {
    EXPECT_EQ(topological_tail(0, 3, 1, table12()).total(), 0.0);
    EXPECT_THROW(topological_tail(0.1667, 3, 1, table12()), DomainError);
    EXPECT_THROW(topological_tail(0.2, 3, 1, table12()), DomainError);
    EXPECT_THROW(topological_tail(0.1, 0, 1, table12()), DomainError);
    EXPECT_THROW(topological_tail(0.1, 3, -1, table12()), DomainError);
    try {
        topological_tail(0.3, 3, 1, table12());
        FAIL();
    } catch (const DomainError &e) {
        EXPECT_NE(std::string(e.what()).find("1/5"), std::string::npos);
    }
}

TEST(TopologicalTail, NearBoundaryFiniteButLarge) {
    const double x = 0.2 - 1e-9;
    const auto t = topological_tail(x / (1 + x), 1, 1, table12());
    EXPECT_TRUE(std::isfinite(t.total()));
    EXPECT_GT(t.total(), 1e8);
}

TEST(TopologicalTail, TableExtensionConsistency) {
    const double eps = 0.05;
    const double x = eps / (1 - eps);
    const auto t12 = topological_tail(eps, 5, 1, table12());
    SawTable t13 = table12();
    t13.counts.push_back(943974510ull);
    const auto ext = topological_tail(eps, 5, 1, t13);
    long double partial = 0;
    for (std::size_t l = 5; l <= 12; ++l) {
        partial += kKnownCounts[l] * std::pow(static_cast<long double>(x), l);
    }
    EXPECT_NEAR(t12.partial, static_cast<double>(partial), 1e-15);
    EXPECT_NEAR(t12.closure, 1.2 * std::pow(5 * x, 13) / (1 - 5 * x), 1e-15);
    EXPECT_NEAR(ext.partial, t12.partial + 943974510.0 * std::pow(x, 13), 1e-15);
    EXPECT_LE(ext.total(), t12.total());
    EXPECT_LT(ext.closure, t12.closure);
}

TEST(TopologicalTailProperty, MonotoneInEpsAndPoly) {
    gen::for_all(51, [](gen::Draw &d, int) {
        const double e = d.uniform(0, 0.16);
        const double e2 = e + d.uniform(0, 0.166 - e);
        const auto dist = d.integer(1, 15);
        const double poly = d.uniform(0, 10);
        EXPECT_LE(topological_tail(e, dist, poly, table12()).total(), topological_tail(e2, dist, poly, table12()).total());
        EXPECT_LE(topological_tail(e, dist, poly, table12()).total(),
                  topological_tail(e, dist, poly + 1, table12()).total());
    });
}

TEST(TopologicalTailProperty, ClosureShrinksWithTableLength) {
    double prev = INFINITY;
    for (std::uint64_t L = 1; L <= 12; ++L) {
        SawTable t{std::vector<std::uint64_t>(kKnownCounts.begin(), kKnownCounts.begin() + L + 1)};
        const double closure = topological_tail(0.1, 1, 1, t).closure;
        EXPECT_LT(closure, prev);
        prev = closure;
    }
}

TEST(SingularTail, Examples) {
    SingularCountTable t{{{1, 2}, {2, 10}}};
    EXPECT_EQ(singular_tail(0, 2, t), 0.0);
    EXPECT_NEAR(singular_tail(0.1, 2, t), 2.0 / 9 + 10.0 / 81, 1e-15);
    EXPECT_NEAR(singular_tail(0.1, 2, t), 0.34568, 1e-5);
    SingularCountTable zeros{{{1, 0}, {2, 0}, {3, 0}}};
    EXPECT_EQ(singular_tail(0.1, 3, zeros), 0.0);
    EXPECT_THROW(singular_tail(0.1, 3, t), InputError);
    EXPECT_THROW(singular_tail(1.0, 1, t), DomainError);
}

TEST(SingularCounts, ParsesCsv) {
    std::istringstream in("l,count\n# comment\n1,2\n2,10\n\n3,0\n");
    const auto t = read_singular_counts(in);
    EXPECT_EQ(t.counts.size(), 3u);
    EXPECT_EQ(t.counts.at(2), 10.0);
    std::istringstream bad("1,2\n2,x\n");
    EXPECT_THROW(read_singular_counts(bad), InputError);
    std::istringstream neg("1,-2\n");
    EXPECT_THROW(read_singular_counts(neg), InputError);
    std::istringstream frac("1,2.5\n");
    EXPECT_THROW(read_singular_counts(frac), InputError);
    std::istringstream cols("1\n");
    EXPECT_THROW(read_singular_counts(cols), InputError);
}

TEST(SingularCounts, HeaderAfterLeadingComment) {
    std::istringstream in("# note\nl,count\n1,2\n");
    EXPECT_EQ(read_singular_counts(in).counts.at(1), 2.0);
    std::istringstream late("1,2\nl,count\n");
    EXPECT_THROW(read_singular_counts(late), InputError);
}

TEST(ChainWeight, Examples) {
    const ChainWeightParams p{0.1, 0.05};
    const double x = 0.1 / 0.9;
    const double y = 0.05 / 0.95;
    EXPECT_NEAR(chain_weight_exact(2, p), x * x + 2 * x * y, 1e-16);
    EXPECT_NEAR(chain_weight_exact(2, p), 0.0240416, 1e-7);
    EXPECT_NEAR(chain_weight_bound(2, p), 0.0240416, 1e-7);
    for (std::uint64_t l = 1; l <= 10; ++l) {
        EXPECT_NEAR(chain_weight_exact(l, {0.1, 0}), std::pow(x, l), 1e-15);
        EXPECT_NEAR(chain_weight_bound(l, {0.1, 0}), std::pow(x, l), 1e-15);
        if (l >= 2) {
            EXPECT_EQ(chain_weight_exact(l, {0, 0.2}), 0.0);
        }
    }
    EXPECT_THROW(chain_weight_exact(0, p), DomainError);
    EXPECT_THROW(chain_weight_bound(3, {1.0, 0.1}), DomainError);
}

TEST(ChainWeightProperty, FactorisedFormIsExact) {
    gen::for_all(52, [](gen::Draw &d, int) {
        const ChainWeightParams p{d.uniform(0.01, 0.3), d.uniform(0.01, 0.3)};
        const auto l = d.integer(1, 20);
        const double exact = chain_weight_exact(l, p);
        EXPECT_NEAR(chain_weight_bound(l, p) / exact, 1.0, 1e-12);
        EXPECT_LE(chain_weight_bound(l, p), std::pow(effective_epsilon(p.nu, p.mu), l) * (1 + 1e-12));
    });
}

}  // namespace
}  // namespace pst
