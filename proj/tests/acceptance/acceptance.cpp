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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "pst/pst.hpp"
#include "support/oracles.hpp"

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char *f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

Outcome phenom_topological() {
    const auto t0 = Clock::now();
    const double v = pst::phenomenological_thresholds().topological.value;
    const double secs = seconds_since(t0);
    return {std::abs(v - 0.167) <= 5e-4 && std::abs(v - 1.0 / 6) < 1e-15 && secs < 1.0,
            fmt("topological threshold %.6f, |v-0.167| = %.2e, %.3fs", v, std::abs(v - 0.167), secs)};
}

Outcome phenom_singular() {
    const double v = pst::phenomenological_thresholds().singular.value;
    return {std::abs(v - 0.118) <= 5e-4 && std::abs(v - 0.134 / 1.134) < 1e-15,
            fmt("singular threshold %.6f, |v-0.118| = %.2e", v, std::abs(v - 0.118))};
}

Outcome circuit_leading() {
    const auto t0 = Clock::now();
    const double v = pst::circuit_threshold(pst::EdgeOrder::leading).value;
    const double secs = seconds_since(t0);
    return {v >= 0.0263 && v <= 0.0265 && secs < 1.0, fmt("leading-order p_e = %.7f in [0.0263, 0.0265], %.3fs", v, secs)};
}

Outcome circuit_all_order() {
    const double lead = pst::circuit_threshold(pst::EdgeOrder::leading).value;
    const double v = pst::circuit_threshold(pst::EdgeOrder::all_order).value;
    return {v >= 0.0280 && v <= 0.0290 && v > lead,
            fmt("all-order p_e = %.7f in [0.0280, 0.0290], leading %.7f", v, lead)};
}

Outcome fig2() {
    using namespace pst;
    const auto t0 = Clock::now();
    bool ordered = true;
    bool gaps = true;
    bool mc = true;
    double worst_z = 0;
    std::array<double, 6> prev_gap{};
    prev_gap.fill(-1);
    for (int i = 1; i <= 8; ++i) {
        const double pe = 0.005 * i;
        const auto p = CircuitNoiseParams::uniform(pe);
        const auto lead = leading_order_edge_model(p);
        const auto all = all_order_edge_model(p);
        const auto s = sample_location_model(p, 1'000'000, 20260000 + static_cast<std::uint64_t>(i));
        for (auto c : kEdgeComponents) {
            const int k = static_cast<int>(c);
            ordered = ordered && all[c] <= lead[c];
            const double gap = lead[c] - all[c];
            gaps = gaps && gap > prev_gap[k];
            prev_gap[k] = gap;
            const double z = std::abs(s.estimate[c] - all[c]) / s.standard_error[c];
            worst_z = std::max(worst_z, z);
            mc = mc && z <= 4;
        }
    }
    const double secs = seconds_since(t0);
    return {ordered && gaps && mc && secs < 120,
            fmt("ordering %s, gap increasing %s, worst MC deviation %.2f sigma (limit 4), %.1fs", ordered ? "yes" : "no",
                gaps ? "yes" : "no", worst_z, secs)};
}

Outcome saw_suite() {
    const auto t0 = Clock::now();
    const auto naive = pst::oracle::naive_saw_counts(4);
    const auto table = pst::count_saws(12);
    const double secs = seconds_since(t0);
    const std::vector<std::uint64_t> want{6, 30, 150, 726};
    bool small = true;
    for (std::size_t l = 1; l <= 4; ++l) {
        small = small && table.counts[l] == want[l - 1] && naive[l] == want[l - 1];
    }
    const auto rep = pst::verify_saw_bound(table);
    const bool tight = rep.ratios[1] == 1.0 && rep.ratios[2] == 1.0;
    return {small && rep.holds && tight && secs < 600,
            fmt("C_1..C_4 = %llu,%llu,%llu,%llu; bound holds to l=12: %s; equality at l=1,2: %s; C_12 = %llu; %.2fs",
                static_cast<unsigned long long>(table.counts[1]), static_cast<unsigned long long>(table.counts[2]),
                static_cast<unsigned long long>(table.counts[3]), static_cast<unsigned long long>(table.counts[4]),
                rep.holds ? "yes" : "no", tight ? "yes" : "no", static_cast<unsigned long long>(table.counts[12]), secs)};
}

Outcome chain_identity() {
    double worst_rel = 0;
    bool below = true;
    for (int i = 0; i <= 29; ++i) {
        for (int j = 0; j <= 29; ++j) {
            const pst::ChainWeightParams p{0.01 + 0.01 * i, 0.01 + 0.01 * j};
            const double eps = pst::effective_epsilon(p.nu, p.mu);
            for (std::uint64_t l = 1; l <= 20; ++l) {
                const double exact = pst::chain_weight_exact(l, p);
                const double bound = pst::chain_weight_bound(l, p);
                worst_rel = std::max(worst_rel, std::abs(bound - exact) / exact);
                below = below && exact <= std::pow(eps, static_cast<double>(l)) * (1 + 1e-12);
            }
        }
    }
    return {worst_rel <= 1e-12 && below,
            fmt("max relative gap exact vs factorised %.2e (limit 1e-12); below eps^l everywhere: %s", worst_rel,
                below ? "yes" : "no")};
}

Outcome postselected_bound() {
    using namespace pst::postsel;
    const auto t0 = Clock::now();
    bool ok = true;
    std::string lines;
    const std::vector<std::pair<const char *, std::uint64_t>> circuits{{"baseline", 1}, {"parity", 1}, {"d2patch", 2}};
    for (const auto &[name, w] : circuits) {
        const auto c = builtin::by_name(name);
        for (double eps : {1e-3, 1e-2}) {
            const auto noise = depolarizing_noise(c, pst::CircuitNoiseParams::uniform(eps));
            const auto r = verify_theorem1(c, noise, {w});
            const double exact_delta = build_report(c, convolve_fault_paths(c, noise)).delta;
            const bool pass = r.pass && exact_delta <= r.bound;
            ok = ok && pass;
            lines += fmt(" %s@%g:Delta=%.3g<=%.3g,q=%.4f>=%.4f", name, eps, r.delta, r.bound, r.q_accept, r.q_lower_bound);
        }
    }
    const double secs = seconds_since(t0);
    return {ok && secs < 300, fmt("%.2fs;", secs) + lines};
}

Outcome concat_gain() {
    double worst = 0;
    for (std::uint64_t M : {16, 100, 400}) {
        worst = std::max(worst, std::abs(pst::supremacy_gain(M) / std::sqrt(static_cast<double>(M)) - std::sqrt(6.0) / 2));
    }
    bool ordered = true;
    std::uint64_t bad_m = 0;
    for (std::uint64_t M = 10; M <= 500; ++M) {
        const pst::ConcatenationScheme s(M, 3);
        const auto c = pst::threshold_estimate(s, pst::ConcatMode::correction);
        const auto d = pst::threshold_estimate(s, pst::ConcatMode::detection);
        if (!c.exact || !d.exact || d.exact->value < c.exact->value) {
            ordered = false;
            bad_m = M;
        }
    }
    return {worst <= 1e-9 && ordered, fmt("max |gain/sqrt(M) - sqrt(6)/2| = %.2e; detection >= correction for M in "
                                          "10..500: %s%s",
                                          worst, ordered ? "yes" : "no at M=", ordered ? "" : std::to_string(bad_m).c_str())};
}

Outcome bounds_engine() {
    double worst = 0;
    for (std::uint64_t S : {1, 5, 10, 50, 200}) {
        for (double x : {1e-3, 0.1, 1.0, 2.5}) {
            for (std::uint64_t w = 0; w <= S; w += std::max<std::uint64_t>(1, S / 7)) {
                const double head = w == 0 ? 0.0
                                           : pst::oracle::direct_sum(static_cast<unsigned>(S), 0,
                                                                     static_cast<unsigned>(w - 1), x);
                const double total = std::pow(1.0L + x, static_cast<long double>(S));
                worst = std::max(worst, std::abs((pst::binomial_tail(S, w, x) + head) / total - 1));
            }
        }
    }
    const double b = pst::postselected_error_bound(pst::GateNoiseProfile::iid(0.01, 10), {2}).value;
    const double oracle_b = 2 * pst::oracle::direct_sum(10, 2, 10, 0.01L / 0.99L);
    const double k = pst::kappa_budget(1, 0.5);
    const long double p = std::pow(2.0L, -10.0L);
    auto lhs = [&](long double kap) {
        const long double e = std::exp(-kap);
        return 2 * e / ((p - e) * p) + e / p;
    };
    const bool kappa_ok = std::abs(k - 15.25) <= 0.05 && lhs(k) < 0.5 && lhs(k - 1e-3) >= 0.5;
    return {worst <= 1e-12 && std::abs(b - 0.009434) <= 1e-6 && std::abs(b - oracle_b) <= 1e-12 && kappa_ok,
            fmt("identity max rel err %.2e; postselected bound %.9f (direct sum %.9f); kappa %.4f, substituted gap %.4f",
                worst, b, oracle_b, k, static_cast<double>(lhs(k)))};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria{
        {"phenomenological topological threshold", phenom_topological},
        {"singular-region threshold", phenom_singular},
        {"leading-order circuit threshold", circuit_leading},
        {"all-order circuit threshold", circuit_all_order},
        {"edge-rate sweep and Monte Carlo", fig2},
        {"self-avoiding walk suite", saw_suite},
        {"chain-weight identity", chain_identity},
        {"postselected error bound on built-in circuits", postselected_bound},
        {"concatenation gain", concat_gain},
        {"bounds engine", bounds_engine},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::printf("[%s] criterion %zu: %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                    o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
    return failed == 0 ? 0 : 1;
}
