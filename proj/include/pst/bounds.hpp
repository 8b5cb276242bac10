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
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "pst/binomial.hpp"
#include "pst/errors.hpp"

namespace pst {

/// Whether each noise map is a CPTP mixture (1 - eps) I + E with E itself
/// CPTP. Only stochastic noise admits the postselected bound.
enum class NoiseKind { stochastic, general };

inline std::string_view to_string(NoiseKind k) { return k == NoiseKind::stochastic ? "stochastic" : "general"; }

/// Per-location noise strengths eps_k (diamond-norm distance to identity).
class GateNoiseProfile {
  public:
    static GateNoiseProfile iid(double eps, std::uint64_t locations, NoiseKind kind = NoiseKind::stochastic) {
        GateNoiseProfile p;
        p.eps_.assign(locations, eps);
        p.kind_ = kind;
        p.validate();
        return p;
    }

    static GateNoiseProfile per_location(std::vector<double> eps, NoiseKind kind = NoiseKind::stochastic) {
        GateNoiseProfile p;
        p.eps_ = std::move(eps);
        p.kind_ = kind;
        p.validate();
        return p;
    }

    std::uint64_t locations() const { return eps_.size(); }
    const std::vector<double> &strengths() const { return eps_; }
    NoiseKind kind() const { return kind_; }

    double max_strength() const { return eps_.empty() ? 0.0 : *std::max_element(eps_.begin(), eps_.end()); }

    bool is_iid() const {
        return std::all_of(eps_.begin(), eps_.end(), [&](double e) { return e == eps_.front(); });
    }

  private:
    void validate() const {
        for (double e : eps_) {
            if (!(e >= 0 && e < 1)) {
                throw DomainError("noise strength must satisfy 0 <= eps < 1, got " + std::to_string(e));
            }
        }
    }

    std::vector<double> eps_;
    NoiseKind kind_ = NoiseKind::stochastic;
};

/// Paths with at least `min_weight` faulty locations are counted as faulty.
/// An explicit enumerator a_r (number of faulty paths of weight r) narrows
/// the faulty set when it is known.
struct FaultySetSpec {
    std::uint64_t min_weight = 1;
    std::vector<double> enumerator{};

    void validate(std::uint64_t S) const {
        if (min_weight < 1 || min_weight > S) {
            throw DomainError("faulty-set weight must satisfy 1 <= w <= S (w=" + std::to_string(min_weight) +
                              ", S=" + std::to_string(S) + ")");
        }
        if (enumerator.size() > S + 1) {
            throw DomainError("weight enumerator longer than S + 1");
        }
        for (std::size_t r = 0; r < enumerator.size(); ++r) {
            if (enumerator[r] < 0 || enumerator[r] > choose(S, r) * (1 + 1e-12)) {
                throw DomainError("enumerator coefficient a_" + std::to_string(r) + " exceeds C(S, r)");
            }
        }
    }
};

enum class BoundRegime { standard, postselected };

inline std::string_view to_string(BoundRegime r) { return r == BoundRegime::standard ? "standard" : "postselected"; }

/// An analytic bound on the l1 output error. Not capped at 1.
struct BoundReport {
    double value = 0;
    BoundRegime regime = BoundRegime::standard;
    GateNoiseProfile profile;
    FaultySetSpec spec;
};

namespace detail {

// Sum over the faulty set of x^weight, using the explicit enumerator when
// present and the full tail otherwise.
inline double faulty_weight_sum(std::uint64_t S, const FaultySetSpec &spec, double x) {
    if (spec.enumerator.empty()) {
        return binomial_tail(S, spec.min_weight, x);
    }
    long double acc = 0;
    for (std::size_t r = spec.min_weight; r < spec.enumerator.size(); ++r) {
        acc += spec.enumerator[r] * std::pow(static_cast<long double>(x), static_cast<long double>(r));
    }
    return static_cast<double>(acc);
}

inline double log_survival(const GateNoiseProfile &profile) {
    long double acc = 0;
    for (double e : profile.strengths()) {
        acc += std::log1p(-static_cast<long double>(e));
    }
    return static_cast<double>(acc);
}

}  // namespace detail

/// Lower bound on the probability of postselecting the null syndrome:
/// prod_k (1 - eps_k).
inline double postselection_prob_lower_bound(const GateNoiseProfile &profile) {
    return std::exp(detail::log_survival(profile));
}

/// Standard (no postselection) bound:
/// 2 prod_k (1 - eps_k) sum_faulty prod (2 eps_k / (1 - eps_k))^eta_k.
/// Heterogeneous strengths are bounded through eps_max in the ratio.
inline BoundReport standard_error_bound(const GateNoiseProfile &profile, const FaultySetSpec &spec) {
    const std::uint64_t S = profile.locations();
    spec.validate(S);
    const double e = profile.max_strength();
    const double x = 2 * e / (1 - e);
    const double value = 2 * postselection_prob_lower_bound(profile) * detail::faulty_weight_sum(S, spec, x);
    return {value, BoundRegime::standard, profile, spec};
}

/// Postselected bound: Delta < 2 sum_faulty prod (eps_k / (1 - eps_k))^eta_k.
/// Requires stochastic noise.
inline BoundReport postselected_error_bound(const GateNoiseProfile &profile, const FaultySetSpec &spec) {
    if (profile.kind() != NoiseKind::stochastic) {
        throw DomainError("postselected bound requires stochastic noise (E_k CPTP)");
    }
    const std::uint64_t S = profile.locations();
    spec.validate(S);
    const double e = profile.max_strength();
    const double x = e / (1 - e);
    return {2 * detail::faulty_weight_sum(S, spec, x), BoundRegime::postselected, profile, spec};
}

/// Smallest kappa (to 1e-3) such that the postBQP decision gap survives an
/// e^-kappa additive error: with p = 2^(-6n-4) a lower bound on p(y=0),
///   2 e^-k / ((p - e^-k) p) + e^-k / p < target_gap.
inline double kappa_budget(std::uint64_t n, double target_gap = 0.5) {
    if (n < 1) {
        throw DomainError("kappa_budget: n must be >= 1");
    }
    if (!(target_gap > 0 && target_gap < 1)) {
        throw DomainError("kappa_budget: target gap must lie in (0, 1)");
    }
    const double log_p = -static_cast<double>(6 * n + 4) * std::numbers::ln2;
    // Evaluated through e^-k / p and e^-k / p^2 so large n does not underflow.
    auto gap_at = [&](double kappa) -> double {
        const double a = std::exp(-kappa - log_p);
        if (a >= 1) {
            return INFINITY;
        }
        return 2 * std::exp(-kappa - 2 * log_p) / (1 - a) + a;
    };
    double lo = -log_p;
    double hi = lo + 1;
    while (!(gap_at(hi) < target_gap)) {
        lo = hi;
        hi += 2 * (hi - (-log_p));
    }
    while (hi - lo > 1e-3 / 2) {
        double mid = lo + (hi - lo) / 2;
        if (gap_at(mid) < target_gap) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

}  // namespace pst
