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

#include <cmath>
#include <string_view>

#include "pst/errors.hpp"
#include "pst/noise_model.hpp"
#include "pst/root_finding.hpp"
#include "pst/saw.hpp"

namespace pst {

/// Critical values the threshold solvers compare against.
struct CriticalConstants {
    /// Convergence limit of the self-avoiding-walk series, 1/5.
    double saw_ratio_limit = kSawRatioLimit;
    /// Critical eps/(1-eps) around singular qubits.
    double singular_ratio_limit = kSingularCriticalRatio;
    /// Magic state distillation input-error threshold, (1 - sqrt(2)/2) / 2.
    double msd_threshold = (1 - std::sqrt(2.0) / 2) / 2;
};

/// Equivalent i.i.d. edge rate for single-edge rate nu and correlated-pair
/// rate mu: sqrt(x (x + 2y)) with x = nu/(1-nu), y = mu/(1-mu).
inline double effective_epsilon(double nu, double mu) {
    if (!(nu >= 0 && nu < 1 && mu >= 0 && mu < 1)) {
        throw DomainError("effective_epsilon: nu and mu must lie in [0, 1)");
    }
    const double x = nu / (1 - nu);
    const double y = mu / (1 - mu);
    return std::sqrt(x * (x + 2 * y));
}

/// The eps solving eps / (1 - eps) = ratio.
inline ThresholdResult ratio_threshold(double ratio, SolveMethod method = SolveMethod::closed_form) {
    if (!(ratio >= 0)) {
        throw DomainError("ratio_threshold: ratio must be nonnegative");
    }
    auto objective = [ratio](double e) { return e / (1 - e) - ratio; };
    if (method == SolveMethod::bisection) {
        return bisect(objective, 0.0, 1.0 - 1e-12, 1e-14);
    }
    const double v = ratio / (1 + ratio);
    return {v, SolveMethod::closed_form, objective(v), {v, v}};
}

struct PhenomenologicalThresholds {
    ThresholdResult topological;
    ThresholdResult singular;
};

/// i.i.d. edge-noise thresholds: topological region (series convergence)
/// and singular region (magic state distillation).
inline PhenomenologicalThresholds phenomenological_thresholds(const CriticalConstants &c = {},
                                                              SolveMethod method = SolveMethod::closed_form) {
    return {ratio_threshold(c.saw_ratio_limit, method), ratio_threshold(c.singular_ratio_limit, method)};
}

enum class EdgeOrder { leading, all_order };

inline std::string_view to_string(EdgeOrder o) { return o == EdgeOrder::leading ? "leading" : "all-order"; }

inline EdgeErrorModel edge_model(double pe, EdgeOrder order) {
    const auto params = CircuitNoiseParams::uniform(pe);
    return order == EdgeOrder::leading ? leading_order_edge_model(params) : all_order_edge_model(params);
}

/// Effective edge rate at uniform circuit noise pe.
inline double circuit_effective_epsilon(double pe, EdgeOrder order) {
    const auto m = edge_model(pe, order);
    return effective_epsilon(m.nu(), m.mu());
}

/// Uniform circuit-level noise pe at which the effective edge rate reaches
/// the singular-region limit. Bisection on a bracket whose monotonicity is
/// checked first.
inline ThresholdResult circuit_threshold(EdgeOrder order, const CriticalConstants &c = {}) {
    constexpr double lo = 0.0;
    constexpr double hi = 0.1;
    auto objective = [&](double pe) { return circuit_effective_epsilon(pe, order) - c.singular_ratio_limit; };
    constexpr int kChecks = 200;
    double prev = objective(lo);
    for (int i = 1; i <= kChecks; ++i) {
        double cur = objective(lo + (hi - lo) * i / kChecks);
        if (!(cur > prev)) {
            throw DomainError("circuit_threshold: objective not increasing on bracket");
        }
        prev = cur;
    }
    return bisect(objective, lo, hi, 1e-12);
}

/// Distance below the distillation threshold; positive means distillable.
inline double msd_margin(double q_singular, const CriticalConstants &c = {}) {
    if (!(q_singular >= 0 && q_singular <= 1)) {
        throw DomainError("msd_margin: q must lie in [0, 1]");
    }
    return c.msd_threshold - q_singular;
}

/// One row of the edge-rate sweep versus pe, both orders.
struct EdgeSweepRow {
    double pe = 0;
    EdgeErrorModel leading;
    EdgeErrorModel all_order;
    double eps_leading = 0;
    double eps_all_order = 0;
};

inline EdgeSweepRow edge_sweep_row(double pe) {
    EdgeSweepRow row{pe, edge_model(pe, EdgeOrder::leading), edge_model(pe, EdgeOrder::all_order), 0, 0};
    row.eps_leading = effective_epsilon(row.leading.nu(), row.leading.mu());
    row.eps_all_order = effective_epsilon(row.all_order.nu(), row.all_order.mu());
    return row;
}

}  // namespace pst
