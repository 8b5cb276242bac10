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
#include <string>
#include <string_view>

#include "pst/errors.hpp"

namespace pst {

enum class SolveMethod { closed_form, bisection };

inline std::string_view to_string(SolveMethod m) {
    return m == SolveMethod::closed_form ? "closed-form" : "bisection";
}

struct Bracket {
    double lo = 0;
    double hi = 0;
};

/// A solved threshold. `residual` is the objective evaluated at `value`.
struct ThresholdResult {
    double value = 0;
    SolveMethod method = SolveMethod::bisection;
    double residual = 0;
    Bracket bracket;
};

/// Bisection for a root of `f` on [lo, hi]. The endpoints must bracket a
/// sign change (or hit an exact zero). Iterates until the bracket is
/// narrower than `abs_tol` or hits one ulp.
template <typename Function>
ThresholdResult bisect(Function &&f, double lo, double hi, double abs_tol) {
    double f_lo = f(lo);
    double f_hi = f(hi);
    if (f_lo == 0) {
        return {lo, SolveMethod::bisection, 0.0, {lo, lo}};
    }
    if (f_hi == 0) {
        return {hi, SolveMethod::bisection, 0.0, {hi, hi}};
    }
    if (std::signbit(f_lo) == std::signbit(f_hi) || std::isnan(f_lo) || std::isnan(f_hi)) {
        throw DomainError("bisect: interval [" + std::to_string(lo) + ", " + std::to_string(hi) +
                          "] does not bracket a root");
    }
    for (int iter = 0; iter < 2000 && hi - lo > abs_tol; ++iter) {
        double mid = lo + (hi - lo) / 2;
        if (mid == lo || mid == hi) {
            break;
        }
        double f_mid = f(mid);
        if (f_mid == 0) {
            return {mid, SolveMethod::bisection, 0.0, {mid, mid}};
        }
        if (std::signbit(f_mid) == std::signbit(f_lo)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
    }
    double mid = lo + (hi - lo) / 2;
    return {mid, SolveMethod::bisection, f(mid), {lo, hi}};
}

}  // namespace pst
