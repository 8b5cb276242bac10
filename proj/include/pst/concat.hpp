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
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "pst/binomial.hpp"
#include "pst/errors.hpp"
#include "pst/root_finding.hpp"

namespace pst {

/// A concatenated code: each level-l gate is built from at most `gates`
/// level-(l-1) gates, protected by a distance-`distance` code.
class ConcatenationScheme {
  public:
    ConcatenationScheme(std::uint64_t gates, std::uint64_t distance, std::uint64_t levels = 1)
        : gates_(gates), distance_(distance), levels_(levels) {
        if (distance < 1 || gates < distance) {
            throw DomainError("concatenation scheme requires M >= d >= 1");
        }
    }

    std::uint64_t gates() const { return gates_; }
    std::uint64_t distance() const { return distance_; }
    /// Correctable errors, floor((d - 1) / 2).
    std::uint64_t correctable() const { return (distance_ - 1) / 2; }
    std::uint64_t levels() const { return levels_; }

  private:
    std::uint64_t gates_;
    std::uint64_t distance_;
    std::uint64_t levels_;
};

enum class ConcatMode { correction, detection };

inline std::string_view to_string(ConcatMode m) { return m == ConcatMode::correction ? "correction" : "detection"; }

/// Logical error rate one level up under error correction: more than t of
/// the M sub-gates fail.
inline double level_map_correction(double eps, const ConcatenationScheme &s) {
    return bernoulli_tail(s.gates(), s.correctable() + 1, eps);
}

/// Faulty rate one level up under error detection with postselection:
/// at least d of the M sub-gates fail.
inline double level_map_detection(double eps, const ConcatenationScheme &s) {
    return bernoulli_tail(s.gates(), s.distance(), eps);
}

inline double level_map(double eps, const ConcatenationScheme &s, ConcatMode mode) {
    return mode == ConcatMode::correction ? level_map_correction(eps, s) : level_map_detection(eps, s);
}

/// Leading coefficient of the level map: C = C(M, t+1) or C' = C(M, d).
inline double level_map_coefficient(const ConcatenationScheme &s, ConcatMode mode) {
    return mode == ConcatMode::correction ? choose(s.gates(), s.correctable() + 1) : choose(s.gates(), s.distance());
}

/// Large-M form of the same coefficient, M^k / k!.
inline double level_map_coefficient_asymptotic(const ConcatenationScheme &s, ConcatMode mode) {
    const std::uint64_t k = mode == ConcatMode::correction ? s.correctable() + 1 : s.distance();
    return std::exp(static_cast<double>(k) * std::log(static_cast<double>(s.gates())) -
                    std::lgamma(static_cast<double>(k) + 1));
}

struct ConcatThreshold {
    ConcatMode mode = ConcatMode::correction;
    /// 1 / C^(1/(k-1)) with the exact binomial coefficient; empty when the
    /// map is linear at the origin (k = 1).
    std::optional<double> rough;
    /// Same with the asymptotic M^k / k! coefficient.
    std::optional<double> rough_asymptotic;
    /// Nontrivial fixed point of the exact level map in (0, 1).
    std::optional<ThresholdResult> exact;
};

/// Rough and exact thresholds of the concatenation recursion.
inline ConcatThreshold threshold_estimate(const ConcatenationScheme &s, ConcatMode mode) {
    ConcatThreshold out;
    out.mode = mode;
    const std::uint64_t k = mode == ConcatMode::correction ? s.correctable() + 1 : s.distance();
    if (k >= 2) {
        const double inv = 1.0 / static_cast<double>(k - 1);
        out.rough = std::pow(level_map_coefficient(s, mode), -inv);
        out.rough_asymptotic = std::pow(level_map_coefficient_asymptotic(s, mode), -inv);
    } else {
        return out;
    }

    auto g = [&](double e) { return level_map(e, s, mode) - e; };
    // Below the threshold g < 0. Scan upward for the first sign change;
    // eps = 1 is always a trivial fixed point and is excluded.
    constexpr int kGrid = 384;
    double prev = 0;
    for (int i = 1; i < kGrid; ++i) {
        // Geometric grid resolves thresholds spanning many decades.
        double e = std::pow(10.0, -12.0 + 12.0 * i / kGrid);
        if (e >= 1) {
            break;
        }
        if (g(e) >= 0) {
            if (prev == 0) {
                return out;
            }
            // Absolute 1e-15 is below relative 1e-6 for any grid point.
            out.exact = bisect(g, prev, e, 1e-15);
            return out;
        }
        prev = e;
    }
    return out;
}

/// Threshold gain of postselected detection over correction for d = 3,
/// (sqrt(6) / M^(3/2)) / (2 / M^2) = (sqrt(6) / 2) sqrt(M). Asymptotic, so
/// M >= 10 is required.
inline double supremacy_gain(std::uint64_t M) {
    if (M < 10) {
        throw DomainError("supremacy_gain: asymptotic formula needs M >= 10");
    }
    const double m = static_cast<double>(M);
    return (std::sqrt(6.0) / std::pow(m, 1.5)) / (2.0 / (m * m));
}

/// eps^(0), ..., eps^(L) under repeated application of the level map.
inline std::vector<double> iterate_levels(double eps0, const ConcatenationScheme &s, ConcatMode mode) {
    if (!(eps0 >= 0 && eps0 <= 1)) {
        throw DomainError("iterate_levels: eps0 must lie in [0, 1]");
    }
    std::vector<double> out{eps0};
    for (std::uint64_t l = 0; l < s.levels(); ++l) {
        out.push_back(level_map(out.back(), s, mode));
    }
    return out;
}

}  // namespace pst
