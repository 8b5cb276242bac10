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
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pst/binomial.hpp"
#include "pst/bounds.hpp"
#include "pst/errors.hpp"
#include "pst/noise_model.hpp"
#include "pst/postsel/circuit.hpp"
#include "pst/postsel/frame.hpp"
#include "pst/postsel/noise.hpp"
#include "pst/postsel/tableau.hpp"

namespace pst::postsel {

/// Default ceiling on enumerated fault paths.
inline constexpr std::uint64_t kPathBudget = 10'000'000;

/// Nonnegative sum in 128-bit fixed point (120 fractional bits). Integer
/// addition makes the total independent of summation order, so threaded
/// enumeration is bit-reproducible.
class FixedPointSum {
  public:
    void add(double w) { value_ += static_cast<unsigned __int128>(std::nearbyint(std::ldexp(w, kFracBits))); }
    FixedPointSum &operator+=(const FixedPointSum &o) {
        value_ += o.value_;
        return *this;
    }
    double value() const { return std::ldexp(static_cast<double>(value_), -kFracBits); }

  private:
    static constexpr int kFracBits = 120;
    unsigned __int128 value_ = 0;
};

/// Probability mass of each measurement-record flip vector, summed over
/// fault paths.
struct FlipDistribution {
    std::map<std::uint64_t, double> masses;
    /// Total mass enumerated (1 without truncation).
    double covered = 0;
    std::uint64_t paths = 0;
    std::optional<std::size_t> cutoff;
    /// Upper bound on the mass of paths heavier than the cutoff.
    double truncation_bound = 0;
};

namespace detail {

struct EnumLocation {
    std::size_t op;
    std::vector<std::uint64_t> flips;
    std::vector<double> ratios;  // p(term) / (1 - eps)
    std::vector<std::size_t> term_index;
};

inline std::vector<EnumLocation> enumeration_locations(const CliffordCircuit &circuit,
                                                       const StochasticPauliNoise &noise, bool include_zero) {
    const auto table = single_fault_flips(circuit, noise);
    std::vector<EnumLocation> out;
    for (std::size_t op : noise.noisy_locations()) {
        EnumLocation loc{op, {}, {}, {}};
        const double keep = 1 - noise.strength(op);
        for (std::size_t t = 0; t < noise.terms(op).size(); ++t) {
            const double p = noise.terms(op)[t].probability;
            if (p > 0 || include_zero) {
                loc.flips.push_back(table[op][t]);
                loc.ratios.push_back(p / keep);
                loc.term_index.push_back(t);
            }
        }
        if (!loc.flips.empty()) {
            out.push_back(std::move(loc));
        }
    }
    return out;
}

// Number of paths of each weight 0..max_weight (saturating at 2^64-1).
inline std::vector<std::uint64_t> path_counts(const std::vector<EnumLocation> &locs, std::size_t max_weight) {
    std::vector<unsigned __int128> c(max_weight + 1, 0);
    c[0] = 1;
    constexpr unsigned __int128 cap = ~std::uint64_t{0};
    for (const auto &loc : locs) {
        for (std::size_t r = max_weight; r >= 1; --r) {
            c[r] = std::min(cap, c[r] + c[r - 1] * loc.flips.size());
        }
    }
    return {c.begin(), c.end()};
}

inline std::uint64_t total_paths(const std::vector<EnumLocation> &locs, std::size_t max_weight) {
    unsigned __int128 t = 0;
    for (auto c : path_counts(locs, max_weight)) {
        t += c;
    }
    return static_cast<std::uint64_t>(std::min<unsigned __int128>(t, ~std::uint64_t{0}));
}

}  // namespace detail

/// Sum_{r > cutoff} C(S, r) eps_max^r (1 - eps_min)^(S - r): bounds the
/// mass of all paths with more than `cutoff` faults.
inline double truncation_remainder(const StochasticPauliNoise &noise, std::size_t cutoff) {
    const auto locs = noise.noisy_locations();
    const std::uint64_t S = locs.size();
    if (cutoff >= S) {
        return 0.0;
    }
    double e_max = 0;
    double e_min = 1;
    for (std::size_t op : locs) {
        e_max = std::max(e_max, noise.strength(op));
        e_min = std::min(e_min, noise.strength(op));
    }
    if (e_max == 0) {
        return 0.0;
    }
    long double acc = 0;
    for (std::uint64_t r = cutoff + 1; r <= S; ++r) {
        acc += std::exp(log_choose(S, r) + r * std::log(static_cast<long double>(e_max)) +
                        (S - r) * std::log1p(-static_cast<long double>(e_min)));
    }
    return static_cast<double>(acc);
}

/// Largest weight cutoff whose enumeration fits in `budget` paths, or
/// nullopt when every path fits.
inline std::optional<std::size_t> auto_cutoff(const CliffordCircuit &circuit, const StochasticPauliNoise &noise,
                                              std::uint64_t budget = kPathBudget) {
    const auto locs = detail::enumeration_locations(circuit, noise, false);
    if (detail::total_paths(locs, locs.size()) <= budget) {
        return std::nullopt;
    }
    std::size_t c = 0;
    while (c + 1 < locs.size() && detail::total_paths(locs, c + 1) <= budget) {
        ++c;
    }
    return c;
}

/// Enumerates every fault path with at most `cutoff` faults (all paths when
/// empty), propagating each by XOR of single-fault flips. Paths are split
/// across threads by the index of their first fault.
inline FlipDistribution enumerate_fault_paths(const CliffordCircuit &circuit, const StochasticPauliNoise &noise,
                                              std::optional<std::size_t> cutoff = std::nullopt,
                                              std::uint64_t budget = kPathBudget) {
    const auto locs = detail::enumeration_locations(circuit, noise, false);
    const std::size_t max_weight = cutoff ? std::min(*cutoff, locs.size()) : locs.size();
    const std::uint64_t n_paths = detail::total_paths(locs, max_weight);
    if (n_paths > budget) {
        throw ResourceError("fault-path enumeration needs " + std::to_string(n_paths) + " paths, budget is " +
                            std::to_string(budget) + "; use a weight cutoff");
    }
    long double log_base = 0;
    for (std::size_t op = 0; op < noise.size(); ++op) {
        log_base += std::log1p(-static_cast<long double>(noise.strength(op)));
    }
    const double base = static_cast<double>(std::exp(log_base));

    using Acc = std::unordered_map<std::uint64_t, FixedPointSum>;
    const unsigned threads = std::max(1u, std::min<unsigned>(worker_threads(), static_cast<unsigned>(locs.size())));
    std::vector<Acc> acc(threads);
    acc[0][0].add(base);

    auto recurse = [&](auto &&self, Acc &out, std::size_t start, std::size_t left, std::uint64_t flip,
                       double w) -> void {
        for (std::size_t i = start; i < locs.size(); ++i) {
            const auto &loc = locs[i];
            for (std::size_t t = 0; t < loc.flips.size(); ++t) {
                const std::uint64_t f = flip ^ loc.flips[t];
                const double wt = w * loc.ratios[t];
                out[f].add(wt);
                if (left > 1) {
                    self(self, out, i + 1, left - 1, f, wt);
                }
            }
        }
    };
    auto work = [&](unsigned tid) {
        if (max_weight == 0) {
            return;
        }
        for (std::size_t i = tid; i < locs.size(); i += threads) {
            const auto &loc = locs[i];
            for (std::size_t t = 0; t < loc.flips.size(); ++t) {
                const double wt = base * loc.ratios[t];
                acc[tid][loc.flips[t]].add(wt);
                if (max_weight > 1) {
                    recurse(recurse, acc[tid], i + 1, max_weight - 1, loc.flips[t], wt);
                }
            }
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(work, t);
        }
    }

    std::map<std::uint64_t, FixedPointSum> merged;
    for (const auto &a : acc) {
        for (const auto &[f, m] : a) {
            merged[f] += m;
        }
    }
    FlipDistribution out;
    FixedPointSum total;
    for (const auto &[f, m] : merged) {
        out.masses[f] = m.value();
        total += m;
    }
    out.covered = total.value();
    out.paths = n_paths;
    if (cutoff && *cutoff < locs.size()) {
        out.cutoff = cutoff;
        out.truncation_bound = truncation_remainder(noise, *cutoff);
    }
    return out;
}

/// Exact flip distribution over all paths by convolving the independent
/// per-location flip distributions; no enumeration of paths.
inline FlipDistribution convolve_fault_paths(const CliffordCircuit &circuit, const StochasticPauliNoise &noise) {
    const auto locs = detail::enumeration_locations(circuit, noise, false);
    std::map<std::uint64_t, double> dist{{0, 1.0}};
    for (const auto &loc : locs) {
        const double keep = 1 - noise.strength(loc.op);
        std::map<std::uint64_t, double> next;
        for (const auto &[f, m] : dist) {
            next[f] += m * keep;
            for (std::size_t t = 0; t < loc.flips.size(); ++t) {
                next[f ^ loc.flips[t]] += m * loc.ratios[t] * keep;
            }
        }
        dist = std::move(next);
    }
    FlipDistribution out;
    out.masses = std::move(dist);
    for (const auto &[f, m] : out.masses) {
        out.covered += m;
    }
    return out;
}

/// Decides whether a record flip leaves the postselected output ideal:
/// either a syndrome fires (the run is discarded) or the (x, y) shift maps
/// the ideal distribution onto itself.
class OutcomeClassifier {
  public:
    OutcomeClassifier(const CliffordCircuit &circuit, const IdealOutcomes &ideal) : layout_(circuit.layout()) {
        if (layout_.z_bits(ideal.constant) != 0) {
            throw InputError("a syndrome bit is nonzero in the noiseless circuit");
        }
        for (std::uint64_t g : ideal.generators) {
            if (layout_.z_bits(g) != 0) {
                throw InputError("a syndrome bit is random in the noiseless circuit");
            }
            span_.insert(layout_.xy_bits(g));
        }
        xy_constant_ = layout_.xy_bits(ideal.constant);
    }

    bool rejected(std::uint64_t flip) const { return layout_.z_bits(flip) != 0; }
    bool benign(std::uint64_t flip) const { return !rejected(flip) && span_.contains(layout_.xy_bits(flip)); }
    bool sparse(std::uint64_t flip) const { return rejected(flip) || span_.contains(layout_.xy_bits(flip)); }

    /// Ideal p(x, y): uniform on constant + span.
    std::map<std::uint64_t, double> ideal_distribution() const {
        const std::size_t k = span_.rank();
        if (k > 24) {
            throw ResourceError("ideal output support too large to tabulate");
        }
        std::map<std::uint64_t, double> out;
        const double p = std::ldexp(1.0, -static_cast<int>(k));
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
            std::uint64_t v = xy_constant_;
            for (std::size_t j = 0; j < k; ++j) {
                if ((mask >> j) & 1) {
                    v ^= span_.rows()[j];
                }
            }
            out[v] = p;
        }
        return out;
    }

    const PortLayout &layout() const { return layout_; }

  private:
    PortLayout layout_;
    Gf2Basis span_;
    std::uint64_t xy_constant_ = 0;
};

/// Output of the exact postselection simulation. Distribution keys pack x
/// in the low bits and y above them; z keys pack syndrome measurements
/// then checks.
struct SimReport {
    int nx = 0;
    int ny = 0;
    int nz = 0;
    std::map<std::uint64_t, double> ideal;
    std::map<std::pair<std::uint64_t, std::uint64_t>, double> joint;
    std::map<std::uint64_t, double> conditional;
    /// Probability of the null syndrome (enumerated mass only).
    double q_accept = 0;
    bool conditional_defined = true;
    /// l1 distance between ideal and postselected distributions, from the
    /// enumerated paths.
    double delta = 0;
    /// delta plus the worst-case effect of unenumerated paths.
    double delta_upper = 0;
    double rejected_mass = 0;
    double benign_mass = 0;
    double faulty_mass = 0;
    double sparse_mass() const { return rejected_mass + benign_mass; }
    /// Fraction of accepted mass that reproduces the ideal distribution.
    double beta() const { return q_accept > 0 ? benign_mass / q_accept : 0.0; }
    double covered_mass = 0;
    std::uint64_t paths = 0;
    std::optional<std::size_t> cutoff;
    double truncation_bound = 0;
};

inline SimReport build_report(const CliffordCircuit &circuit, const FlipDistribution &flips) {
    const OutcomeClassifier cls(circuit, ideal_outcomes(circuit));
    const auto &layout = cls.layout();
    SimReport rep;
    rep.nx = layout.nx();
    rep.ny = layout.ny();
    rep.nz = layout.nz();
    rep.ideal = cls.ideal_distribution();
    rep.covered_mass = flips.covered;
    rep.paths = flips.paths;
    rep.cutoff = flips.cutoff;
    rep.truncation_bound = flips.truncation_bound;

    for (const auto &[f, m] : flips.masses) {
        const std::uint64_t fxy = layout.xy_bits(f);
        const std::uint64_t fz = layout.z_bits(f);
        for (const auto &[key, p] : rep.ideal) {
            rep.joint[{key ^ fxy, fz}] += m * p;
        }
        if (cls.rejected(f)) {
            rep.rejected_mass += m;
            continue;
        }
        (cls.benign(f) ? rep.benign_mass : rep.faulty_mass) += m;
        rep.q_accept += m;
        for (const auto &[key, p] : rep.ideal) {
            rep.conditional[key ^ fxy] += m * p;
        }
    }
    if (rep.q_accept <= 0) {
        rep.conditional_defined = false;
        rep.conditional.clear();
        rep.delta = rep.delta_upper = NAN;
        return rep;
    }
    for (auto &[key, p] : rep.conditional) {
        p /= rep.q_accept;
    }
    double delta = 0;
    for (const auto &[key, p] : rep.ideal) {
        auto it = rep.conditional.find(key);
        delta += std::abs(p - (it == rep.conditional.end() ? 0.0 : it->second));
    }
    for (const auto &[key, p] : rep.conditional) {
        if (!rep.ideal.contains(key)) {
            delta += p;
        }
    }
    rep.delta = delta;
    // Mixing in at most R more mass moves the conditional by at most 2R/q.
    rep.delta_upper = delta + (rep.cutoff ? 2 * rep.truncation_bound / rep.q_accept : 0.0);
    return rep;
}

/// Exact p(x, y, z), p(x, y | z = 0), q(z = 0) and Delta by fault-path
/// enumeration. With a cutoff, paths heavier than it are dropped and their
/// mass is bounded analytically.
inline SimReport exact_distributions(const CliffordCircuit &circuit, const StochasticPauliNoise &noise,
                                     std::optional<std::size_t> cutoff = std::nullopt,
                                     std::uint64_t budget = kPathBudget) {
    return build_report(circuit, enumerate_fault_paths(circuit, noise, cutoff, budget));
}

/// Lowest-weight fault path (structurally: zero-probability terms count)
/// that is accepted and changes the output distribution, searching
/// weights up to `max_weight`.
inline std::optional<FaultPath> find_faulty_path(const CliffordCircuit &circuit, const StochasticPauliNoise &noise,
                                                 std::size_t max_weight, std::uint64_t budget = kPathBudget) {
    const OutcomeClassifier cls(circuit, ideal_outcomes(circuit));
    const auto locs = detail::enumeration_locations(circuit, noise, true);
    if (detail::total_paths(locs, std::min(max_weight, locs.size())) > budget) {
        throw ResourceError("sparse-set search exceeds the path budget");
    }
    std::vector<std::pair<std::size_t, std::size_t>> chosen;
    std::optional<FaultPath> found;
    auto search = [&](auto &&self, std::size_t start, std::size_t left, std::uint64_t flip) -> bool {
        if (left == 0) {
            if (!cls.sparse(flip)) {
                FaultPath p;
                for (auto [i, t] : chosen) {
                    p.faults.push_back({locs[i].op, locs[i].term_index[t]});
                }
                found = std::move(p);
                return true;
            }
            return false;
        }
        for (std::size_t i = start; i + left <= locs.size(); ++i) {
            for (std::size_t t = 0; t < locs[i].flips.size(); ++t) {
                chosen.emplace_back(i, t);
                if (self(self, i + 1, left - 1, flip ^ locs[i].flips[t])) {
                    return true;
                }
                chosen.pop_back();
            }
        }
        return false;
    };
    for (std::size_t w = 0; w <= std::min(max_weight, locs.size()); ++w) {
        if (search(search, 0, w, 0)) {
            return found;
        }
    }
    return std::nullopt;
}

/// Smallest number of faults that can corrupt the postselected output.
inline std::optional<std::size_t> minimal_faulty_weight(const CliffordCircuit &circuit,
                                                        const StochasticPauliNoise &noise, std::size_t max_weight) {
    auto p = find_faulty_path(circuit, noise, max_weight);
    if (!p) {
        return std::nullopt;
    }
    return p->weight();
}

struct PostselectedBoundReport {
    std::uint64_t locations = 0;
    std::uint64_t min_weight = 0;
    bool precondition_ok = true;
    std::optional<FaultPath> offending_path;
    std::string offending_description;
    double delta = 0;  // upper end when truncated
    double bound = 0;
    double q_accept = 0;
    double q_lower_bound = 0;
    double delta_slack() const { return bound - delta; }
    double q_slack() const { return q_accept - q_lower_bound; }
    bool pass = false;
    SimReport sim;
};

/// Checks Delta <= 2 sum_{r >= w} C(S, r) (eps/(1-eps))^r and
/// q(z=0) >= prod (1 - eps_k) on one circuit, after confirming that every
/// path with fewer than w faults is sparse.
inline PostselectedBoundReport verify_theorem1(const CliffordCircuit &circuit, const StochasticPauliNoise &noise,
                                              const FaultySetSpec &spec, std::uint64_t budget = kPathBudget) {
    PostselectedBoundReport rep;
    std::vector<double> eps;
    for (std::size_t op : noise.noisy_locations()) {
        eps.push_back(noise.strength(op));
    }
    const auto profile = GateNoiseProfile::per_location(eps, NoiseKind::stochastic);
    rep.locations = profile.locations();
    rep.min_weight = spec.min_weight;
    spec.validate(rep.locations);

    if (spec.min_weight >= 1) {
        if (auto bad = find_faulty_path(circuit, noise, spec.min_weight - 1, budget)) {
            rep.precondition_ok = false;
            rep.offending_description = describe(circuit, noise, *bad);
            rep.offending_path = std::move(bad);
        }
    }
    rep.sim = exact_distributions(circuit, noise, auto_cutoff(circuit, noise, budget), budget);
    rep.delta = rep.sim.delta_upper;
    rep.bound = postselected_error_bound(profile, spec).value;
    rep.q_accept = rep.sim.q_accept;
    rep.q_lower_bound = postselection_prob_lower_bound(profile);
    rep.pass = rep.precondition_ok && rep.sim.conditional_defined && rep.delta <= rep.bound &&
               rep.q_accept >= rep.q_lower_bound * (1 - 1e-12);
    return rep;
}

}  // namespace pst::postsel
