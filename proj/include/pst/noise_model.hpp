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
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "pst/errors.hpp"

namespace pst {

/// Physical circuit-level noise: depolarizing strengths of single- and
/// two-qubit gates, preparation and measurement flip probabilities.
struct CircuitNoiseParams {
    double p1 = 0;
    double p2 = 0;
    double pp = 0;
    double pm = 0;

    /// All four rates equal to `pe`.
    static CircuitNoiseParams uniform(double pe) { return {pe, pe, pe, pe}; }

    void validate() const {
        for (double p : {p1, p2, pp, pm}) {
            if (!(p >= 0 && p <= 1)) {
                throw DomainError("noise parameters must lie in [0, 1]");
            }
        }
    }
};

enum class EdgeComponent : int { q1 = 0, q2, q3, q12, q23, q31 };
inline constexpr std::array<EdgeComponent, 6> kEdgeComponents = {
    EdgeComponent::q1, EdgeComponent::q2, EdgeComponent::q3,
    EdgeComponent::q12, EdgeComponent::q23, EdgeComponent::q31};

inline std::string_view to_string(EdgeComponent c) {
    constexpr std::array<std::string_view, 6> names = {"q1", "q2", "q3", "q12", "q23", "q31"};
    return names[static_cast<int>(c)];
}

/// Error probabilities on the edges of the primal cubic lattice: q1, q2
/// (space-like), q3 (time-like), and the correlated two-edge rates.
struct EdgeErrorModel {
    double q1 = 0;
    double q2 = 0;
    double q3 = 0;
    double q12 = 0;
    double q23 = 0;
    double q31 = 0;

    double &operator[](EdgeComponent c) {
        switch (c) {
            case EdgeComponent::q1: return q1;
            case EdgeComponent::q2: return q2;
            case EdgeComponent::q3: return q3;
            case EdgeComponent::q12: return q12;
            case EdgeComponent::q23: return q23;
            case EdgeComponent::q31: return q31;
        }
        return q1;
    }
    double operator[](EdgeComponent c) const { return const_cast<EdgeErrorModel &>(*this)[c]; }

    /// Largest single-edge rate.
    double nu() const { return std::max({q1, q2, q3}); }
    /// Largest correlated-pair rate.
    double mu() const { return std::max({q12, q23, q31}); }
};

enum class SourceKind { single_qubit_gate, two_qubit_gate, preparation, measurement };

/// Probability that one location of the given kind flips a given edge.
/// A single-qubit depolarizing gate anticommutes with a fixed Pauli axis
/// for 2 of its 3 errors; a two-qubit gate flips a marginal axis for 4 of
/// its 15.
inline double trigger_probability(SourceKind kind, const CircuitNoiseParams &p) {
    switch (kind) {
        case SourceKind::single_qubit_gate:
            return 2 * p.p1 / 3;
        case SourceKind::two_qubit_gate:
            return 4 * p.p2 / 15;
        case SourceKind::preparation:
            return p.pp;
        case SourceKind::measurement:
            return p.pm;
    }
    return 0;
}

struct IncidenceTerm {
    SourceKind kind;
    int multiplicity;
};

/// Which circuit locations feed each edge component of the syndrome
/// lattice, and how many of them. The multiplicities reproduce the
/// leading-order coefficients of the depth-8 syndrome circuit.
struct LocationIncidence {
    std::array<std::vector<IncidenceTerm>, 6> terms;

    const std::vector<IncidenceTerm> &operator[](EdgeComponent c) const {
        return terms[static_cast<int>(c)];
    }

    static const LocationIncidence &surface_code() {
        static const LocationIncidence model = [] {
            using enum SourceKind;
            LocationIncidence m;
            m.terms[0] = {{two_qubit_gate, 6}, {single_qubit_gate, 3}};
            m.terms[1] = {{two_qubit_gate, 6}, {single_qubit_gate, 3}};
            m.terms[2] = {{two_qubit_gate, 4}, {preparation, 1}, {measurement, 1}};
            m.terms[3] = {{two_qubit_gate, 2}};
            m.terms[4] = {{two_qubit_gate, 2}, {single_qubit_gate, 1}};
            m.terms[5] = {{two_qubit_gate, 2}, {single_qubit_gate, 1}};
            return m;
        }();
        return model;
    }

    /// Per-location trigger probabilities for one component, expanded by
    /// multiplicity.
    std::vector<double> expand(EdgeComponent c, const CircuitNoiseParams &p) const {
        std::vector<double> out;
        for (const auto &t : (*this)[c]) {
            out.insert(out.end(), static_cast<std::size_t>(t.multiplicity), trigger_probability(t.kind, p));
        }
        return out;
    }
};

/// Probability that an odd number of independent events fire:
/// (1 - prod(1 - 2 p_i)) / 2.
inline double odd_parity_combination(std::span<const double> probs) {
    double prod = 1;
    for (double p : probs) {
        if (!(p >= 0 && p <= 0.5)) {
            throw DomainError("odd_parity_combination: probability " + std::to_string(p) +
                              " outside [0, 1/2]");
        }
        prod *= 1 - 2 * p;
    }
    return (1 - prod) / 2;
}

/// The linear (first-order) edge rates.
inline EdgeErrorModel leading_order_edge_model(const CircuitNoiseParams &params,
                                               const LocationIncidence &inc = LocationIncidence::surface_code()) {
    params.validate();
    EdgeErrorModel m;
    for (EdgeComponent c : kEdgeComponents) {
        double q = 0;
        for (const auto &t : inc[c]) {
            q += t.multiplicity * trigger_probability(t.kind, params);
        }
        m[c] = q;
    }
    return m;
}

/// Edge rates to all orders: odd-parity composition of the incident
/// locations.
inline EdgeErrorModel all_order_edge_model(const CircuitNoiseParams &params,
                                           const LocationIncidence &inc = LocationIncidence::surface_code()) {
    params.validate();
    EdgeErrorModel m;
    for (EdgeComponent c : kEdgeComponents) {
        auto probs = inc.expand(c, params);
        m[c] = odd_parity_combination(probs);
    }
    return m;
}

struct SampledEdgeModel {
    EdgeErrorModel estimate;
    EdgeErrorModel standard_error;
    std::uint64_t n_samples = 0;
};

/// Worker threads used by the parallel routines: PST_THREADS if set,
/// otherwise hardware concurrency.
inline unsigned worker_threads() {
    if (const char *env = std::getenv("PST_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) {
            return static_cast<unsigned>(n);
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace detail {

// Uniform double in [0, 1) from the top 53 bits; identical on every
// platform, unlike std::uniform_real_distribution.
inline double unit_uniform(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace detail

/// Monte Carlo estimate of the edge model: each sample draws every incident
/// location as an independent Bernoulli and XORs the outcomes onto its
/// edge. Samples are split into `shards` fixed RNG streams, so the result
/// depends only on (seed, shards), not on the thread count.
inline SampledEdgeModel sample_location_model(const CircuitNoiseParams &params, std::uint64_t n_samples,
                                              std::uint64_t seed, unsigned shards = 16,
                                              const LocationIncidence &inc = LocationIncidence::surface_code()) {
    params.validate();
    if (n_samples < 1) {
        throw DomainError("sample_location_model: n_samples must be >= 1");
    }
    shards = std::max(1u, shards);
    std::array<std::vector<double>, 6> probs;
    for (EdgeComponent c : kEdgeComponents) {
        probs[static_cast<int>(c)] = inc.expand(c, params);
    }

    using Counts = std::array<std::uint64_t, 6>;
    std::vector<Counts> shard_counts(shards, Counts{});
    auto run_shard = [&](unsigned s) {
        std::uint64_t n = n_samples / shards + (s < n_samples % shards ? 1 : 0);
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(s)};
        std::mt19937_64 rng(seq);
        Counts counts{};
        for (std::uint64_t i = 0; i < n; ++i) {
            for (int c = 0; c < 6; ++c) {
                bool parity = false;
                for (double p : probs[c]) {
                    parity ^= detail::unit_uniform(rng) < p;
                }
                counts[c] += parity;
            }
        }
        shard_counts[s] = counts;
    };

    unsigned threads = std::min(worker_threads(), shards);
    if (threads <= 1) {
        for (unsigned s = 0; s < shards; ++s) {
            run_shard(s);
        }
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                for (unsigned s = t; s < shards; s += threads) {
                    run_shard(s);
                }
            });
        }
    }

    SampledEdgeModel out;
    out.n_samples = n_samples;
    for (int c = 0; c < 6; ++c) {
        std::uint64_t total = 0;
        for (const auto &counts : shard_counts) {
            total += counts[c];
        }
        double q = static_cast<double>(total) / static_cast<double>(n_samples);
        auto comp = static_cast<EdgeComponent>(c);
        out.estimate[comp] = q;
        out.standard_error[comp] = std::sqrt(q * (1 - q) / static_cast<double>(n_samples));
    }
    return out;
}

}  // namespace pst
