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
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "pst/binomial.hpp"
#include "pst/errors.hpp"
#include "pst/noise_model.hpp"

namespace pst {

/// Walk-counting ratio beyond which the chain series diverges.
inline constexpr double kSawRatioLimit = 1.0 / 5.0;
/// Largest eps / (1 - eps) for which errors around a singular qubit stay
/// below the magic state distillation threshold.
inline constexpr double kSingularCriticalRatio = 0.134;
/// Default ceiling for exact enumeration.
inline constexpr std::uint64_t kSawLengthCeiling = 14;

/// counts[l] = number of origin-rooted self-avoiding walks of length l on
/// the simple cubic lattice.
struct SawTable {
    std::vector<std::uint64_t> counts;

    std::uint64_t max_length() const { return counts.empty() ? 0 : counts.size() - 1; }
};

namespace detail {

class SawWalker {
  public:
    explicit SawWalker(int max_len)
        : max_len_(max_len), side_(2 * max_len + 3), occupied_(static_cast<std::size_t>(side_) * side_ * side_, 0) {
        offsets_ = {1, -1, side_, -side_, side_ * side_, -side_ * side_};
    }

    int origin() const { return (side_ / 2) * (1 + side_ + side_ * side_); }
    const std::array<int, 6> &offsets() const { return offsets_; }
    std::uint8_t &at(int pos) { return occupied_[static_cast<std::size_t>(pos)]; }

    // Adds `weight` to counts[depth'] for every extension of the current
    // walk ending at `pos` with length `depth`.
    void extend(int pos, int depth, std::uint64_t weight, std::vector<std::uint64_t> &counts) {
        counts[static_cast<std::size_t>(depth)] += weight;
        if (depth == max_len_) {
            return;
        }
        for (int off : offsets_) {
            int next = pos + off;
            if (!occupied_[static_cast<std::size_t>(next)]) {
                occupied_[static_cast<std::size_t>(next)] = 1;
                extend(next, depth + 1, weight, counts);
                occupied_[static_cast<std::size_t>(next)] = 0;
            }
        }
    }

  private:
    int max_len_;
    int side_;
    std::vector<std::uint8_t> occupied_;
    std::array<int, 6> offsets_{};
};

struct SawPrefix {
    std::vector<int> sites;  // origin first
    std::uint64_t weight;
};

}  // namespace detail

/// Exact SAW counts C_0..C_{l_max}. The first step is fixed to +x (x6) and
/// the second to straight or a turn (x1, x4); the remaining subtrees are
/// split across worker threads and combined by integer addition.
inline SawTable count_saws(std::uint64_t l_max, std::uint64_t ceiling = kSawLengthCeiling) {
    if (l_max < 1) {
        throw DomainError("count_saws: l_max must be >= 1");
    }
    if (l_max > ceiling) {
        throw ResourceError("count_saws: l_max " + std::to_string(l_max) + " exceeds ceiling " +
                            std::to_string(ceiling));
    }
    const int L = static_cast<int>(l_max);
    SawTable table;
    table.counts.assign(l_max + 1, 0);
    table.counts[0] = 1;
    table.counts[1] = 6;
    if (L == 1) {
        return table;
    }

    detail::SawWalker proto(L);
    const int o = proto.origin();
    const auto &off = proto.offsets();
    std::vector<detail::SawPrefix> frontier = {{{o, o + off[0], o + 2 * off[0]}, 6},
                                               {{o, o + off[0], o + off[0] + off[2]}, 24}};
    table.counts[2] = 30;

    // Grow prefixes breadth-first to a depth with enough subtrees to share.
    const int split_depth = std::min(L, 6);
    for (int depth = 2; depth < split_depth; ++depth) {
        std::vector<detail::SawPrefix> next;
        for (const auto &p : frontier) {
            for (int step : off) {
                int site = p.sites.back() + step;
                if (std::find(p.sites.begin(), p.sites.end(), site) == p.sites.end()) {
                    auto sites = p.sites;
                    sites.push_back(site);
                    next.push_back({std::move(sites), p.weight});
                    table.counts[static_cast<std::size_t>(depth + 1)] += p.weight;
                }
            }
        }
        frontier = std::move(next);
    }
    if (split_depth == L) {
        return table;
    }

    const unsigned threads = std::min<unsigned>(worker_threads(), static_cast<unsigned>(frontier.size()));
    std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(l_max + 1, 0));
    auto work = [&](unsigned t) {
        detail::SawWalker walker(L);
        for (std::size_t i = t; i < frontier.size(); i += threads) {
            const auto &p = frontier[i];
            for (int s : p.sites) {
                walker.at(s) = 1;
            }
            walker.extend(p.sites.back(), split_depth, p.weight, partial[t]);
            for (int s : p.sites) {
                walker.at(s) = 0;
            }
            // extend() also counted the prefix itself at split_depth.
            partial[t][static_cast<std::size_t>(split_depth)] -= p.weight;
        }
    };
    if (threads <= 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(work, t);
        }
    }
    for (const auto &counts : partial) {
        for (std::size_t l = 0; l <= l_max; ++l) {
            table.counts[l] += counts[l];
        }
    }
    return table;
}

/// Plain depth-first count over all six directions at every step, with no
/// symmetry reduction and no threads. Slow; kept as a cross-check.
inline SawTable count_saws_reference(std::uint64_t l_max, std::uint64_t ceiling = kSawLengthCeiling) {
    if (l_max < 1) {
        throw DomainError("count_saws_reference: l_max must be >= 1");
    }
    if (l_max > ceiling) {
        throw ResourceError("count_saws_reference: l_max " + std::to_string(l_max) + " exceeds ceiling " +
                            std::to_string(ceiling));
    }
    detail::SawWalker walker(static_cast<int>(l_max));
    SawTable table;
    table.counts.assign(l_max + 1, 0);
    walker.at(walker.origin()) = 1;
    walker.extend(walker.origin(), 0, 1, table.counts);
    return table;
}

struct SawBoundReport {
    bool holds = true;
    /// C_l / ((6/5) 5^l) per length; index 0 unused.
    std::vector<double> ratios;
    double max_ratio = 0;
    std::uint64_t max_ratio_length = 0;
    std::optional<std::uint64_t> first_violation;
};

/// Checks C_l <= (6/5) 5^l for every l >= 1 in the table, exactly.
inline SawBoundReport verify_saw_bound(const SawTable &table) {
    if (table.counts.size() < 2) {
        throw InputError("verify_saw_bound: table has no lengths >= 1");
    }
    SawBoundReport rep;
    rep.ratios.assign(table.counts.size(), 0.0);
    unsigned __int128 pow5 = 1;
    for (std::size_t l = 1; l < table.counts.size(); ++l) {
        pow5 *= 5;
        // 5 C_l <= 6 5^l, in 128-bit integers.
        const unsigned __int128 lhs = static_cast<unsigned __int128>(table.counts[l]) * 5;
        const unsigned __int128 rhs = pow5 * 6;
        const double ratio = static_cast<double>(lhs) / static_cast<double>(rhs);
        rep.ratios[l] = ratio;
        if (ratio > rep.max_ratio) {
            rep.max_ratio = ratio;
            rep.max_ratio_length = l;
        }
        if (lhs > rhs && !rep.first_violation) {
            rep.holds = false;
            rep.first_violation = l;
        }
    }
    return rep;
}

struct TailBound {
    /// Sum over enumerated lengths l >= d.
    double partial = 0;
    /// Geometric remainder using C_l <= (6/5) 5^l past the table.
    double closure = 0;
    double total() const { return partial + closure; }
};

/// poly * sum_{l >= d} C_l (eps / (1 - eps))^l: the weight of error chains
/// long enough to wrap a defect in the topologically protected region.
inline TailBound topological_tail(double eps, std::uint64_t d, double poly_factor, const SawTable &table) {
    if (!(eps >= 0 && eps < 1)) {
        throw DomainError("topological_tail: eps must lie in [0, 1)");
    }
    if (d < 1) {
        throw DomainError("topological_tail: d must be >= 1");
    }
    if (poly_factor < 0) {
        throw DomainError("topological_tail: poly factor must be nonnegative");
    }
    const double x = eps / (1 - eps);
    if (!(x < kSawRatioLimit)) {
        throw DomainError("topological_tail: series diverges, eps/(1-eps) = " + std::to_string(x) +
                          " is not below 1/5");
    }
    TailBound out;
    if (x == 0) {
        return out;
    }
    long double partial = 0;
    for (std::uint64_t l = d; l <= table.max_length(); ++l) {
        partial += static_cast<long double>(table.counts[l]) * std::pow(static_cast<long double>(x), l);
    }
    const std::uint64_t first = std::max<std::uint64_t>(table.max_length() + 1, d);
    const double r = 5 * x;
    out.partial = poly_factor * static_cast<double>(partial);
    out.closure = poly_factor * 1.2 * std::pow(r, static_cast<double>(first)) / (1 - r);
    return out;
}

/// counts[l] = C'_l, walks of length l that form a logical error around a
/// singular qubit. Supplied as data.
struct SingularCountTable {
    std::map<std::uint64_t, double> counts;
};

/// Reads "l,count" rows; a header line and '#' comments are skipped.
inline SingularCountTable read_singular_counts(std::istream &in) {
    SingularCountTable table;
    std::string line;
    int line_no = 0;
    bool first_row = true;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') {
            continue;
        }
        const bool header_allowed = std::exchange(first_row, false);
        std::istringstream row(line);
        std::string l_field;
        std::string c_field;
        if (!std::getline(row, l_field, ',') || !std::getline(row, c_field)) {
            throw InputError("singular count CSV line " + std::to_string(line_no) + ": expected 'l,count'");
        }
        if (l_field.find_first_not_of(" \t0123456789") != std::string::npos) {
            if (header_allowed) {
                continue;
            }
            throw InputError("singular count CSV line " + std::to_string(line_no) + ": bad length");
        }
        try {
            std::size_t used = 0;
            double c = std::stod(c_field, &used);
            if (c < 0 || c != std::floor(c)) {
                throw InputError("singular count CSV line " + std::to_string(line_no) +
                                 ": count must be a nonnegative integer");
            }
            table.counts[std::stoull(l_field)] = c;
        } catch (const std::logic_error &) {
            throw InputError("singular count CSV line " + std::to_string(line_no) + ": unparseable");
        }
    }
    return table;
}

/// sum_{l=1}^{d} C'_l (eps / (1 - eps))^l.
inline double singular_tail(double eps, std::uint64_t d, const SingularCountTable &table) {
    if (!(eps >= 0 && eps < 1)) {
        throw DomainError("singular_tail: eps must lie in [0, 1)");
    }
    const double x = eps / (1 - eps);
    long double acc = 0;
    for (std::uint64_t l = 1; l <= d; ++l) {
        auto it = table.counts.find(l);
        if (it == table.counts.end()) {
            throw InputError("singular_tail: missing C'_" + std::to_string(l));
        }
        acc += it->second * std::pow(static_cast<long double>(x), l);
    }
    return static_cast<double>(acc);
}

/// Largest single-edge and correlated-pair error rates.
struct ChainWeightParams {
    double nu = 0;
    double mu = 0;

    void validate() const {
        if (!(nu >= 0 && nu < 1 && mu >= 0 && mu < 1)) {
            throw DomainError("chain weight parameters must lie in [0, 1)");
        }
    }
};

/// Weight of one length-l chain when up to floor(l/2) correlated pair
/// errors may each cover two neighbouring edges:
/// sum_k C(floor(l/2), k) 2^k x^(l-k) y^k, x = nu/(1-nu), y = mu/(1-mu).
inline double chain_weight_exact(std::uint64_t l, const ChainWeightParams &p) {
    p.validate();
    if (l < 1) {
        throw DomainError("chain weight needs l >= 1");
    }
    const double x = p.nu / (1 - p.nu);
    const double y = p.mu / (1 - p.mu);
    const std::uint64_t h = l / 2;
    long double acc = 0;
    for (std::uint64_t k = 0; k <= h; ++k) {
        acc += static_cast<long double>(choose(h, k)) * std::pow(2.0L, k) *
               std::pow(static_cast<long double>(x), l - k) * std::pow(static_cast<long double>(y), k);
    }
    return static_cast<double>(acc);
}

/// Factorised form x^(l - floor(l/2)) (x + 2y)^floor(l/2).
inline double chain_weight_bound(std::uint64_t l, const ChainWeightParams &p) {
    p.validate();
    if (l < 1) {
        throw DomainError("chain weight needs l >= 1");
    }
    const double x = p.nu / (1 - p.nu);
    const double y = p.mu / (1 - p.mu);
    const std::uint64_t h = l / 2;
    return std::pow(x, static_cast<double>(l - h)) * std::pow(x + 2 * y, static_cast<double>(h));
}

}  // namespace pst
