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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pst/errors.hpp"
#include "pst/noise_model.hpp"
#include "pst/postsel/circuit.hpp"

namespace pst::postsel {

/// Single-qubit Pauli; bit 0 is the X component, bit 1 the Z component.
enum class Pauli : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

inline bool has_x(Pauli p) { return static_cast<std::uint8_t>(p) & 1; }
inline bool has_z(Pauli p) { return static_cast<std::uint8_t>(p) & 2; }

inline char pauli_char(Pauli p) { return "IXZY"[static_cast<int>(p)]; }

/// One error term of a location: a Pauli on each qubit of the location's
/// support (the second entry is ignored for single-qubit locations).
struct PauliTerm {
    std::array<Pauli, 2> paulis{Pauli::I, Pauli::I};
    double probability = 0;
};

/// Stochastic Pauli noise N_k = (1 - eps_k) I + sum_P p_P [P], with the
/// error terms listed per operation. Noise acts after preparations and
/// gates, and before measurements.
class StochasticPauliNoise {
  public:
    StochasticPauliNoise() = default;
    explicit StochasticPauliNoise(const CliffordCircuit &circuit) : terms_(circuit.ops().size()) {}

    void set(const CliffordCircuit &circuit, std::size_t op, std::vector<PauliTerm> terms) {
        if (op >= terms_.size() || op >= circuit.ops().size()) {
            throw InputError("noise location " + std::to_string(op) + " out of range");
        }
        const auto &loc = circuit.ops()[op];
        if (!is_physical(loc.kind)) {
            throw InputError("classical checks are noiseless");
        }
        double total = 0;
        for (const auto &t : terms) {
            if (!(t.probability >= 0)) {
                throw InputError("negative error probability");
            }
            const bool second = t.paulis[1] != Pauli::I;
            if (t.paulis[0] == Pauli::I && !second) {
                throw InputError("identity is not an error term");
            }
            if (second && loc.qubits.size() < 2) {
                throw InputError("Pauli support exceeds location support");
            }
            total += t.probability;
        }
        if (!(total < 1)) {
            throw InputError("noise strength at location " + std::to_string(op) + " must be < 1");
        }
        terms_[op] = std::move(terms);
    }

    const std::vector<PauliTerm> &terms(std::size_t op) const { return terms_[op]; }
    std::size_t size() const { return terms_.size(); }

    /// eps_k, the total error probability at an operation.
    double strength(std::size_t op) const {
        double total = 0;
        for (const auto &t : terms_[op]) {
            total += t.probability;
        }
        return total;
    }

    /// Operations carrying at least one error term.
    std::vector<std::size_t> noisy_locations() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            if (!terms_[i].empty()) {
                out.push_back(i);
            }
        }
        return out;
    }

  private:
    std::vector<std::vector<PauliTerm>> terms_;
};

/// Depolarizing noise on every gate (identity waits included), basis flips
/// after preparations and before measurements. Zero-probability terms are
/// kept so the fault-path structure does not depend on the rates.
inline StochasticPauliNoise depolarizing_noise(const CliffordCircuit &circuit, const CircuitNoiseParams &p) {
    p.validate();
    StochasticPauliNoise noise(circuit);
    constexpr std::array<Pauli, 4> all = {Pauli::I, Pauli::X, Pauli::Z, Pauli::Y};
    for (std::size_t i = 0; i < circuit.ops().size(); ++i) {
        const auto &op = circuit.ops()[i];
        std::vector<PauliTerm> terms;
        switch (op.kind) {
            case OpKind::prep_z:
            case OpKind::measure_z:
                terms.push_back({{Pauli::X, Pauli::I}, is_prep(op.kind) ? p.pp : p.pm});
                break;
            case OpKind::prep_x:
            case OpKind::measure_x:
                terms.push_back({{Pauli::Z, Pauli::I}, is_prep(op.kind) ? p.pp : p.pm});
                break;
            case OpKind::h:
            case OpKind::s:
            case OpKind::identity:
            case OpKind::t:
                for (Pauli a : {Pauli::X, Pauli::Z, Pauli::Y}) {
                    terms.push_back({{a, Pauli::I}, p.p1 / 3});
                }
                break;
            case OpKind::cnot:
            case OpKind::cz:
                for (Pauli a : all) {
                    for (Pauli b : all) {
                        if (a != Pauli::I || b != Pauli::I) {
                            terms.push_back({{a, b}, p.p2 / 15});
                        }
                    }
                }
                break;
            case OpKind::check:
                continue;
        }
        noise.set(circuit, i, std::move(terms));
    }
    return noise;
}

/// A fault path: the set of faulty locations, each with the chosen error
/// term (index into the location's term list). Sorted by operation index.
struct FaultPath {
    struct Fault {
        std::size_t op;
        std::size_t term;
    };
    std::vector<Fault> faults;

    std::size_t weight() const { return faults.size(); }
};

/// prod_{k in path} p_k(term) * prod_{k not in path} (1 - eps_k).
inline double path_weight(const StochasticPauliNoise &noise, const FaultPath &path) {
    double w = 1;
    std::size_t next = 0;
    for (std::size_t op = 0; op < noise.size(); ++op) {
        if (next < path.faults.size() && path.faults[next].op == op) {
            w *= noise.terms(op).at(path.faults[next].term).probability;
            ++next;
        } else {
            w *= 1 - noise.strength(op);
        }
    }
    return w;
}

inline std::string describe(const CliffordCircuit &circuit, const StochasticPauliNoise &noise, const FaultPath &path) {
    std::string out;
    for (const auto &f : path.faults) {
        const auto &t = noise.terms(f.op).at(f.term);
        if (!out.empty()) {
            out += ' ';
        }
        out += std::to_string(f.op) + ':';
        out += pauli_char(t.paulis[0]);
        if (circuit.ops()[f.op].qubits.size() == 2) {
            out += pauli_char(t.paulis[1]);
        }
    }
    return out.empty() ? "(empty)" : out;
}

}  // namespace pst::postsel
