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

#include <cstdint>
#include <vector>

#include "pst/errors.hpp"
#include "pst/postsel/circuit.hpp"
#include "pst/postsel/noise.hpp"

namespace pst::postsel {

/// Pauli frame over up to 64 qubits: the accumulated error relative to the
/// noiseless run, up to phase.
struct PauliFrame {
    std::uint64_t x = 0;
    std::uint64_t z = 0;

    void apply_error(const Location &loc, const PauliTerm &term) {
        for (std::size_t i = 0; i < loc.qubits.size(); ++i) {
            const std::uint64_t bit = std::uint64_t{1} << loc.qubits[i];
            if (has_x(term.paulis[i])) {
                x ^= bit;
            }
            if (has_z(term.paulis[i])) {
                z ^= bit;
            }
        }
    }

    /// Conjugates the frame through a Clifford operation. Returns the
    /// outcome flip for measurements (0 otherwise).
    bool step(const Location &loc) {
        auto bit = [](int q) { return std::uint64_t{1} << q; };
        auto get = [](std::uint64_t m, int q) { return (m >> q) & 1; };
        switch (loc.kind) {
            case OpKind::prep_z:
            case OpKind::prep_x: {
                const std::uint64_t mask = ~bit(loc.qubits[0]);
                x &= mask;
                z &= mask;
                return false;
            }
            case OpKind::h: {
                const int q = loc.qubits[0];
                const auto xq = get(x, q);
                const auto zq = get(z, q);
                x = (x & ~bit(q)) | (zq << q);
                z = (z & ~bit(q)) | (xq << q);
                return false;
            }
            case OpKind::s:
                z ^= get(x, loc.qubits[0]) << loc.qubits[0];
                return false;
            case OpKind::identity:
                return false;
            case OpKind::cnot: {
                const int c = loc.qubits[0];
                const int t = loc.qubits[1];
                x ^= get(x, c) << t;
                z ^= get(z, t) << c;
                return false;
            }
            case OpKind::cz: {
                const int a = loc.qubits[0];
                const int b = loc.qubits[1];
                const auto xa = get(x, a);
                const auto xb = get(x, b);
                z ^= (xb << a) | (xa << b);
                return false;
            }
            case OpKind::measure_z:
                return get(x, loc.qubits[0]);
            case OpKind::measure_x:
                return get(z, loc.qubits[0]);
            case OpKind::t:
                throw UnsupportedCircuit("non-Clifford gate T cannot be propagated as a Pauli frame");
            case OpKind::check:
                return false;
        }
        return false;
    }
};

/// Measurement-record flips (bit r = record r) caused by a fault path,
/// by direct propagation of the frame through the whole circuit.
inline std::uint64_t propagate_path(const CliffordCircuit &circuit, const StochasticPauliNoise &noise,
                                    const FaultPath &path) {
    if (noise.size() != circuit.ops().size()) {
        throw InputError("noise model does not match circuit");
    }
    PauliFrame frame;
    std::uint64_t flips = 0;
    int record = 0;
    std::size_t next = 0;
    const auto &ops = circuit.ops();
    for (std::size_t i = 0; i < ops.size(); ++i) {
        const auto &loc = ops[i];
        const bool faulty = next < path.faults.size() && path.faults[next].op == i;
        if (is_measure(loc.kind)) {
            if (faulty) {
                frame.apply_error(loc, noise.terms(i).at(path.faults[next++].term));
            }
            if (frame.step(loc)) {
                flips |= std::uint64_t{1} << record;
            }
            ++record;
        } else {
            frame.step(loc);
            if (faulty) {
                frame.apply_error(loc, noise.terms(i).at(path.faults[next++].term));
            }
        }
    }
    if (next != path.faults.size()) {
        throw InputError("fault path refers to operations outside the circuit or out of order");
    }
    return flips;
}

/// flips[op][term]: record flips of each single fault. Flips of a path are
/// the XOR of its faults' entries.
inline std::vector<std::vector<std::uint64_t>> single_fault_flips(const CliffordCircuit &circuit,
                                                                  const StochasticPauliNoise &noise) {
    for (const auto &op : circuit.ops()) {
        if (op.kind == OpKind::t) {
            throw UnsupportedCircuit("non-Clifford gate T cannot be propagated as a Pauli frame");
        }
    }
    std::vector<std::vector<std::uint64_t>> out(circuit.ops().size());
    for (std::size_t op = 0; op < circuit.ops().size(); ++op) {
        for (std::size_t t = 0; t < noise.terms(op).size(); ++t) {
            out[op].push_back(propagate_path(circuit, noise, FaultPath{{{op, t}}}));
        }
    }
    return out;
}

}  // namespace pst::postsel
