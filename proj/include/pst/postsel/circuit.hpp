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
#include <string_view>
#include <vector>

#include "pst/errors.hpp"

namespace pst::postsel {

enum class OpKind {
    prep_z,
    prep_x,
    h,
    s,
    identity,
    cnot,
    cz,
    t,  // non-Clifford; representable but rejected by the simulator
    measure_z,
    measure_x,
    check,  // noiseless classical parity of measurement records
};

/// Which classical register a measurement (or check) feeds.
enum class Port { output, postselect, syndrome };

inline std::string_view to_string(Port p) {
    switch (p) {
        case Port::output:
            return "x";
        case Port::postselect:
            return "y";
        case Port::syndrome:
            return "z";
    }
    return "?";
}

inline bool is_prep(OpKind k) { return k == OpKind::prep_z || k == OpKind::prep_x; }
inline bool is_measure(OpKind k) { return k == OpKind::measure_z || k == OpKind::measure_x; }
inline bool is_two_qubit(OpKind k) { return k == OpKind::cnot || k == OpKind::cz; }
inline bool is_gate(OpKind k) {
    return k == OpKind::h || k == OpKind::s || k == OpKind::identity || k == OpKind::t || is_two_qubit(k);
}
/// Every operation except classical checks is a physical location that can
/// carry noise.
inline bool is_physical(OpKind k) { return k != OpKind::check; }

struct Location {
    OpKind kind = OpKind::identity;
    std::vector<int> qubits;
    Port port = Port::output;  // measurements only
    std::vector<int> records;  // checks only: measurement record indices
};

/// Bit layout of the classical outcome: output bits x, then postselection
/// bits y, then syndrome bits z (syndrome measurements followed by checks).
struct PortLayout {
    std::vector<int> output_records;
    std::vector<int> postselect_records;
    std::vector<int> syndrome_records;
    std::vector<std::vector<int>> checks;

    int nx() const { return static_cast<int>(output_records.size()); }
    int ny() const { return static_cast<int>(postselect_records.size()); }
    int nz() const { return static_cast<int>(syndrome_records.size() + checks.size()); }

    /// (x, y) bits of a record vector: x in the low nx bits, y above.
    std::uint64_t xy_bits(std::uint64_t rec) const {
        std::uint64_t out = 0;
        int bit = 0;
        for (int r : output_records) {
            out |= ((rec >> r) & 1) << bit++;
        }
        for (int r : postselect_records) {
            out |= ((rec >> r) & 1) << bit++;
        }
        return out;
    }

    std::uint64_t z_bits(std::uint64_t rec) const {
        std::uint64_t out = 0;
        int bit = 0;
        for (int r : syndrome_records) {
            out |= ((rec >> r) & 1) << bit++;
        }
        for (const auto &c : checks) {
            std::uint64_t parity = 0;
            for (int r : c) {
                parity ^= (rec >> r) & 1;
            }
            out |= parity << bit++;
        }
        return out;
    }
};

/// A small stabilizer circuit with tagged measurement ports. Measured
/// qubits are terminal: each is measured once and not touched afterwards.
class CliffordCircuit {
  public:
    CliffordCircuit() = default;
    CliffordCircuit(int num_qubits, std::vector<Location> ops) : num_qubits_(num_qubits), ops_(std::move(ops)) {
        validate();
    }

    int num_qubits() const { return num_qubits_; }
    const std::vector<Location> &ops() const { return ops_; }
    int num_measurements() const { return num_measurements_; }
    const PortLayout &layout() const { return layout_; }

    /// Indices into ops() of locations that can carry noise.
    std::vector<std::size_t> physical_locations() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < ops_.size(); ++i) {
            if (is_physical(ops_[i].kind)) {
                out.push_back(i);
            }
        }
        return out;
    }

  private:
    void validate() {
        if (num_qubits_ < 1 || num_qubits_ > 64) {
            throw InputError("circuit must have between 1 and 64 qubits");
        }
        std::vector<bool> measured(static_cast<std::size_t>(num_qubits_), false);
        layout_ = {};
        num_measurements_ = 0;
        for (std::size_t i = 0; i < ops_.size(); ++i) {
            const auto &op = ops_[i];
            const std::string where = "operation " + std::to_string(i);
            if (op.kind == OpKind::check) {
                if (op.records.empty()) {
                    throw InputError(where + ": check needs at least one record");
                }
                for (int r : op.records) {
                    if (r < 0 || r >= num_measurements_) {
                        throw InputError(where + ": check refers to record " + std::to_string(r) +
                                         " that is not yet measured");
                    }
                }
                layout_.checks.push_back(op.records);
                continue;
            }
            const std::size_t arity = is_two_qubit(op.kind) ? 2 : 1;
            if (op.qubits.size() != arity) {
                throw InputError(where + ": expected " + std::to_string(arity) + " qubit(s)");
            }
            for (int q : op.qubits) {
                if (q < 0 || q >= num_qubits_) {
                    throw InputError(where + ": qubit " + std::to_string(q) + " out of range");
                }
                if (measured[static_cast<std::size_t>(q)]) {
                    throw InputError(where + ": qubit " + std::to_string(q) + " used after measurement");
                }
            }
            if (arity == 2 && op.qubits[0] == op.qubits[1]) {
                throw InputError(where + ": two-qubit gate on a single qubit");
            }
            if (is_measure(op.kind)) {
                measured[static_cast<std::size_t>(op.qubits[0])] = true;
                const int rec = num_measurements_++;
                if (num_measurements_ > 64) {
                    throw InputError("circuit has more than 64 measurements");
                }
                switch (op.port) {
                    case Port::output:
                        layout_.output_records.push_back(rec);
                        break;
                    case Port::postselect:
                        layout_.postselect_records.push_back(rec);
                        break;
                    case Port::syndrome:
                        layout_.syndrome_records.push_back(rec);
                        break;
                }
            }
        }
        if (layout_.nx() + layout_.ny() > 64 || layout_.nz() > 64) {
            throw InputError("too many port bits");
        }
    }

    int num_qubits_ = 0;
    std::vector<Location> ops_;
    int num_measurements_ = 0;
    PortLayout layout_;
};

namespace builtin {

inline Location op(OpKind k, std::vector<int> qubits, Port port = Port::output) {
    return {k, std::move(qubits), port, {}};
}

inline Location parity_check(std::vector<int> records) { return {OpKind::check, {}, Port::syndrome, std::move(records)}; }

/// Prepare, idle, measure: one output bit and no syndrome.
inline CliffordCircuit baseline() {
    using enum OpKind;
    return CliffordCircuit(1, {op(prep_z, {0}), op(identity, {0}), op(measure_z, {0}, Port::output)});
}

/// One data qubit copied onto an ancilla whose readout is the syndrome bit.
/// X errors on the data before the copy are detected; later ones are not.
inline CliffordCircuit parity() {
    using enum OpKind;
    return CliffordCircuit(2, {
                                  op(prep_z, {0}),
                                  op(prep_z, {1}),
                                  op(cnot, {0, 1}),
                                  op(measure_z, {1}, Port::syndrome),
                                  op(measure_z, {0}, Port::output),
                              });
}

/// Distance-2 surface patch on data qubits 0-3 (stabilizers XXXX, Z0Z1,
/// Z2Z3; logical Z = Z0Z2). The logical |0> is encoded as a GHZ state,
/// one noisy round of stabilizer readout follows with ancillas 4 (X type),
/// 5 and 6 (Z type), and the data is read out in the Z basis. Final Z-type
/// parities are checked against the ancilla readout.
inline CliffordCircuit d2patch() {
    using enum OpKind;
    return CliffordCircuit(7, {
                                  op(prep_x, {0}),
                                  op(prep_z, {1}),
                                  op(prep_z, {2}),
                                  op(prep_z, {3}),
                                  op(prep_x, {4}),
                                  op(prep_z, {5}),
                                  op(prep_z, {6}),
                                  op(cnot, {0, 1}),
                                  op(cnot, {0, 2}),
                                  op(cnot, {0, 3}),
                                  // XXXX; the interleaved order turns hook errors into detectable X1X3.
                                  op(cnot, {4, 0}),
                                  op(cnot, {4, 2}),
                                  op(cnot, {4, 1}),
                                  op(cnot, {4, 3}),
                                  op(cnot, {0, 5}),
                                  op(cnot, {1, 5}),
                                  op(cnot, {2, 6}),
                                  op(cnot, {3, 6}),
                                  op(measure_x, {4}, Port::syndrome),  // record 0
                                  op(measure_z, {5}, Port::syndrome),  // record 1
                                  op(measure_z, {6}, Port::syndrome),  // record 2
                                  op(measure_z, {0}, Port::output),    // record 3
                                  op(measure_z, {1}, Port::output),    // record 4
                                  op(measure_z, {2}, Port::output),    // record 5
                                  op(measure_z, {3}, Port::output),    // record 6
                                  parity_check({1, 3, 4}),
                                  parity_check({2, 5, 6}),
                              });
}

inline CliffordCircuit by_name(std::string_view name) {
    if (name == "baseline") {
        return baseline();
    }
    if (name == "parity") {
        return parity();
    }
    if (name == "d2patch") {
        return d2patch();
    }
    throw InputError("unknown built-in circuit '" + std::string(name) + "'");
}

}  // namespace builtin

}  // namespace pst::postsel
