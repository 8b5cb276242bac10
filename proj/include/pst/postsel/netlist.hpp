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
#include <cctype>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "pst/errors.hpp"
#include "pst/postsel/circuit.hpp"

namespace pst::postsel {

// Plain-text netlist, one location per line:
//
//   QUBITS 3            (optional; otherwise inferred)
//   PREP_Z 0            PREP_X 0
//   H 0   S 0   I 0   T 0
//   CNOT 0 1            CZ 0 1
//   MEASURE_Z 0 x       MEASURE_X 2 z      (port: x, y or z)
//   CHECK 1 3 4         (syndrome bit = parity of measurement records)
//
// '#' starts a comment.

namespace detail {

inline const std::map<std::string, OpKind> &netlist_kinds() {
    static const std::map<std::string, OpKind> kinds = {
        {"PREP_Z", OpKind::prep_z},       {"PREP_X", OpKind::prep_x},       {"H", OpKind::h},
        {"S", OpKind::s},                 {"I", OpKind::identity},          {"CNOT", OpKind::cnot},
        {"CZ", OpKind::cz},               {"T", OpKind::t},                 {"MEASURE_Z", OpKind::measure_z},
        {"MEASURE_X", OpKind::measure_x}, {"CHECK", OpKind::check},
    };
    return kinds;
}

inline std::string upper(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::toupper(c); });
    return s;
}

inline int parse_index(const std::string &tok, int line_no) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
        throw InputError("netlist line " + std::to_string(line_no) + ": expected an index, got '" + tok + "'");
    }
    return std::stoi(tok);
}

}  // namespace detail

inline CliffordCircuit parse_netlist(std::istream &in) {
    std::vector<Location> ops;
    int declared = -1;
    int max_qubit = -1;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.resize(hash);
        }
        std::istringstream ss(line);
        std::vector<std::string> toks;
        for (std::string t; ss >> t;) {
            toks.push_back(t);
        }
        if (toks.empty()) {
            continue;
        }
        const std::string head = detail::upper(toks[0]);
        if (head == "QUBITS") {
            if (toks.size() != 2) {
                throw InputError("netlist line " + std::to_string(line_no) + ": QUBITS takes one count");
            }
            declared = detail::parse_index(toks[1], line_no);
            continue;
        }
        auto it = detail::netlist_kinds().find(head);
        if (it == detail::netlist_kinds().end()) {
            throw InputError("netlist line " + std::to_string(line_no) + ": unknown operation '" + toks[0] + "'");
        }
        Location loc;
        loc.kind = it->second;
        if (loc.kind == OpKind::check) {
            for (std::size_t i = 1; i < toks.size(); ++i) {
                loc.records.push_back(detail::parse_index(toks[i], line_no));
            }
            loc.port = Port::syndrome;
            ops.push_back(std::move(loc));
            continue;
        }
        const std::size_t arity = is_two_qubit(loc.kind) ? 2 : 1;
        const std::size_t expected = 1 + arity + (is_measure(loc.kind) ? 1 : 0);
        if (toks.size() != expected) {
            throw InputError("netlist line " + std::to_string(line_no) + ": expected " +
                             std::to_string(expected - 1) + " argument(s) for " + head);
        }
        for (std::size_t i = 0; i < arity; ++i) {
            loc.qubits.push_back(detail::parse_index(toks[1 + i], line_no));
            max_qubit = std::max(max_qubit, loc.qubits.back());
        }
        if (is_measure(loc.kind)) {
            const std::string port = detail::upper(toks.back());
            if (port == "X" || port == "OUTPUT") {
                loc.port = Port::output;
            } else if (port == "Y" || port == "POSTSELECT") {
                loc.port = Port::postselect;
            } else if (port == "Z" || port == "SYNDROME") {
                loc.port = Port::syndrome;
            } else {
                throw InputError("netlist line " + std::to_string(line_no) + ": unknown port '" + toks.back() + "'");
            }
        }
        ops.push_back(std::move(loc));
    }
    return CliffordCircuit(declared >= 0 ? declared : max_qubit + 1, std::move(ops));
}

inline std::string format_netlist(const CliffordCircuit &circuit) {
    std::map<OpKind, std::string> names;
    for (const auto &[name, kind] : detail::netlist_kinds()) {
        names[kind] = name;
    }
    std::ostringstream out;
    out << "QUBITS " << circuit.num_qubits() << '\n';
    for (const auto &op : circuit.ops()) {
        out << names[op.kind];
        for (int q : op.qubits) {
            out << ' ' << q;
        }
        for (int r : op.records) {
            out << ' ' << r;
        }
        if (is_measure(op.kind)) {
            out << ' ' << to_string(op.port);
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace pst::postsel
