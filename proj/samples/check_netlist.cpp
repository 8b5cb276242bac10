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

// Loads a netlist, finds its smallest faulty weight and checks the
// postselected error bound at a few noise strengths.
//
//   check_netlist data/circuits/d2patch.net

#include <cstdio>
#include <fstream>

#include "pst/pst.hpp"

int main(int argc, char **argv) {
    if (argc != 2) {
        std::fprintf(stderr, "usage: %s NETLIST\n", argv[0]);
        return 2;
    }
    std::ifstream in(argv[1]);
    if (!in) {
        std::fprintf(stderr, "cannot open %s\n", argv[1]);
        return 1;
    }
    using namespace pst::postsel;
    try {
        const auto circuit = parse_netlist(in);
        const auto probe = depolarizing_noise(circuit, pst::CircuitNoiseParams::uniform(1e-3));
        const auto w = minimal_faulty_weight(circuit, probe, 3);
        if (!w) {
            std::printf("no faulty path up to weight 3\n");
            return 0;
        }
        std::printf("%d qubits, %zu noisy locations, smallest faulty weight %zu\n", circuit.num_qubits(),
                    probe.noisy_locations().size(), *w);
        for (double pe : {1e-3, 3e-3, 1e-2}) {
            const auto r = verify_theorem1(circuit, depolarizing_noise(circuit, pst::CircuitNoiseParams::uniform(pe)),
                                           {*w, {}});
            std::printf("p_e=%-6g Delta<=%.3e bound=%.3e q=%.5f >= %.5f %s\n", pe, r.delta, r.bound, r.q_accept,
                        r.q_lower_bound, r.pass ? "ok" : "FAIL");
        }
    } catch (const std::exception &e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 1;
    }
}
