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

// Prints the phenomenological and circuit-level thresholds next to the
// edge rates at each of them.

#include <cstdio>

#include "pst/pst.hpp"

int main() {
    const auto phenom = pst::phenomenological_thresholds();
    std::printf("i.i.d. edge noise: topological %.5f, singular %.5f\n", phenom.topological.value,
                phenom.singular.value);
    for (auto order : {pst::EdgeOrder::leading, pst::EdgeOrder::all_order}) {
        const auto t = pst::circuit_threshold(order);
        const auto m = pst::edge_model(t.value, order);
        std::printf("%-9s p_e = %.5f  nu = %.5f  mu = %.5f\n", std::string(pst::to_string(order)).c_str(), t.value,
                    m.nu(), m.mu());
    }
    std::printf("distillation margin at 0.146: %+.7f\n", pst::msd_margin(0.146));
}
