// Copyright 2026 The dqc1sim Authors
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

#ifndef DQC1_TESTS_HELPERS_HPP
#define DQC1_TESTS_HELPERS_HPP

#include <random>
#include <vector>

#include "dqc1/circuit.hpp"
#include "dqc1/exact_sim.hpp"
#include "dqc1/gadgets.hpp"
#include "dqc1/random.hpp"

namespace testing {

// Every gate kind, with random wires, polarities and lattice phases.
inline dqc1::Circuit random_rich_circuit(std::size_t n, std::size_t gates, dqc1::Rng &rng) {
    using dqc1::Gate;
    using dqc1::Qubit;
    auto pick = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
    dqc1::Circuit c;
    c.num_qubits = n;
    for (std::size_t i = 0; i < gates; ++i) {
        std::vector<Qubit> wires(n);
        for (Qubit j = 0; j < n; ++j) {
            wires[j] = j;
        }
        std::shuffle(wires.begin(), wires.end(), rng);
        const int k = static_cast<int>(pick(0, 15));
        const std::size_t max_kind = n >= 3 ? 13 : (n == 2 ? 11 : 8);  // NCX needs two wires
        switch (pick(0, max_kind)) {
            case 0: c.add(Gate::h(wires[0])); break;
            case 1: c.add(Gate::x(wires[0])); break;
            case 2: c.add(Gate::z(wires[0])); break;
            case 3: c.add(Gate::s(wires[0])); break;
            case 4: c.add(Gate::sdg(wires[0])); break;
            case 5: c.add(Gate::t(wires[0])); break;
            case 6: c.add(Gate::tdg(wires[0])); break;
            case 7: c.add(Gate::p8(2 * (k / 2), wires[0])); break;
            case 8: c.add(Gate::rz8(k, wires[0])); break;
            case 9: c.add(Gate::cx(wires[0], wires[1])); break;
            case 10: c.add(Gate::cz(wires[0], wires[1])); break;
            case 11: c.add(Gate::rzz8(k, wires[0], wires[1])); break;
            case 12: c.add(Gate::ccx(wires[0], wires[1], wires[2])); break;
            default: {
                const std::size_t nc = pick(1, n - 1);
                std::vector<Qubit> controls(wires.begin(), wires.begin() + static_cast<std::ptrdiff_t>(nc));
                std::vector<std::uint8_t> pol(nc);
                for (auto &b : pol) {
                    b = static_cast<std::uint8_t>(pick(0, 1));
                }
                c.add(Gate::mcx(controls, pol, wires[nc]));
            }
        }
    }
    return c;
}

struct TeleportStats {
    double all_p_one = 0;     // P(p_1 = ... = p_r = 1)
    double o_given_p = 0;     // P(o = 1 | all p = 1)
};

// Pure-input statistics of a teleported circuit; outputs are (o, p_1..p_r).
inline TeleportStats teleport_stats(const dqc1::TeleportedCircuit &t) {
    const auto d = dqc1::output_distribution(t.circuit);
    const std::size_t all_p = ((std::size_t{1} << t.r()) - 1) << 1;
    TeleportStats s;
    s.all_p_one = d.probs[all_p] + d.probs[all_p | 1];
    s.o_given_p = d.probs[all_p | 1] / s.all_p_one;
    return s;
}

// All-zero probability of the one-clean-qubit run of V_w^dagger, clean = o'.
inline double vw_dagger_all_zero(const dqc1::VwGadget &v, const dqc1::SimLimits &limits = {}) {
    dqc1::Dqc1Spec spec{dqc1::invert(v.circuit), v.o_prime, {}};
    for (dqc1::Qubit q = 0; q < v.circuit.num_qubits; ++q) {
        spec.outputs.push_back(q);
    }
    return dqc1::dqc1m_distribution(spec, limits).probs[0];
}

}  // namespace testing

#endif
