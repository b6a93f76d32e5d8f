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

#include "dqc1/random.hpp"

#include <algorithm>
#include <numeric>

namespace dqc1 {

namespace {

std::size_t uniform(Rng &rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

Circuit random_circuit(std::size_t num_qubits, std::size_t num_gates, Rng &rng) {
    if (num_qubits == 0) {
        throw ValidationError("random circuit needs at least one qubit");
    }
    Circuit c;
    c.num_qubits = num_qubits;
    c.outputs = {0};
    const std::size_t kinds = num_qubits >= 2 ? 3 : 2;
    for (std::size_t i = 0; i < num_gates; ++i) {
        const Qubit a = static_cast<Qubit>(uniform(rng, 0, num_qubits - 1));
        switch (uniform(rng, 0, kinds - 1)) {
            case 0: c.add(Gate::h(a)); break;
            case 1: c.add(Gate::t(a)); break;
            default: {
                Qubit b = static_cast<Qubit>(uniform(rng, 0, num_qubits - 2));
                if (b >= a) {
                    ++b;
                }
                c.add(Gate::cx(a, b));
            }
        }
    }
    return c;
}

Dqc1Spec random_shallow_spec(std::size_t num_qubits, std::size_t max_depth, Rng &rng) {
    Circuit c;
    c.num_qubits = num_qubits;
    c.clean_qubit = static_cast<Qubit>(uniform(rng, 0, num_qubits - 1));
    c.outputs.resize(num_qubits);
    std::iota(c.outputs.begin(), c.outputs.end(), Qubit{0});
    std::vector<Qubit> order(num_qubits);
    std::iota(order.begin(), order.end(), Qubit{0});
    for (std::size_t layer = 0; layer < max_depth; ++layer) {
        std::shuffle(order.begin(), order.end(), rng);
        for (std::size_t i = 0; i < order.size();) {
            const Qubit a = order[i];
            const std::size_t pick = uniform(rng, 0, 7);
            if (pick >= 5 && i + 1 < order.size()) {
                const Qubit b = order[i + 1];
                c.add(pick == 7 ? Gate::cz(a, b) : Gate::cx(a, b));
                i += 2;
                continue;
            }
            switch (pick) {
                case 0: c.add(Gate::h(a)); break;
                case 1: c.add(Gate::x(a)); break;
                case 2: c.add(Gate::s(a)); break;
                case 3: c.add(Gate::t(a)); break;
                case 4: c.add(Gate::tdg(a)); break;
                default: break;  // idle
            }
            ++i;
        }
    }
    return Dqc1Spec::from(c);
}

IqpSpec random_iqp_spec(std::size_t max_l, bool with_zz, Rng &rng) {
    IqpSpec spec;
    spec.l = uniform(rng, 0, max_l);
    const std::size_t n = spec.num_qubits();
    std::bernoulli_distribution coin(0.5);
    for (Qubit a = 0; a < n; ++a) {
        for (Qubit b = a + 1; b < n; ++b) {
            if (coin(rng)) {
                spec.edges.emplace_back(a, b);
            }
        }
    }
    spec.theta.resize(n);
    for (int &k : spec.theta) {
        k = static_cast<int>(uniform(rng, 0, 15));
    }
    if (with_zz && n >= 2) {
        const std::size_t count = uniform(rng, 1, n);
        for (std::size_t i = 0; i < count; ++i) {
            Qubit a = static_cast<Qubit>(uniform(rng, 0, n - 1));
            Qubit b = static_cast<Qubit>(uniform(rng, 0, n - 2));
            if (b >= a) {
                ++b;
            }
            spec.zz.push_back({a, b, static_cast<int>(uniform(rng, 1, 15))});
        }
    }
    return spec;
}

}  // namespace dqc1
