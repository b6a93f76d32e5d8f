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

#include "dqc1/exact_sim.hpp"

#include <cmath>

namespace dqc1 {

namespace {

std::size_t gather(BasisIndex x, const std::vector<Qubit> &outputs) {
    std::size_t idx = 0;
    for (std::size_t j = 0; j < outputs.size(); ++j) {
        idx |= static_cast<std::size_t>((x >> outputs[j]) & 1) << j;
    }
    return idx;
}

// Accumulates |<x|U|input>|^2 into `dist` for one basis input. `dense` is
// scratch space reused across calls when the circuit is small enough.
void accumulate_pure_run(const Circuit &c, BasisIndex input, double weight, OutcomeDistribution &dist,
                         std::optional<StateVector> &dense, const SimLimits &limits) {
    if (c.num_qubits <= limits.dense_cap) {
        if (!dense) {
            dense.emplace(c.num_qubits, input);
        } else {
            dense->reset(input);
        }
        dense->apply(c);
        const auto &amps = dense->amplitudes();
        for (BasisIndex x = 0; x < amps.size(); ++x) {
            const double p = std::norm(amps[x]);
            if (p != 0.0) {
                dist.probs[gather(x, dist.output_qubits)] += weight * p;
            }
        }
        return;
    }
    SparseState sparse(c.num_qubits, input);
    sparse.apply(c);
    sparse.for_each_sorted([&](BasisIndex x, Complex a) {
        dist.probs[gather(x, dist.output_qubits)] += weight * std::norm(a);
    });
}

BasisIndex deposit(BasisIndex bits, const std::vector<Qubit> &positions) {
    BasisIndex x = 0;
    for (std::size_t j = 0; j < positions.size(); ++j) {
        x |= ((bits >> j) & 1) << positions[j];
    }
    return x;
}

}  // namespace

Dqc1Spec Dqc1Spec::from(const Circuit &c) { return {c, c.clean(), c.outputs}; }

void validate(const Dqc1Spec &spec) {
    validate(spec.circuit);
    if (spec.clean >= spec.circuit.num_qubits) {
        throw ValidationError("clean qubit: index out of range");
    }
    Circuit probe = spec.circuit;
    probe.gates.clear();
    probe.outputs = spec.outputs;
    validate(probe);
}

StateVector apply_circuit(const StateVector &s, const Circuit &c) {
    validate(c);
    StateVector out = s;
    out.apply(c);
    return out;
}

Eigen::MatrixXcd unitary_of(const Circuit &c, const SimLimits &limits) {
    validate(c);
    if (c.num_qubits > limits.unitary_cap) {
        throw CapExceeded("unitary_of: " + std::to_string(c.num_qubits) + " qubits exceeds the cap of " +
                          std::to_string(limits.unitary_cap));
    }
    const std::size_t dim = std::size_t{1} << c.num_qubits;
    Eigen::MatrixXcd u(dim, dim);
    StateVector s(c.num_qubits);
    for (std::size_t j = 0; j < dim; ++j) {
        s.reset(j);
        s.apply(c);
        for (std::size_t i = 0; i < dim; ++i) {
            u(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = s[i];
        }
    }
    return u;
}

OutcomeDistribution output_distribution(const Circuit &c, const SimLimits &limits) {
    validate(c);
    OutcomeDistribution dist(c.outputs);
    std::optional<StateVector> scratch;
    accumulate_pure_run(c, 0, 1.0, dist, scratch, limits);
    return dist;
}

double acceptance_probability(const Circuit &c, const SimLimits &limits) {
    if (c.outputs.size() != 1) {
        throw ValidationError("acceptance probability needs exactly one designated output, got " +
                              std::to_string(c.outputs.size()));
    }
    return output_distribution(c, limits).probs[1];
}

OutcomeDistribution dqc1m_distribution(const Dqc1Spec &spec, const SimLimits &limits) {
    validate(spec);
    const std::size_t n = spec.circuit.num_qubits;
    if (n - 1 > limits.ensemble_cap) {
        throw CapExceeded("ensemble of " + std::to_string(n - 1) + " mixed qubits exceeds the cap of " +
                          std::to_string(limits.ensemble_cap));
    }
    std::vector<Qubit> mixed;
    for (Qubit q = 0; q < n; ++q) {
        if (q != spec.clean) {
            mixed.push_back(q);
        }
    }
    OutcomeDistribution dist(spec.outputs);
    const BasisIndex runs = BasisIndex{1} << mixed.size();
    const double weight = std::ldexp(1.0, -static_cast<int>(mixed.size()));
    std::optional<StateVector> scratch;
    for (BasisIndex s = 0; s < runs; ++s) {
        accumulate_pure_run(spec.circuit, deposit(s, mixed), weight, dist, scratch, limits);
    }
    return dist;
}

double dqc1_acceptance(const Dqc1Spec &spec, const SimLimits &limits) {
    if (spec.outputs.size() != 1) {
        throw ValidationError("DQC1 acceptance needs exactly one designated output, got " +
                              std::to_string(spec.outputs.size()));
    }
    return dqc1m_distribution(spec, limits).probs[1];
}

}  // namespace dqc1
