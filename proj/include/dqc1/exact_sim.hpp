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

#ifndef DQC1_EXACT_SIM_HPP
#define DQC1_EXACT_SIM_HPP

#include <Eigen/Dense>

#include "dqc1/circuit.hpp"
#include "dqc1/distribution.hpp"
#include "dqc1/state.hpp"

namespace dqc1 {

struct SimLimits {
    std::size_t unitary_cap = 12;   // max qubits for unitary_of
    std::size_t ensemble_cap = 20;  // max mixed qubits in a DQC1 ensemble
    std::size_t dense_cap = 24;     // above this, pure runs use SparseState
};

/// A circuit together with its one-clean-qubit roles. Every qubit other than
/// `clean` starts maximally mixed.
struct Dqc1Spec {
    Circuit circuit;
    Qubit clean = 0;
    std::vector<Qubit> outputs{0};

    /// Roles taken from the circuit metadata.
    static Dqc1Spec from(const Circuit &c);
};

void validate(const Dqc1Spec &spec);

StateVector apply_circuit(const StateVector &s, const Circuit &c);

/// Column j is the image of basis state j.
Eigen::MatrixXcd unitary_of(const Circuit &c, const SimLimits &limits = {});

/// Joint distribution of the circuit's outputs on input |0...0>.
OutcomeDistribution output_distribution(const Circuit &c, const SimLimits &limits = {});

/// Probability that the single designated output reads 1 on input |0...0>.
double acceptance_probability(const Circuit &c, const SimLimits &limits = {});

/// Probability that the single output reads 1 on |0><0| (x) (I/2)^(n-1), as
/// the uniform average over all basis settings of the mixed qubits.
double dqc1_acceptance(const Dqc1Spec &spec, const SimLimits &limits = {});

/// Joint distribution of the outputs on the one-clean-qubit input.
OutcomeDistribution dqc1m_distribution(const Dqc1Spec &spec, const SimLimits &limits = {});

}  // namespace dqc1

#endif
