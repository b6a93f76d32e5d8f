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

#ifndef DQC1_IQP_HPP
#define DQC1_IQP_HPP

#include <utility>
#include <vector>

#include "dqc1/circuit.hpp"

namespace dqc1 {

/// Commuting-circuit instance on l + 1 wires: H on every wire, a CZ for each
/// graph edge, exp(i k_j pi/8 Z_j) on every wire, optional exp(i k pi/8 Z Z)
/// couplings, H on every wire. Vertex j is wire j; vertex 0 is the clean
/// qubit and the other l wires start maximally mixed.
struct IqpSpec {
    struct Coupling {
        Qubit a;
        Qubit b;
        int k;
        bool operator==(const Coupling &) const = default;
    };

    std::size_t l = 0;
    std::vector<std::pair<Qubit, Qubit>> edges;
    std::vector<int> theta;  // l + 1 multipliers of pi/8
    std::vector<Coupling> zz;
    std::vector<Qubit> outputs;  // empty means every wire

    std::size_t num_qubits() const { return l + 1; }
    std::vector<Qubit> output_qubits() const;

    bool operator==(const IqpSpec &) const = default;
};

/// Throws ValidationError on self-loops, out-of-range vertices or a theta
/// list of the wrong length. Duplicate CZ edges are allowed and cancel.
void validate(const IqpSpec &spec);

/// Copy with multipliers reduced modulo 16 and edges ordered (a < b).
IqpSpec normalized(const IqpSpec &spec);

Circuit build_iqp_dqc1(const IqpSpec &spec);

/// Recognizes a circuit of the form H-layer, diagonal gates, H-layer with the
/// clean qubit on wire 0. Z, S, T and their inverses are read as Z rotations
/// (they differ only by a global phase). Throws ValidationError otherwise.
IqpSpec iqp_from_circuit(const Circuit &c);

}  // namespace dqc1

#endif
