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

#ifndef DQC1_RANDOM_HPP
#define DQC1_RANDOM_HPP

#include <random>

#include "dqc1/exact_sim.hpp"
#include "dqc1/iqp.hpp"

namespace dqc1 {

using Rng = std::mt19937_64;

/// `num_gates` placements drawn uniformly from {H, T, CNOT} (CNOT needs two
/// wires, so one-qubit circuits only see H and T). Output is wire 0.
Circuit random_circuit(std::size_t num_qubits, std::size_t num_gates, Rng &rng);

/// At most `max_depth` layers of disjoint gates from {H, X, S, T, TDG, CNOT,
/// CZ}. Random clean wire; every wire is an output.
Dqc1Spec random_shallow_spec(std::size_t num_qubits, std::size_t max_depth, Rng &rng);

/// l uniform in [0, max_l], Erdos-Renyi edges with probability 1/2, theta
/// uniform on the pi/8 lattice and, if requested, a few random ZZ couplings.
IqpSpec random_iqp_spec(std::size_t max_l, bool with_zz, Rng &rng);

}  // namespace dqc1

#endif
