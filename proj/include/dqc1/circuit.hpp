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

#ifndef DQC1_CIRCUIT_HPP
#define DQC1_CIRCUIT_HPP

#include <optional>
#include <set>
#include <vector>

#include "dqc1/gate.hpp"

namespace dqc1 {

/// An ordered gate sequence over `num_qubits` wires plus role metadata.
///
/// Circuits are plain values; every operation below takes one by const
/// reference and returns a fresh one. When `clean_qubit` is empty the DQC1
/// routines treat qubit 0 as the clean qubit. Outcome strings list bits in the
/// order of `outputs`.
struct Circuit {
    std::size_t num_qubits = 1;
    std::vector<Gate> gates;
    std::optional<Qubit> clean_qubit;
    std::vector<Qubit> outputs{0};

    Qubit clean() const { return clean_qubit.value_or(0); }

    Circuit &add(Gate g) {
        gates.push_back(std::move(g));
        return *this;
    }

    bool operator==(const Circuit &) const = default;
};

/// Throws ValidationError naming the first violated invariant (and the gate
/// index when a gate is at fault).
void validate(const Circuit &c);

/// Layer count under greedy earliest-layer packing. 0 for an empty circuit.
std::size_t depth(const Circuit &c);

/// Reversed gate order with every gate inverted. Role metadata is kept.
Circuit invert(const Circuit &c);

/// `a` followed by `b`. Width is the larger of the two; roles come from `a`.
Circuit concat(const Circuit &a, const Circuit &b);

/// Every gate of `c` conditioned on `ctrl` being |polarity>. The result acts on
/// max(num_qubits, ctrl + 1) qubits. Controlled H, T, S and rotations are
/// synthesized from H, CNOT and phase gates; X, CNOT, CCX and NCX simply gain a
/// control. Throws ValidationError when `ctrl` is used by `c`, or when a P8
/// gate with an odd step is encountered (its controlled form needs pi/16).
Circuit controlled_on(const Circuit &c, Qubit ctrl, bool polarity);

/// Sorted set of qubits touched by at least one gate.
std::set<Qubit> used_qubits(const Circuit &c);

struct LightCone {
    std::set<Qubit> qubits;
    Qubit for_output = 0;
};

/// Backward light cone of `out`: scanning gates last to first, any gate that
/// touches the cone pulls all of its qubits in.
LightCone light_cone(const Circuit &c, Qubit out);

/// Backward light cone of a set of outputs (union of the single cones).
std::set<Qubit> light_cone_union(const Circuit &c, const std::vector<Qubit> &outs);

/// The gates that `light_cone` would pull in for `qubits`, remapped onto
/// 0..|qubits|-1 in ascending qubit order. `map[i]` is the original index of
/// local qubit i. Gates touching the set only after it has stopped mattering
/// are dropped, so only the marginal on `seed` is preserved.
struct InducedCircuit {
    Circuit circuit;
    std::vector<Qubit> map;
    Qubit local(Qubit original) const;
};
InducedCircuit induced_subcircuit(const Circuit &c, const std::vector<Qubit> &seed);

}  // namespace dqc1

#endif
