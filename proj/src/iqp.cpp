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

#include "dqc1/iqp.hpp"

#include <algorithm>

namespace dqc1 {

std::vector<Qubit> IqpSpec::output_qubits() const {
    if (!outputs.empty()) {
        return outputs;
    }
    std::vector<Qubit> all(num_qubits());
    for (Qubit j = 0; j < all.size(); ++j) {
        all[j] = j;
    }
    return all;
}

void validate(const IqpSpec &spec) {
    const std::size_t n = spec.num_qubits();
    if (spec.theta.size() != n) {
        throw ValidationError("theta must list " + std::to_string(n) + " multipliers, got " +
                              std::to_string(spec.theta.size()));
    }
    auto check_pair = [&](Qubit a, Qubit b, const char *what) {
        if (a >= n || b >= n) {
            throw ValidationError(std::string(what) + ": vertex index out of range");
        }
        if (a == b) {
            throw ValidationError(std::string(what) + ": self-loop on vertex " + std::to_string(a));
        }
    };
    for (const auto &[a, b] : spec.edges) {
        check_pair(a, b, "edge");
    }
    for (const auto &c : spec.zz) {
        check_pair(c.a, c.b, "ZZ coupling");
    }
    Circuit probe;
    probe.num_qubits = n;
    probe.outputs = spec.output_qubits();
    validate(probe);
}

IqpSpec normalized(const IqpSpec &spec) {
    IqpSpec s = spec;
    for (int &k : s.theta) {
        k = normalize_phase_step(k);
    }
    for (auto &[a, b] : s.edges) {
        if (a > b) {
            std::swap(a, b);
        }
    }
    for (auto &c : s.zz) {
        c.k = normalize_phase_step(c.k);
        if (c.a > c.b) {
            std::swap(c.a, c.b);
        }
    }
    return s;
}

Circuit build_iqp_dqc1(const IqpSpec &raw) {
    validate(raw);
    const IqpSpec spec = normalized(raw);
    Circuit c;
    c.num_qubits = spec.num_qubits();
    c.clean_qubit = 0;
    c.outputs = spec.output_qubits();
    for (Qubit j = 0; j < c.num_qubits; ++j) {
        c.add(Gate::h(j));
    }
    for (const auto &[a, b] : spec.edges) {
        c.add(Gate::cz(a, b));
    }
    for (Qubit j = 0; j < c.num_qubits; ++j) {
        if (spec.theta[j] != 0) {
            c.add(Gate::rz8(spec.theta[j], j));
        }
    }
    for (const auto &coupling : spec.zz) {
        if (coupling.k != 0) {
            c.add(Gate::rzz8(coupling.k, coupling.a, coupling.b));
        }
    }
    for (Qubit j = 0; j < c.num_qubits; ++j) {
        c.add(Gate::h(j));
    }
    return c;
}

namespace {

bool is_full_h_layer(const std::vector<Gate> &gates, std::size_t begin, std::size_t n) {
    std::vector<bool> seen(n, false);
    for (std::size_t i = begin; i < begin + n; ++i) {
        if (gates[i].kind != GateKind::H || seen[gates[i].qubits[0]]) {
            return false;
        }
        seen[gates[i].qubits[0]] = true;
    }
    return true;
}

// Z-rotation multiplier equal (up to global phase) to diag(1, e^{i m pi/8}).
int rotation_for_relative_phase(int m, std::size_t gate_index) {
    m = normalize_phase_step(m);
    if (m % 2 != 0) {
        throw ValidationError("gate " + std::to_string(gate_index) +
                              ": phase is not on the pi/8 Z-rotation lattice");
    }
    return normalize_phase_step(-m / 2);
}

}  // namespace

IqpSpec iqp_from_circuit(const Circuit &c) {
    validate(c);
    const std::size_t n = c.num_qubits;
    if (c.clean() != 0) {
        throw ValidationError("IQP circuits keep the clean qubit on wire 0");
    }
    if (c.gates.size() < 2 * n || !is_full_h_layer(c.gates, 0, n) ||
        !is_full_h_layer(c.gates, c.gates.size() - n, n)) {
        throw ValidationError("not an IQP circuit: expected a Hadamard on every wire at both ends");
    }
    IqpSpec spec;
    spec.l = n - 1;
    spec.theta.assign(n, 0);
    spec.outputs = c.outputs;
    std::vector<std::pair<Qubit, Qubit>> cz;
    for (std::size_t i = n; i < c.gates.size() - n; ++i) {
        const Gate &g = c.gates[i];
        const auto &q = g.qubits;
        switch (g.kind) {
            case GateKind::CZ: cz.emplace_back(std::min(q[0], q[1]), std::max(q[0], q[1])); break;
            case GateKind::RZZ8: spec.zz.push_back({q[0], q[1], g.phase_step}); break;
            case GateKind::RZ8: spec.theta[q[0]] += g.phase_step; break;
            case GateKind::Z: spec.theta[q[0]] += rotation_for_relative_phase(8, i); break;
            case GateKind::S: spec.theta[q[0]] += rotation_for_relative_phase(4, i); break;
            case GateKind::Sdg: spec.theta[q[0]] += rotation_for_relative_phase(12, i); break;
            case GateKind::T: spec.theta[q[0]] += rotation_for_relative_phase(2, i); break;
            case GateKind::Tdg: spec.theta[q[0]] += rotation_for_relative_phase(14, i); break;
            case GateKind::P8: spec.theta[q[0]] += rotation_for_relative_phase(g.phase_step, i); break;
            default:
                throw ValidationError("not an IQP circuit: gate " + std::to_string(i) + " (" +
                                      std::string(gate_name(g.kind)) + ") is not diagonal");
        }
    }
    // CZ is an involution, so only edge parity matters.
    std::sort(cz.begin(), cz.end());
    for (std::size_t i = 0; i < cz.size();) {
        std::size_t j = i;
        while (j < cz.size() && cz[j] == cz[i]) {
            ++j;
        }
        if ((j - i) % 2 == 1) {
            spec.edges.push_back(cz[i]);
        }
        i = j;
    }
    return normalized(spec);
}

}  // namespace dqc1
