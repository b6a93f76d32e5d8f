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

#include "dqc1/circuit.hpp"

#include <algorithm>
#include <string>

namespace dqc1 {

void validate(const Circuit &c) {
    if (c.num_qubits == 0) {
        throw ValidationError("circuit must have at least one qubit");
    }
    if (c.outputs.empty()) {
        throw ValidationError("at least one output qubit must be designated");
    }
    for (std::size_t i = 0; i < c.outputs.size(); ++i) {
        if (c.outputs[i] >= c.num_qubits) {
            throw ValidationError("outputs: index out of range: qubit " + std::to_string(c.outputs[i]));
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (c.outputs[i] == c.outputs[j]) {
                throw ValidationError("outputs: duplicate qubit " + std::to_string(c.outputs[i]));
            }
        }
    }
    if (c.clean_qubit && *c.clean_qubit >= c.num_qubits) {
        throw ValidationError("clean qubit: index out of range: qubit " + std::to_string(*c.clean_qubit));
    }
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        try {
            c.gates[i].validate(c.num_qubits);
        } catch (const ValidationError &e) {
            throw ValidationError("gate " + std::to_string(i) + " (" + std::string(gate_name(c.gates[i].kind)) +
                                  "): " + e.what());
        }
    }
}

std::size_t depth(const Circuit &c) {
    std::vector<std::size_t> frontier(c.num_qubits, 0);
    std::size_t result = 0;
    for (const Gate &g : c.gates) {
        std::size_t layer = 0;
        for (Qubit q : g.qubits) {
            layer = std::max(layer, frontier[q]);
        }
        ++layer;
        for (Qubit q : g.qubits) {
            frontier[q] = layer;
        }
        result = std::max(result, layer);
    }
    return result;
}

Circuit invert(const Circuit &c) {
    Circuit out = c;
    out.gates.clear();
    out.gates.reserve(c.gates.size());
    for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
        out.gates.push_back(it->inverse());
    }
    return out;
}

Circuit concat(const Circuit &a, const Circuit &b) {
    Circuit out = a;
    out.num_qubits = std::max(a.num_qubits, b.num_qubits);
    out.gates.insert(out.gates.end(), b.gates.begin(), b.gates.end());
    return out;
}

namespace {

// diag(1,1,1,e^{i m pi/8}) on (c, t) for even m.
void emit_controlled_phase(std::vector<Gate> &out, Qubit c, Qubit t, int m) {
    m = normalize_phase_step(m);
    if (m == 0) {
        return;
    }
    if (m % 2 != 0) {
        throw ValidationError("controlled phase of " + std::to_string(m) +
                              "*pi/8 needs pi/16 resolution and is not supported");
    }
    int half = m / 2;
    out.push_back(Gate::p8(half, c));
    out.push_back(Gate::p8(half, t));
    out.push_back(Gate::cx(c, t));
    out.push_back(Gate::p8(-half, t));
    out.push_back(Gate::cx(c, t));
}

// Controlled exp(i k pi/8 Z) on t.
void emit_controlled_rz8(std::vector<Gate> &out, Qubit c, Qubit t, int k) {
    if (normalize_phase_step(k) == 0) {
        return;
    }
    out.push_back(Gate::p8(k, c));
    emit_controlled_phase(out, c, t, -2 * k);
}

void emit_controlled(std::vector<Gate> &out, const Gate &g, Qubit c) {
    const auto &q = g.qubits;
    switch (g.kind) {
        case GateKind::H:
            // W X W^dag = H with W = S H T; conditioned X becomes conditioned H.
            out.push_back(Gate::s(q[0]));
            out.push_back(Gate::h(q[0]));
            out.push_back(Gate::t(q[0]));
            out.push_back(Gate::cx(c, q[0]));
            out.push_back(Gate::tdg(q[0]));
            out.push_back(Gate::h(q[0]));
            out.push_back(Gate::sdg(q[0]));
            break;
        case GateKind::X: out.push_back(Gate::cx(c, q[0])); break;
        case GateKind::Z: out.push_back(Gate::cz(c, q[0])); break;
        case GateKind::S: emit_controlled_phase(out, c, q[0], 4); break;
        case GateKind::Sdg: emit_controlled_phase(out, c, q[0], 12); break;
        case GateKind::T: emit_controlled_phase(out, c, q[0], 2); break;
        case GateKind::Tdg: emit_controlled_phase(out, c, q[0], 14); break;
        case GateKind::P8: emit_controlled_phase(out, c, q[0], g.phase_step); break;
        case GateKind::RZ8: emit_controlled_rz8(out, c, q[0], g.phase_step); break;
        case GateKind::CX: out.push_back(Gate::ccx(c, q[0], q[1])); break;
        case GateKind::CZ:
            out.push_back(Gate::h(q[1]));
            out.push_back(Gate::ccx(c, q[0], q[1]));
            out.push_back(Gate::h(q[1]));
            break;
        case GateKind::CCX: {
            const Qubit controls[] = {c, q[0], q[1]};
            const std::uint8_t pol[] = {1, 1, 1};
            out.push_back(Gate::mcx(controls, pol, q[2]));
            break;
        }
        case GateKind::MCX: {
            std::vector<Qubit> controls{c};
            std::vector<std::uint8_t> pol{1};
            auto gc = g.controls();
            controls.insert(controls.end(), gc.begin(), gc.end());
            pol.insert(pol.end(), g.polarity.begin(), g.polarity.end());
            out.push_back(Gate::mcx(controls, pol, g.target()));
            break;
        }
        case GateKind::RZZ8:
            out.push_back(Gate::cx(q[0], q[1]));
            emit_controlled_rz8(out, c, q[1], g.phase_step);
            out.push_back(Gate::cx(q[0], q[1]));
            break;
    }
}

}  // namespace

Circuit controlled_on(const Circuit &c, Qubit ctrl, bool polarity) {
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        const auto &qs = c.gates[i].qubits;
        if (std::find(qs.begin(), qs.end(), ctrl) != qs.end()) {
            throw ValidationError("control qubit " + std::to_string(ctrl) + " collides with gate " +
                                  std::to_string(i));
        }
    }
    Circuit out = c;
    out.num_qubits = std::max<std::size_t>(c.num_qubits, std::size_t{ctrl} + 1);
    out.gates.clear();
    if (!polarity) {
        out.gates.push_back(Gate::x(ctrl));
    }
    for (const Gate &g : c.gates) {
        emit_controlled(out.gates, g, ctrl);
    }
    if (!polarity) {
        out.gates.push_back(Gate::x(ctrl));
    }
    return out;
}

std::set<Qubit> used_qubits(const Circuit &c) {
    std::set<Qubit> s;
    for (const Gate &g : c.gates) {
        s.insert(g.qubits.begin(), g.qubits.end());
    }
    return s;
}

namespace {

std::set<Qubit> backward_closure(const Circuit &c, std::vector<Qubit> seed, std::vector<bool> *included) {
    std::vector<bool> in_cone(c.num_qubits, false);
    std::set<Qubit> cone;
    for (Qubit q : seed) {
        in_cone[q] = true;
        cone.insert(q);
    }
    if (included) {
        included->assign(c.gates.size(), false);
    }
    for (std::size_t i = c.gates.size(); i-- > 0;) {
        const Gate &g = c.gates[i];
        bool touches = std::any_of(g.qubits.begin(), g.qubits.end(), [&](Qubit q) { return in_cone[q]; });
        if (!touches) {
            continue;
        }
        for (Qubit q : g.qubits) {
            in_cone[q] = true;
            cone.insert(q);
        }
        if (included) {
            (*included)[i] = true;
        }
    }
    return cone;
}

}  // namespace

LightCone light_cone(const Circuit &c, Qubit out) {
    if (out >= c.num_qubits) {
        throw ValidationError("light cone output index out of range");
    }
    return {backward_closure(c, {out}, nullptr), out};
}

std::set<Qubit> light_cone_union(const Circuit &c, const std::vector<Qubit> &outs) {
    for (Qubit q : outs) {
        if (q >= c.num_qubits) {
            throw ValidationError("light cone output index out of range");
        }
    }
    return backward_closure(c, outs, nullptr);
}

Qubit InducedCircuit::local(Qubit original) const {
    auto it = std::lower_bound(map.begin(), map.end(), original);
    if (it == map.end() || *it != original) {
        throw Error("qubit " + std::to_string(original) + " is outside the induced subcircuit");
    }
    return static_cast<Qubit>(it - map.begin());
}

InducedCircuit induced_subcircuit(const Circuit &c, const std::vector<Qubit> &seed) {
    std::vector<bool> included;
    std::set<Qubit> cone = backward_closure(c, seed, &included);
    InducedCircuit result;
    result.map.assign(cone.begin(), cone.end());
    result.circuit.num_qubits = result.map.size();
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        if (!included[i]) {
            continue;
        }
        Gate g = c.gates[i];
        for (Qubit &q : g.qubits) {
            q = result.local(q);
        }
        result.circuit.gates.push_back(std::move(g));
    }
    result.circuit.outputs.clear();
    for (Qubit q : seed) {
        result.circuit.outputs.push_back(result.local(q));
    }
    if (cone.count(c.clean())) {
        result.circuit.clean_qubit = result.local(c.clean());
    } else {
        result.circuit.clean_qubit.reset();
    }
    return result;
}

}  // namespace dqc1
