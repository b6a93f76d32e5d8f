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

#include "dqc1/gadgets.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "dqc1/decompose.hpp"

namespace dqc1 {

namespace {

Qubit single_output(const Circuit &q) {
    if (q.outputs.size() != 1) {
        throw ValidationError("expected exactly one designated output, got " + std::to_string(q.outputs.size()));
    }
    return q.outputs[0];
}

Circuit shifted(const Circuit &c, Qubit offset, std::size_t width) {
    Circuit out = c;
    out.num_qubits = width;
    for (Gate &g : out.gates) {
        for (Qubit &q : g.qubits) {
            q += offset;
        }
    }
    return out;
}

}  // namespace

DwGadget build_dw(const Circuit &q, const DwOptions &options) {
    validate(q);
    const Qubit out = single_output(q);
    const std::size_t n = q.num_qubits;
    const std::size_t width = n + 1;

    Circuit d;
    d.num_qubits = width;
    d.clean_qubit = 0;
    d.outputs = {0};

    std::vector<Qubit> register_wires;
    for (Qubit j = 1; j <= n; ++j) {
        register_wires.push_back(j);
    }
    const std::vector<std::uint8_t> all_zero(n, 0);
    const Gate flag = Gate::mcx(register_wires, all_zero, 0);

    const Circuit forward = controlled_on(shifted(q, 1, width), 0, true);
    const Circuit backward = controlled_on(shifted(invert(q), 1, width), 0, true);

    d.add(flag);
    d.gates.insert(d.gates.end(), forward.gates.begin(), forward.gates.end());
    d.add(Gate::cz(0, out + 1));
    d.gates.insert(d.gates.end(), backward.gates.begin(), backward.gates.end());
    d.add(flag);

    DwGadget gadget{d, n, 0};
    if (options.decompose_toffoli) {
        const std::size_t extra = required_borrowed_ancillas(n);
        std::vector<Qubit> ancillas;
        for (std::size_t i = 0; i < extra; ++i) {
            ancillas.push_back(static_cast<Qubit>(width + i));
        }
        Circuit widened = d;
        widened.num_qubits = width + extra;
        gadget.circuit = lower_multi_controlled(widened, ancillas);
        gadget.extra_ancillas = extra;
    }
    return gadget;
}

double lemma1_prediction(double p, std::size_t n) {
    constexpr double kSlack = 1e-12;
    if (!(p >= -kSlack && p <= 1.0 + kSlack)) {
        throw Error("probability must lie in [0, 1]");
    }
    p = std::clamp(p, 0.0, 1.0);
    if (n == 0) {
        throw Error("qubit count must be positive");
    }
    return std::ldexp(4.0 * p * (1.0 - p), -static_cast<int>(n));
}

TeleportedCircuit teleport_compile(const Circuit &q) {
    validate(q);
    const Qubit out = single_output(q);
    const std::size_t n = q.num_qubits;

    // Last gate index touching each logical qubit; no teleport follows it.
    std::vector<std::ptrdiff_t> last_use(n, -1);
    for (std::size_t i = 0; i < q.gates.size(); ++i) {
        for (Qubit j : q.gates[i].qubits) {
            last_use[j] = static_cast<std::ptrdiff_t>(i);
        }
    }

    struct Teleport {
        Qubit from, half, into;
    };
    std::vector<Teleport> teleports;
    std::vector<Qubit> segment(n);
    for (Qubit j = 0; j < n; ++j) {
        segment[j] = j;
    }
    Qubit next_wire = static_cast<Qubit>(n);
    std::vector<Gate> body;
    for (std::size_t i = 0; i < q.gates.size(); ++i) {
        Gate g = q.gates[i];
        for (Qubit &j : g.qubits) {
            j = segment[j];
        }
        body.push_back(std::move(g));
        for (Qubit j : q.gates[i].qubits) {
            if (last_use[j] == static_cast<std::ptrdiff_t>(i)) {
                continue;
            }
            Teleport t{segment[j], next_wire, static_cast<Qubit>(next_wire + 1)};
            next_wire += 2;
            segment[j] = t.into;
            teleports.push_back(t);
        }
    }

    TeleportedCircuit result;
    Circuit &c = result.circuit;
    c.num_qubits = next_wire;
    for (const Teleport &t : teleports) {
        c.add(Gate::h(t.half));
        c.add(Gate::cx(t.half, t.into));
    }
    c.gates.insert(c.gates.end(), body.begin(), body.end());
    for (const Teleport &t : teleports) {
        c.add(Gate::cx(t.from, t.half));
        c.add(Gate::h(t.from));
    }
    for (const Teleport &t : teleports) {
        c.add(Gate::x(t.from));
        c.add(Gate::x(t.half));
        result.p.push_back(t.from);
        result.p.push_back(t.half);
    }
    result.o = segment[out];
    result.teleports = teleports.size();
    c.outputs = {result.o};
    c.outputs.insert(c.outputs.end(), result.p.begin(), result.p.end());
    return result;
}

std::size_t vw_depth_bound(std::size_t r) {
    const std::size_t levels = std::bit_width(std::max<std::size_t>(r, 2) - 1);
    return kVwDepthConstant + kVwDepthPerLevel * levels;
}

VwGadget build_vw(const Circuit &q) {
    VwGadget v;
    v.teleported = teleport_compile(q);
    Circuit c = v.teleported.circuit;
    Qubit next_wire = static_cast<Qubit>(c.num_qubits);

    std::vector<Qubit> level = v.teleported.p;
    if (level.empty()) {
        v.p_and = next_wire++;
        c.add(Gate::x(v.p_and));
    } else if (level.size() == 1) {
        v.p_and = next_wire++;
        c.add(Gate::cx(level[0], v.p_and));
    } else {
        while (level.size() > 1) {
            std::vector<Qubit> next;
            for (std::size_t i = 0; i + 1 < level.size(); i += 2) {
                const Qubit fresh = next_wire++;
                c.add(Gate::ccx(level[i], level[i + 1], fresh));
                next.push_back(fresh);
            }
            if (level.size() % 2 == 1) {
                next.push_back(level.back());
            }
            level = std::move(next);
        }
        v.p_and = level[0];
    }

    v.o_prime = next_wire++;
    c.add(Gate::x(v.o_prime));
    c.add(Gate::ccx(v.teleported.o, v.p_and, v.o_prime));
    c.num_qubits = next_wire;
    c.outputs = {v.o_prime};
    c.clean_qubit = v.o_prime;

    v.circuit = std::move(c);
    v.l = v.circuit.num_qubits - 1;
    v.r = v.teleported.r();
    v.o = v.teleported.o;
    v.p = v.teleported.p;
    return v;
}

}  // namespace dqc1
