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

#include "dqc1/decompose.hpp"

#include <algorithm>

namespace dqc1 {

namespace {

using Qubits = std::vector<Qubit>;

void emit_toffoli(std::vector<Gate> &out, Qubit a, Qubit b, Qubit t) {
    out.push_back(Gate::h(t));
    out.push_back(Gate::cx(b, t));
    out.push_back(Gate::tdg(t));
    out.push_back(Gate::cx(a, t));
    out.push_back(Gate::t(t));
    out.push_back(Gate::cx(b, t));
    out.push_back(Gate::tdg(t));
    out.push_back(Gate::cx(a, t));
    out.push_back(Gate::t(b));
    out.push_back(Gate::t(t));
    out.push_back(Gate::h(t));
    out.push_back(Gate::cx(a, b));
    out.push_back(Gate::t(a));
    out.push_back(Gate::tdg(b));
    out.push_back(Gate::cx(a, b));
}

// Linear chain over dirty ancillas a[0..k-3]. Four passes of the ladder:
// the first two land the product on the target, the last two undo the
// ancilla damage.
void emit_vchain(std::vector<Gate> &out, const Qubits &c, Qubit t, const Qubits &a) {
    const std::size_t k = c.size();
    auto ladder = [&](bool include_target_rungs) {
        if (include_target_rungs) {
            emit_toffoli(out, c[k - 1], a[k - 3], t);
        }
        for (std::size_t i = k - 2; i >= 2; --i) {
            emit_toffoli(out, c[i], a[i - 2], a[i - 1]);
        }
        emit_toffoli(out, c[0], c[1], a[0]);
        for (std::size_t i = 2; i <= k - 2; ++i) {
            emit_toffoli(out, c[i], a[i - 2], a[i - 1]);
        }
        if (include_target_rungs) {
            emit_toffoli(out, c[k - 1], a[k - 3], t);
        }
    };
    ladder(true);
    ladder(false);
}

void emit_positive_mcx(std::vector<Gate> &out, const Qubits &c, Qubit t, const Qubits &pool) {
    const std::size_t k = c.size();
    if (k == 0) {
        out.push_back(Gate::x(t));
        return;
    }
    if (k == 1) {
        out.push_back(Gate::cx(c[0], t));
        return;
    }
    if (k == 2) {
        emit_toffoli(out, c[0], c[1], t);
        return;
    }
    if (k <= 4 && pool.size() >= k - 2) {
        emit_vchain(out, c, t, Qubits(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k - 2)));
        return;
    }
    if (pool.empty()) {
        throw ValidationError("insufficient ancillas for a " + std::to_string(k) + "-controlled NOT");
    }
    // Split the controls: t ^= B.b, b ^= A, t ^= B.b, b ^= A leaves
    // t ^= A.B with the borrowed b restored.
    const std::size_t first = (k + 1) / 2;
    Qubits group_a(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(first));
    Qubits group_b(c.begin() + static_cast<std::ptrdiff_t>(first), c.end());
    const Qubit b = pool[0];
    Qubits rest(pool.begin() + 1, pool.end());

    Qubits b_controls = group_b;
    b_controls.push_back(b);
    Qubits pool_for_target = group_a;
    pool_for_target.insert(pool_for_target.end(), rest.begin(), rest.end());
    Qubits pool_for_b = group_b;
    pool_for_b.push_back(t);
    pool_for_b.insert(pool_for_b.end(), rest.begin(), rest.end());

    emit_positive_mcx(out, b_controls, t, pool_for_target);
    emit_positive_mcx(out, group_a, b, pool_for_b);
    emit_positive_mcx(out, b_controls, t, pool_for_target);
    emit_positive_mcx(out, group_a, b, pool_for_b);
}

void emit_lowered(std::vector<Gate> &out, const Qubits &controls, std::span<const std::uint8_t> polarity,
                  Qubit target, const Qubits &pool) {
    for (std::size_t i = 0; i < controls.size(); ++i) {
        if (!polarity[i]) {
            out.push_back(Gate::x(controls[i]));
        }
    }
    emit_positive_mcx(out, controls, target, pool);
    for (std::size_t i = 0; i < controls.size(); ++i) {
        if (!polarity[i]) {
            out.push_back(Gate::x(controls[i]));
        }
    }
}

}  // namespace

std::size_t required_borrowed_ancillas(std::size_t k) {
    if (k <= 2) {
        return 0;
    }
    if (k <= 4) {
        return k - 2;
    }
    return 2;
}

Circuit decompose_generalized_toffoli(std::size_t k, std::span<const std::uint8_t> polarity,
                                      std::span<const Qubit> ancillas) {
    if (k == 0) {
        throw ValidationError("a generalized Toffoli needs at least one control");
    }
    if (polarity.size() != k) {
        throw ValidationError("polarity length must equal the control count");
    }
    const std::size_t need = required_borrowed_ancillas(k);
    if (ancillas.size() < need) {
        throw ValidationError("insufficient ancillas: " + std::to_string(k) + " controls need " +
                              std::to_string(need) + ", got " + std::to_string(ancillas.size()));
    }
    std::size_t width = k + 1;
    for (std::size_t i = 0; i < ancillas.size(); ++i) {
        if (ancillas[i] <= k) {
            throw ValidationError("ancilla " + std::to_string(ancillas[i]) + " collides with a control or the target");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (ancillas[i] == ancillas[j]) {
                throw ValidationError("duplicate ancilla " + std::to_string(ancillas[i]));
            }
        }
        width = std::max<std::size_t>(width, std::size_t{ancillas[i]} + 1);
    }
    Qubits controls(k);
    for (std::size_t i = 0; i < k; ++i) {
        controls[i] = static_cast<Qubit>(i);
    }
    Circuit c;
    c.num_qubits = width;
    c.outputs = {static_cast<Qubit>(k)};
    emit_lowered(c.gates, controls, polarity, static_cast<Qubit>(k), Qubits(ancillas.begin(), ancillas.end()));
    return c;
}

Circuit lower_multi_controlled(const Circuit &c, std::span<const Qubit> borrowed) {
    Circuit out = c;
    out.gates.clear();
    for (const Gate &g : c.gates) {
        if (g.kind != GateKind::CCX && g.kind != GateKind::MCX) {
            out.gates.push_back(g);
            continue;
        }
        Qubits pool;
        auto touches = [&](Qubit q) { return std::find(g.qubits.begin(), g.qubits.end(), q) != g.qubits.end(); };
        for (Qubit q : borrowed) {
            if (!touches(q)) {
                pool.push_back(q);
            }
        }
        for (Qubit q = 0; q < c.num_qubits; ++q) {
            if (!touches(q) && std::find(pool.begin(), pool.end(), q) == pool.end()) {
                pool.push_back(q);
            }
        }
        auto ctl = g.controls();
        Qubits controls(ctl.begin(), ctl.end());
        std::vector<std::uint8_t> polarity =
            g.kind == GateKind::CCX ? std::vector<std::uint8_t>{1, 1} : g.polarity;
        emit_lowered(out.gates, controls, polarity, g.target(), pool);
    }
    return out;
}

bool uses_only_clifford_t(const Circuit &c) {
    return std::all_of(c.gates.begin(), c.gates.end(), [](const Gate &g) {
        switch (g.kind) {
            case GateKind::H:
            case GateKind::X:
            case GateKind::CX:
            case GateKind::T:
            case GateKind::Tdg: return true;
            default: return false;
        }
    });
}

}  // namespace dqc1
