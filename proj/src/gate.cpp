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

#include "dqc1/gate.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace dqc1 {

std::string_view gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::H: return "H";
        case GateKind::X: return "X";
        case GateKind::Z: return "Z";
        case GateKind::S: return "S";
        case GateKind::Sdg: return "SDG";
        case GateKind::T: return "T";
        case GateKind::Tdg: return "TDG";
        case GateKind::P8: return "P8";
        case GateKind::RZ8: return "RZ8";
        case GateKind::CX: return "CNOT";
        case GateKind::CZ: return "CZ";
        case GateKind::CCX: return "CCX";
        case GateKind::MCX: return "NCX";
        case GateKind::RZZ8: return "RZZ8";
    }
    return "?";
}

std::size_t gate_arity(GateKind kind) {
    switch (kind) {
        case GateKind::CX:
        case GateKind::CZ:
        case GateKind::RZZ8: return 2;
        case GateKind::CCX: return 3;
        case GateKind::MCX: return 0;
        default: return 1;
    }
}

bool has_phase_step(GateKind kind) {
    return kind == GateKind::P8 || kind == GateKind::RZ8 || kind == GateKind::RZZ8;
}

bool is_monomial(GateKind kind) { return kind != GateKind::H; }

bool is_diagonal(GateKind kind) {
    switch (kind) {
        case GateKind::H:
        case GateKind::X:
        case GateKind::CX:
        case GateKind::CCX:
        case GateKind::MCX: return false;
        default: return true;
    }
}

Complex phase_eighth(int m) {
    static const std::array<Complex, 16> table = [] {
        std::array<Complex, 16> t{};
        for (int j = 0; j < 16; ++j) {
            double angle = j * M_PI / 8.0;
            t[j] = {std::cos(angle), std::sin(angle)};
        }
        // Multiples of pi/4 land on exact lattice points.
        t[0] = {1.0, 0.0};
        t[2] = {M_SQRT1_2, M_SQRT1_2};
        t[4] = {0.0, 1.0};
        t[6] = {-M_SQRT1_2, M_SQRT1_2};
        t[8] = {-1.0, 0.0};
        t[10] = {-M_SQRT1_2, -M_SQRT1_2};
        t[12] = {0.0, -1.0};
        t[14] = {M_SQRT1_2, -M_SQRT1_2};
        return t;
    }();
    return table[normalize_phase_step(m)];
}

int normalize_phase_step(int k) { return ((k % 16) + 16) % 16; }

Gate Gate::p8(int k, Qubit q) { return {GateKind::P8, {q}, {}, normalize_phase_step(k)}; }

Gate Gate::rz8(int k, Qubit q) { return {GateKind::RZ8, {q}, {}, normalize_phase_step(k)}; }

Gate Gate::rzz8(int k, Qubit a, Qubit b) { return {GateKind::RZZ8, {a, b}, {}, normalize_phase_step(k)}; }

Gate Gate::mcx(std::span<const Qubit> controls, std::span<const std::uint8_t> polarity, Qubit target) {
    Gate g{GateKind::MCX, {controls.begin(), controls.end()}, {polarity.begin(), polarity.end()}, 0};
    g.qubits.push_back(target);
    return g;
}

std::size_t Gate::num_controls() const {
    switch (kind) {
        case GateKind::CX: return 1;
        case GateKind::CCX: return 2;
        case GateKind::MCX: return qubits.empty() ? 0 : qubits.size() - 1;
        default: return 0;
    }
}

Gate Gate::inverse() const {
    Gate g = *this;
    switch (kind) {
        case GateKind::S: g.kind = GateKind::Sdg; break;
        case GateKind::Sdg: g.kind = GateKind::S; break;
        case GateKind::T: g.kind = GateKind::Tdg; break;
        case GateKind::Tdg: g.kind = GateKind::T; break;
        case GateKind::P8:
        case GateKind::RZ8:
        case GateKind::RZZ8: g.phase_step = normalize_phase_step(16 - phase_step); break;
        default: break;
    }
    return g;
}

void Gate::validate(std::size_t num_qubits) const {
    std::size_t arity = gate_arity(kind);
    if (arity != 0 && qubits.size() != arity) {
        throw ValidationError(std::string(gate_name(kind)) + " expects " + std::to_string(arity) + " qubits, got " +
                              std::to_string(qubits.size()));
    }
    if (kind == GateKind::MCX && qubits.size() < 2) {
        throw ValidationError("NCX needs at least one control and a target");
    }
    for (std::size_t i = 0; i < qubits.size(); ++i) {
        if (qubits[i] >= num_qubits) {
            throw ValidationError("index out of range: qubit " + std::to_string(qubits[i]) + " in a " +
                                  std::to_string(num_qubits) + "-qubit circuit");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (qubits[i] == qubits[j]) {
                throw ValidationError("duplicate qubit " + std::to_string(qubits[i]));
            }
        }
    }
    if (kind == GateKind::MCX) {
        if (polarity.size() != num_controls()) {
            throw ValidationError("polarity length " + std::to_string(polarity.size()) + " does not match " +
                                  std::to_string(num_controls()) + " controls");
        }
        if (std::any_of(polarity.begin(), polarity.end(), [](std::uint8_t b) { return b > 1; })) {
            throw ValidationError("polarity entries must be 0 or 1");
        }
    } else if (!polarity.empty()) {
        throw ValidationError("polarity is only allowed on NCX");
    }
    if (has_phase_step(kind)) {
        if (phase_step < 0 || phase_step >= 16) {
            throw ValidationError("phase step must be stored modulo 16");
        }
    } else if (phase_step != 0) {
        throw ValidationError("phase step is only allowed on rotation gates");
    }
}

}  // namespace dqc1
