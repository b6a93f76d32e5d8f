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

#ifndef DQC1_GATE_HPP
#define DQC1_GATE_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dqc1 {

using Qubit = std::uint32_t;
using Complex = std::complex<double>;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A circuit or gate violated one of its structural invariants.
class ValidationError : public Error {
   public:
    using Error::Error;
};

/// A simulation was refused because it would exceed a configured size cap.
class CapExceeded : public Error {
   public:
    using Error::Error;
};

enum class GateKind : std::uint8_t {
    H,
    X,
    Z,
    S,
    Sdg,
    T,
    Tdg,
    P8,    // diag(1, e^{i k pi/8})
    RZ8,   // exp(i k pi/8 Z)
    CX,
    CZ,
    CCX,
    MCX,   // generalized Toffoli with per-control polarity
    RZZ8,  // exp(i k pi/8 Z (x) Z)
};

std::string_view gate_name(GateKind kind);

/// Number of qubits the kind acts on, or 0 for the variadic MCX.
std::size_t gate_arity(GateKind kind);

bool has_phase_step(GateKind kind);

/// True when the gate maps every basis state to a single basis state times a
/// phase. Only H is not monomial.
bool is_monomial(GateKind kind);

/// True when the gate is diagonal in the computational basis.
bool is_diagonal(GateKind kind);

/// e^{i m pi/8}, with the multiples of pi/4 reproduced exactly.
Complex phase_eighth(int m);

/// One primitive operation.
///
/// `qubits` lists controls before the target for CX, CCX and MCX. `polarity`
/// is only populated for MCX and holds one entry per control (1 = fire on
/// |1>, 0 = fire on |0>). `phase_step` is only meaningful for P8, RZ8 and
/// RZZ8 and is kept in [0, 16).
struct Gate {
    GateKind kind = GateKind::H;
    std::vector<Qubit> qubits;
    std::vector<std::uint8_t> polarity;
    int phase_step = 0;

    static Gate h(Qubit q) { return {GateKind::H, {q}, {}, 0}; }
    static Gate x(Qubit q) { return {GateKind::X, {q}, {}, 0}; }
    static Gate z(Qubit q) { return {GateKind::Z, {q}, {}, 0}; }
    static Gate s(Qubit q) { return {GateKind::S, {q}, {}, 0}; }
    static Gate sdg(Qubit q) { return {GateKind::Sdg, {q}, {}, 0}; }
    static Gate t(Qubit q) { return {GateKind::T, {q}, {}, 0}; }
    static Gate tdg(Qubit q) { return {GateKind::Tdg, {q}, {}, 0}; }
    static Gate p8(int k, Qubit q);
    static Gate rz8(int k, Qubit q);
    static Gate cx(Qubit control, Qubit target) { return {GateKind::CX, {control, target}, {}, 0}; }
    static Gate cz(Qubit a, Qubit b) { return {GateKind::CZ, {a, b}, {}, 0}; }
    static Gate ccx(Qubit c1, Qubit c2, Qubit target) { return {GateKind::CCX, {c1, c2, target}, {}, 0}; }
    static Gate mcx(std::span<const Qubit> controls, std::span<const std::uint8_t> polarity, Qubit target);
    static Gate rzz8(int k, Qubit a, Qubit b);

    std::size_t num_controls() const;
    std::span<const Qubit> controls() const { return {qubits.data(), num_controls()}; }
    Qubit target() const { return qubits.back(); }

    /// The inverse gate (self-inverse kinds map to themselves).
    Gate inverse() const;

    /// Checks the per-gate invariants against a circuit of `num_qubits`.
    /// Throws ValidationError.
    void validate(std::size_t num_qubits) const;

    bool operator==(const Gate &) const = default;
};

int normalize_phase_step(int k);

}  // namespace dqc1

#endif
