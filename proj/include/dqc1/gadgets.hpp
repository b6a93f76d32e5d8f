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

#ifndef DQC1_GADGETS_HPP
#define DQC1_GADGETS_HPP

#include "dqc1/circuit.hpp"

namespace dqc1 {

// ---------------------------------------------------------------------------
// One-clean-qubit phase-kickback gadget.
//
// For an n-qubit circuit Q with acceptance probability p, the gadget acts on
// n + 1 wires (wire 0 is both the clean qubit and the output):
//
//   NCX(0...0 on wires 1..n -> 0) . C0(Q) . CZ(0, out) . C0(Q^dag) . NCX(...)
//
// Run on |0><0| (x) (I/2)^n it accepts with probability (4 / 2^n) p (1 - p).
// The gadget accepts with probability zero for p = 1 as well as p = 0, so
// callers who need "nonzero iff p > 0" must arrange p < 1 themselves.
// ---------------------------------------------------------------------------

struct DwOptions {
    /// Lower the generalized Toffolis to H/X/CNOT/T/T-dagger. The borrowed
    /// ancillas this needs are appended as extra (mixed) wires after wire n.
    bool decompose_toffoli = false;
};

struct DwGadget {
    Circuit circuit;
    std::size_t source_n = 0;
    std::size_t extra_ancillas = 0;
};

DwGadget build_dw(const Circuit &q, const DwOptions &options = {});

/// (4 / 2^n) p (1 - p). Simulated probabilities may overshoot [0, 1] by a
/// rounding error, so p within 1e-12 of the interval is clamped; anything
/// further out, or n == 0, throws Error.
double lemma1_prediction(double p, std::size_t n);

// ---------------------------------------------------------------------------
// Gate teleportation to constant depth.
// ---------------------------------------------------------------------------

/// Depth of every circuit produced by teleport_compile is at most this.
inline constexpr std::size_t kTeleportDepthBound = 6;

struct TeleportedCircuit {
    /// Acts on |0...0>. Outputs are (o, p_1, ..., p_r).
    Circuit circuit;
    Qubit o = 0;
    std::vector<Qubit> p;
    std::size_t teleports = 0;

    std::size_t r() const { return p.size(); }
};

/// Each gate of `q` gets its own wire segments; every segment boundary is
/// bridged by a Bell pair and a Bell measurement. All Bell pairs are prepared
/// first, every gate then runs in one layer, and the measurements close out.
/// An X on both measured wires makes the no-correction outcome read all ones.
/// Conditioned on p_1 = ... = p_r = 1 (probability exactly 2^-r) the o wire
/// carries the output of `q`.
TeleportedCircuit teleport_compile(const Circuit &q);

// ---------------------------------------------------------------------------
// Log-depth postselection gadget V_w built on the teleported circuit.
// ---------------------------------------------------------------------------

inline constexpr std::size_t kVwDepthConstant = 7;
inline constexpr std::size_t kVwDepthPerLevel = 1;

/// kVwDepthConstant + kVwDepthPerLevel * ceil(log2(max(r, 2))).
std::size_t vw_depth_bound(std::size_t r);

struct VwGadget {
    /// Outputs [o'], clean qubit o' (the last wire).
    Circuit circuit;
    std::size_t l = 0;
    std::size_t r = 0;
    Qubit o = 0;
    std::vector<Qubit> p;
    Qubit p_and = 0;
    Qubit o_prime = 0;
    TeleportedCircuit teleported;
};

/// q' followed by a balanced Toffoli tree computing p' = AND(p_i) on fresh
/// zero wires, then X(o') and CCX(o, p' -> o'). On |0...0>,
/// P(o' = 0) = P_q(accept) / 2^r.
VwGadget build_vw(const Circuit &q);

}  // namespace dqc1

#endif
