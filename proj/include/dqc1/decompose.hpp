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

#ifndef DQC1_DECOMPOSE_HPP
#define DQC1_DECOMPOSE_HPP

#include <span>

#include "dqc1/circuit.hpp"

namespace dqc1 {

/// Borrowed ancillas the lowering of a k-controlled NOT asks for: none up to
/// k = 2, k - 2 for the linear chain at k = 3, 4, and two from k = 5 on.
std::size_t required_borrowed_ancillas(std::size_t k);

/// Lowers a k-controlled NOT (controls on qubits 0..k-1, target on qubit k)
/// into H, X, CNOT, T and T-dagger. The ancillas are borrowed: they may hold
/// any basis value on entry and are returned to it. Zero-polarity controls are
/// X-conjugated.
///
/// Throws ValidationError if fewer than `required_borrowed_ancillas(k)`
/// ancillas are given or an ancilla collides with a control or the target.
Circuit decompose_generalized_toffoli(std::size_t k, std::span<const std::uint8_t> polarity,
                                      std::span<const Qubit> ancillas);

/// Replaces every CCX and NCX gate of `c` by its Clifford+T lowering. Each
/// gate may borrow the listed qubits plus any wire it does not itself touch.
Circuit lower_multi_controlled(const Circuit &c, std::span<const Qubit> borrowed = {});

/// True when the circuit only contains H, X, CNOT, T and T-dagger.
bool uses_only_clifford_t(const Circuit &c);

}  // namespace dqc1

#endif
