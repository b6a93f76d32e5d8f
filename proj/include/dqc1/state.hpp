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

#ifndef DQC1_STATE_HPP
#define DQC1_STATE_HPP

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dqc1/circuit.hpp"

namespace dqc1 {

using BasisIndex = std::uint64_t;

/// Image of a basis state under a monomial gate: U|x> = phase |image>.
struct MonomialImage {
    BasisIndex image;
    Complex phase;
};

/// Evaluates a non-H gate on one basis state. Bit j of the index is qubit j.
MonomialImage apply_monomial(const Gate &g, BasisIndex x);

/// Dense 2^n amplitude vector, little-endian: bit j of an index is the value
/// of qubit j.
class StateVector {
   public:
    /// |basis> on n qubits.
    explicit StateVector(std::size_t num_qubits, BasisIndex basis = 0);

    static StateVector from_amplitudes(std::vector<Complex> amplitudes);

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t size() const { return amps_.size(); }
    const std::vector<Complex> &amplitudes() const { return amps_; }
    Complex operator[](BasisIndex i) const { return amps_[i]; }

    /// Resets to the basis state |basis> without reallocating.
    void reset(BasisIndex basis);

    void apply(const Gate &g);
    void apply(const Circuit &c);

    double norm_squared() const;

    /// Probability that `qubit` reads `value`.
    double probability(Qubit qubit, bool value) const;

   private:
    StateVector() = default;
    std::size_t num_qubits_ = 0;
    std::vector<Complex> amps_;
};

/// Hash-map state holding only nonzero amplitudes. Indices are 64-bit, so up
/// to 64 qubits; cost scales with the support rather than 2^n. Monomial gates
/// only relabel keys; H splits each entry in two and merges.
class SparseState {
   public:
    explicit SparseState(std::size_t num_qubits, BasisIndex basis = 0);

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t support() const { return entries_.size(); }

    void apply(const Gate &g);
    void apply(const Circuit &c);

    /// Calls f(index, amplitude) for every stored entry, in ascending index
    /// order so accumulations are reproducible.
    template <class F>
    void for_each_sorted(F &&f) const {
        for (const auto &[k, v] : sorted()) {
            f(k, v);
        }
    }

    std::vector<std::pair<BasisIndex, Complex>> sorted() const;

   private:
    std::size_t num_qubits_;
    std::vector<std::pair<BasisIndex, Complex>> entries_;
};

}  // namespace dqc1

#endif
