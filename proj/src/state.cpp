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

#include "dqc1/state.hpp"

#include <algorithm>
#include <cmath>

namespace dqc1 {

namespace {

constexpr BasisIndex bit(Qubit q) { return BasisIndex{1} << q; }

struct SingleDiagonal {
    Complex on_zero;
    Complex on_one;
};

SingleDiagonal single_diagonal(const Gate &g) {
    switch (g.kind) {
        case GateKind::Z: return {1.0, -1.0};
        case GateKind::S: return {1.0, phase_eighth(4)};
        case GateKind::Sdg: return {1.0, phase_eighth(12)};
        case GateKind::T: return {1.0, phase_eighth(2)};
        case GateKind::Tdg: return {1.0, phase_eighth(14)};
        case GateKind::P8: return {1.0, phase_eighth(g.phase_step)};
        case GateKind::RZ8: return {phase_eighth(g.phase_step), phase_eighth(-g.phase_step)};
        default: throw Error("not a single-qubit diagonal gate");
    }
}

// Controls of an X-type gate as (mask, required value).
std::pair<BasisIndex, BasisIndex> control_pattern(const Gate &g) {
    BasisIndex mask = 0, value = 0;
    auto controls = g.controls();
    for (std::size_t i = 0; i < controls.size(); ++i) {
        mask |= bit(controls[i]);
        bool on = g.kind == GateKind::MCX ? g.polarity[i] != 0 : true;
        if (on) {
            value |= bit(controls[i]);
        }
    }
    return {mask, value};
}

}  // namespace

MonomialImage apply_monomial(const Gate &g, BasisIndex x) {
    const auto &q = g.qubits;
    switch (g.kind) {
        case GateKind::H: throw Error("H is not a monomial gate");
        case GateKind::X:
        case GateKind::CX:
        case GateKind::CCX:
        case GateKind::MCX: {
            auto [mask, value] = control_pattern(g);
            if ((x & mask) == value) {
                return {x ^ bit(g.target()), 1.0};
            }
            return {x, 1.0};
        }
        case GateKind::CZ: return {x, ((x >> q[0]) & (x >> q[1]) & 1) ? Complex{-1.0} : Complex{1.0}};
        case GateKind::RZZ8: {
            bool odd = ((x >> q[0]) ^ (x >> q[1])) & 1;
            return {x, phase_eighth(odd ? -g.phase_step : g.phase_step)};
        }
        default: {
            auto d = single_diagonal(g);
            return {x, ((x >> q[0]) & 1) ? d.on_one : d.on_zero};
        }
    }
}

StateVector::StateVector(std::size_t num_qubits, BasisIndex basis) : num_qubits_(num_qubits) {
    if (num_qubits >= 40) {
        throw CapExceeded("dense state of " + std::to_string(num_qubits) + " qubits");
    }
    amps_.assign(std::size_t{1} << num_qubits, Complex{});
    amps_.at(basis) = 1.0;
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
    std::size_t n = 0;
    while ((std::size_t{1} << n) < amplitudes.size()) {
        ++n;
    }
    if ((std::size_t{1} << n) != amplitudes.size()) {
        throw Error("amplitude count must be a power of two");
    }
    StateVector s;
    s.num_qubits_ = n;
    s.amps_ = std::move(amplitudes);
    return s;
}

void StateVector::reset(BasisIndex basis) {
    std::fill(amps_.begin(), amps_.end(), Complex{});
    amps_.at(basis) = 1.0;
}

void StateVector::apply(const Gate &g) {
    const auto &q = g.qubits;
    const std::size_t dim = amps_.size();
    switch (g.kind) {
        case GateKind::H: {
            const BasisIndex b = bit(q[0]);
            for (BasisIndex x = 0; x < dim; ++x) {
                if (x & b) {
                    continue;
                }
                Complex a0 = amps_[x], a1 = amps_[x | b];
                amps_[x] = (a0 + a1) * M_SQRT1_2;
                amps_[x | b] = (a0 - a1) * M_SQRT1_2;
            }
            return;
        }
        case GateKind::X:
        case GateKind::CX:
        case GateKind::CCX:
        case GateKind::MCX: {
            auto [mask, value] = control_pattern(g);
            const BasisIndex t = bit(g.target());
            for (BasisIndex x = 0; x < dim; ++x) {
                if (!(x & t) && (x & mask) == value) {
                    std::swap(amps_[x], amps_[x | t]);
                }
            }
            return;
        }
        case GateKind::CZ: {
            const BasisIndex both = bit(q[0]) | bit(q[1]);
            for (BasisIndex x = 0; x < dim; ++x) {
                if ((x & both) == both) {
                    amps_[x] = -amps_[x];
                }
            }
            return;
        }
        case GateKind::RZZ8: {
            const Complex even = phase_eighth(g.phase_step), odd = phase_eighth(-g.phase_step);
            for (BasisIndex x = 0; x < dim; ++x) {
                amps_[x] *= (((x >> q[0]) ^ (x >> q[1])) & 1) ? odd : even;
            }
            return;
        }
        default: {
            const auto d = single_diagonal(g);
            const BasisIndex b = bit(q[0]);
            const bool touch_zero = d.on_zero != Complex{1.0};
            for (BasisIndex x = 0; x < dim; ++x) {
                if (x & b) {
                    amps_[x] *= d.on_one;
                } else if (touch_zero) {
                    amps_[x] *= d.on_zero;
                }
            }
            return;
        }
    }
}

void StateVector::apply(const Circuit &c) {
    if (c.num_qubits != num_qubits_) {
        throw ValidationError("dimension mismatch: state has " + std::to_string(num_qubits_) + " qubits, circuit " +
                              std::to_string(c.num_qubits));
    }
    for (const Gate &g : c.gates) {
        apply(g);
    }
}

double StateVector::norm_squared() const {
    double s = 0;
    for (const Complex &a : amps_) {
        s += std::norm(a);
    }
    return s;
}

double StateVector::probability(Qubit qubit, bool value) const {
    const BasisIndex b = bit(qubit);
    double p = 0;
    for (BasisIndex x = 0; x < amps_.size(); ++x) {
        if (((x & b) != 0) == value) {
            p += std::norm(amps_[x]);
        }
    }
    return p;
}

SparseState::SparseState(std::size_t num_qubits, BasisIndex basis) : num_qubits_(num_qubits) {
    if (num_qubits > 64) {
        throw CapExceeded("sparse states index at most 64 qubits");
    }
    entries_.push_back({basis, 1.0});
}

void SparseState::apply(const Gate &g) {
    if (g.kind != GateKind::H) {
        for (auto &[k, a] : entries_) {
            auto img = apply_monomial(g, k);
            k = img.image;
            a *= img.phase;
        }
        return;
    }
    const BasisIndex b = bit(g.qubits[0]);
    std::unordered_map<BasisIndex, Complex> merged;
    merged.reserve(entries_.size() * 2);
    for (const auto &[k, a] : entries_) {
        const Complex half = a * M_SQRT1_2;
        merged[k & ~b] += half;
        merged[k | b] += (k & b) ? -half : half;
    }
    entries_.clear();
    entries_.reserve(merged.size());
    for (const auto &[k, a] : merged) {
        if (a != Complex{}) {
            entries_.push_back({k, a});
        }
    }
}

void SparseState::apply(const Circuit &c) {
    if (c.num_qubits != num_qubits_) {
        throw ValidationError("dimension mismatch: state has " + std::to_string(num_qubits_) + " qubits, circuit " +
                              std::to_string(c.num_qubits));
    }
    for (const Gate &g : c.gates) {
        apply(g);
    }
}

std::vector<std::pair<BasisIndex, Complex>> SparseState::sorted() const {
    auto s = entries_;
    std::sort(s.begin(), s.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    return s;
}

}  // namespace dqc1
