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

#include "dqc1/strong_sim.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace dqc1 {

namespace {

void check_bits(const Bits &z, std::size_t expected, const char *what) {
    if (z.size() != expected) {
        throw ValidationError(std::string(what) + " has " + std::to_string(z.size()) + " bits, expected " +
                              std::to_string(expected));
    }
    for (std::uint8_t b : z) {
        if (b > 1) {
            throw ValidationError(std::string(what) + " entries must be 0 or 1");
        }
    }
}

void check_subset(const std::vector<Qubit> &subset, std::size_t n) {
    std::set<Qubit> seen;
    for (Qubit q : subset) {
        if (q >= n) {
            throw ValidationError("subset: index out of range: qubit " + std::to_string(q));
        }
        if (!seen.insert(q).second) {
            throw ValidationError("subset: duplicate qubit " + std::to_string(q));
        }
    }
}

[[noreturn]] void cone_too_large(std::size_t size, std::size_t cap) {
    throw CapExceeded("light cone exceeds cap: " + std::to_string(size) + " qubits > " + std::to_string(cap));
}

// Pr[clean reads 0] for the induced inverse circuit on the given local input.
double clean_reads_zero(const InducedCircuit &cone, Qubit clean_local, BasisIndex input, StateVector &scratch) {
    scratch.reset(input);
    scratch.apply(cone.circuit);
    return scratch.probability(clean_local, false);
}

// Both exact routes for a marginal on `subset`, with their cones.
struct MarginalPlan {
    const Dqc1Spec &spec;
    std::vector<Qubit> subset;
    InducedCircuit forward;  // backward cone of the subset in Q
    InducedCircuit reverse;  // backward cone of the clean wire in Q^dag
    bool clean_in_forward = false;
    std::vector<Qubit> free_in_reverse;  // reverse-cone wires outside the subset
    bool use_forward = false;

    MarginalPlan(const Dqc1Spec &s, std::vector<Qubit> sub, const ConeOptions &options)
        : spec(s),
          subset(std::move(sub)),
          forward(induced_subcircuit(s.circuit, subset)),
          reverse(induced_subcircuit(invert(s.circuit), {s.clean})) {
        clean_in_forward = std::binary_search(forward.map.begin(), forward.map.end(), spec.clean);
        for (Qubit q : reverse.map) {
            if (std::find(subset.begin(), subset.end(), q) == subset.end()) {
                free_in_reverse.push_back(q);
            }
        }
        if (!clean_in_forward) {
            use_forward = true;
            return;
        }
        const std::size_t cap = options.cone_cap;
        const bool forward_ok = forward.map.size() <= cap;
        const bool reverse_ok = reverse.map.size() <= cap;
        if (!forward_ok && !reverse_ok) {
            cone_too_large(std::min(forward.map.size(), reverse.map.size()), cap);
        }
        const std::size_t forward_cost = 2 * forward.map.size() - 1;
        const std::size_t reverse_cost = free_in_reverse.size() + reverse.map.size();
        use_forward = forward_ok && (!reverse_ok || forward_cost <= reverse_cost);
    }

    // Distribution over `subset` from one ensemble pass inside the forward cone.
    OutcomeDistribution forward_distribution() const {
        OutcomeDistribution dist(subset);
        const std::size_t m = subset.size();
        if (!clean_in_forward) {
            // A unitary maps the maximally mixed cone input to itself.
            std::fill(dist.probs.begin(), dist.probs.end(), std::ldexp(1.0, -static_cast<int>(m)));
            return dist;
        }
        const Qubit clean_local = forward.local(spec.clean);
        std::vector<Qubit> mixed;
        for (Qubit i = 0; i < forward.map.size(); ++i) {
            if (i != clean_local) {
                mixed.push_back(i);
            }
        }
        const double weight = std::ldexp(1.0, -static_cast<int>(mixed.size()));
        const auto &locals = forward.circuit.outputs;
        StateVector scratch(forward.circuit.num_qubits);
        for (BasisIndex s = 0; s < (BasisIndex{1} << mixed.size()); ++s) {
            BasisIndex input = 0;
            for (std::size_t j = 0; j < mixed.size(); ++j) {
                input |= ((s >> j) & 1) << mixed[j];
            }
            scratch.reset(input);
            scratch.apply(forward.circuit);
            const auto &amps = scratch.amplitudes();
            for (BasisIndex x = 0; x < amps.size(); ++x) {
                const double p = std::norm(amps[x]);
                if (p == 0.0) {
                    continue;
                }
                std::size_t idx = 0;
                for (std::size_t j = 0; j < m; ++j) {
                    idx |= static_cast<std::size_t>((x >> locals[j]) & 1) << j;
                }
                dist.probs[idx] += weight * p;
            }
        }
        return dist;
    }

    double reverse_point(const Bits &z_subset) const {
        const Qubit clean_local = reverse.local(spec.clean);
        BasisIndex fixed = 0;
        for (std::size_t j = 0; j < subset.size(); ++j) {
            if (z_subset[j] && std::binary_search(reverse.map.begin(), reverse.map.end(), subset[j])) {
                fixed |= BasisIndex{1} << reverse.local(subset[j]);
            }
        }
        std::vector<Qubit> free_local;
        for (Qubit q : free_in_reverse) {
            free_local.push_back(reverse.local(q));
        }
        StateVector scratch(reverse.circuit.num_qubits);
        double sum = 0;
        for (BasisIndex y = 0; y < (BasisIndex{1} << free_local.size()); ++y) {
            BasisIndex input = fixed;
            for (std::size_t j = 0; j < free_local.size(); ++j) {
                input |= ((y >> j) & 1) << free_local[j];
            }
            sum += clean_reads_zero(reverse, clean_local, input, scratch);
        }
        const int n = static_cast<int>(spec.circuit.num_qubits);
        const int exponent = (n - static_cast<int>(subset.size())) - static_cast<int>(free_local.size()) - (n - 1);
        return std::ldexp(sum, exponent);
    }
};

}  // namespace

double strongsim_constdepth_point(const Dqc1Spec &spec, const Bits &z, const ConeOptions &options) {
    validate(spec);
    const std::size_t n = spec.circuit.num_qubits;
    check_bits(z, n, "outcome");
    const InducedCircuit cone = induced_subcircuit(invert(spec.circuit), {spec.clean});
    if (cone.map.size() > options.cone_cap) {
        cone_too_large(cone.map.size(), options.cone_cap);
    }
    BasisIndex input = 0;
    for (Qubit i = 0; i < cone.map.size(); ++i) {
        input |= BasisIndex{z[cone.map[i]]} << i;
    }
    StateVector scratch(cone.circuit.num_qubits);
    const double p = clean_reads_zero(cone, cone.local(spec.clean), input, scratch);
    return std::ldexp(p, -static_cast<int>(n - 1));
}

double strongsim_constdepth_marginal(const Dqc1Spec &spec, const std::vector<Qubit> &subset, const Bits &z_subset,
                                     const ConeOptions &options) {
    validate(spec);
    check_subset(subset, spec.circuit.num_qubits);
    check_bits(z_subset, subset.size(), "marginal outcome");
    if (subset.empty()) {
        return 1.0;
    }
    const MarginalPlan plan(spec, subset, options);
    if (plan.use_forward) {
        std::size_t idx = 0;
        for (std::size_t j = 0; j < z_subset.size(); ++j) {
            idx |= std::size_t{z_subset[j]} << j;
        }
        return plan.forward_distribution().probs[idx];
    }
    return plan.reverse_point(z_subset);
}

OutcomeDistribution strongsim_constdepth_distribution(const Dqc1Spec &spec, const ConeOptions &options) {
    validate(spec);
    const MarginalPlan plan(spec, spec.outputs, options);
    if (plan.use_forward) {
        return plan.forward_distribution();
    }
    OutcomeDistribution dist(spec.outputs);
    Bits z(spec.outputs.size());
    for (std::size_t i = 0; i < dist.probs.size(); ++i) {
        for (std::size_t j = 0; j < z.size(); ++j) {
            z[j] = (i >> j) & 1;
        }
        dist.probs[i] = plan.reverse_point(z);
    }
    return dist;
}

double iqp_clean_probability(const IqpSpec &raw, bool z1) {
    validate(raw);
    const IqpSpec spec = normalized(raw);
    // Per neighbour of vertex 0: CZ parity and summed ZZ multiplier.
    std::map<Qubit, std::pair<int, int>> neighbours;
    for (const auto &[a, b] : spec.edges) {
        if (a == 0) {
            neighbours[b].first ^= 1;
        }
    }
    for (const auto &c : spec.zz) {
        if (c.a == 0) {
            neighbours[c.b].second += c.k;
        }
    }
    Complex product = phase_eighth(-2 * spec.theta[0]);
    for (const auto &[vertex, coupling] : neighbours) {
        const auto [cz_parity, zz_steps] = coupling;
        const Complex twice = phase_eighth(2 * zz_steps);  // e^{2 i phi_j}
        product *= cz_parity ? Complex{0.0, -twice.imag()} : Complex{twice.real(), 0.0};
    }
    const double bias = 0.5 * product.real();
    return z1 ? 0.5 - bias : 0.5 + bias;
}

double strongsim_iqp(const IqpSpec &spec, const Bits &z) {
    validate(spec);
    const auto outputs = spec.output_qubits();
    check_bits(z, outputs.size(), "outcome");
    const auto clean_pos = std::find(outputs.begin(), outputs.end(), Qubit{0});
    const int m = static_cast<int>(outputs.size());
    if (clean_pos == outputs.end()) {
        return std::ldexp(1.0, -m);
    }
    const bool z1 = z[static_cast<std::size_t>(clean_pos - outputs.begin())] != 0;
    return std::ldexp(iqp_clean_probability(spec, z1), -(m - 1));
}

OutcomeDistribution strongsim_iqp_distribution(const IqpSpec &spec) {
    validate(spec);
    OutcomeDistribution dist(spec.output_qubits());
    Bits z(dist.arity());
    for (std::size_t i = 0; i < dist.probs.size(); ++i) {
        for (std::size_t j = 0; j < z.size(); ++j) {
            z[j] = (i >> j) & 1;
        }
        dist.probs[i] = strongsim_iqp(spec, z);
    }
    return dist;
}

}  // namespace dqc1
