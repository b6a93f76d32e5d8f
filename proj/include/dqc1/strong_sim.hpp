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

#ifndef DQC1_STRONG_SIM_HPP
#define DQC1_STRONG_SIM_HPP

#include <cstdint>
#include <vector>

#include "dqc1/distribution.hpp"
#include "dqc1/exact_sim.hpp"
#include "dqc1/iqp.hpp"

namespace dqc1 {

using Bits = std::vector<std::uint8_t>;

struct ConeOptions {
    std::size_t cone_cap = 20;
};

// ---------------------------------------------------------------------------
// Shallow circuits on the one-clean-qubit input.
//
// For a full outcome z over all l + 1 wires,
//
//   P(z) = 2^-l * Pr[clean wire reads 0 after Q^dag |z>],
//
// and the right-hand side only involves the light cone of the clean wire in
// Q^dag. Only that subcircuit is ever simulated, so the cost is 2^|cone|
// however wide the circuit is. A cone above `cone_cap` raises CapExceeded.
// ---------------------------------------------------------------------------

/// `z[j]` is the reading of wire j; z has num_qubits entries.
double strongsim_constdepth_point(const Dqc1Spec &spec, const Bits &z, const ConeOptions &options = {});

/// Probability that wires `subset` read `z_subset` (same order). Two exact
/// routes are available: averaging over the mixed inputs inside the backward
/// cone of the subset, or summing the point formula over the free wires in
/// the clean wire's cone. The cheaper feasible one is used.
double strongsim_constdepth_marginal(const Dqc1Spec &spec, const std::vector<Qubit> &subset, const Bits &z_subset,
                                     const ConeOptions &options = {});

/// Joint distribution over spec.outputs. The forward route fills every outcome
/// in one ensemble pass; the reverse route evaluates outcomes one at a time.
OutcomeDistribution strongsim_constdepth_distribution(const Dqc1Spec &spec, const ConeOptions &options = {});

// ---------------------------------------------------------------------------
// Commuting (IQP) circuits on the one-clean-qubit input.
// ---------------------------------------------------------------------------

/// Probability that the clean wire reads `z1`. With no ZZ couplings this is
/// cos^2 / sin^2 of theta_0 when vertex 0 is isolated and exactly 1/2
/// otherwise. ZZ couplings on vertex 0 are handled by the closed form
///
///   p(z1) = 1/2 + (-1)^z1 / 2 * Re[ e^{-2 i theta_0} prod_j f_j ],
///
/// f_j = cos(2 phi_j) without a CZ edge to j and -i sin(2 phi_j) with one,
/// phi_j the total ZZ angle between vertex 0 and j. O(l) time.
double iqp_clean_probability(const IqpSpec &spec, bool z1);

/// `z` lists one bit per designated output, in output order. Mixed-register
/// outputs each contribute a factor 1/2.
double strongsim_iqp(const IqpSpec &spec, const Bits &z);

OutcomeDistribution strongsim_iqp_distribution(const IqpSpec &spec);

}  // namespace dqc1

#endif
