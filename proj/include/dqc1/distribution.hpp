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

#ifndef DQC1_DISTRIBUTION_HPP
#define DQC1_DISTRIBUTION_HPP

#include <string>
#include <string_view>
#include <vector>

#include "dqc1/gate.hpp"

namespace dqc1 {

/// Exact probabilities over the 2^m outcomes of m designated qubits.
///
/// `probs[i]` is the probability of the outcome whose j-th bit (bit j of i) is
/// the reading of `output_qubits[j]`. The string form writes the same bits
/// left to right in output order, so "10" means output_qubits[0] read 1.
struct OutcomeDistribution {
    std::vector<Qubit> output_qubits;
    std::vector<double> probs;

    OutcomeDistribution() = default;
    explicit OutcomeDistribution(std::vector<Qubit> outputs);

    std::size_t arity() const { return output_qubits.size(); }
    double total() const;

    double at(std::string_view bits) const;
    static std::string outcome_string(std::size_t index, std::size_t arity);
    static std::size_t outcome_index(std::string_view bits);

    /// Marginal over the listed positions (indices into output_qubits).
    OutcomeDistribution marginal(const std::vector<std::size_t> &positions) const;
};

/// P/c <= P' <= c P for every outcome; an exact zero on either side demands
/// an exact zero on the other. Throws Error on arity mismatch or c < 1.
bool check_multiplicative(const OutcomeDistribution &p, const OutcomeDistribution &q, double c);

/// max_x |P(x) - P'(x)| <= eps. Throws Error on arity mismatch or eps < 0.
bool check_additive(const OutcomeDistribution &p, const OutcomeDistribution &q, double eps);

/// max_x |P(x) - P'(x)|.
double max_deviation(const OutcomeDistribution &p, const OutcomeDistribution &q);

}  // namespace dqc1

#endif
