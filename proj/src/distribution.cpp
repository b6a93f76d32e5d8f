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

#include "dqc1/distribution.hpp"

#include <algorithm>
#include <cmath>

namespace dqc1 {

OutcomeDistribution::OutcomeDistribution(std::vector<Qubit> outputs) : output_qubits(std::move(outputs)) {
    if (output_qubits.size() >= 40) {
        throw CapExceeded("outcome distributions over more than 39 outputs are not materialized");
    }
    probs.assign(std::size_t{1} << output_qubits.size(), 0.0);
}

double OutcomeDistribution::total() const {
    double s = 0;
    for (double p : probs) {
        s += p;
    }
    return s;
}

std::string OutcomeDistribution::outcome_string(std::size_t index, std::size_t arity) {
    std::string s(arity, '0');
    for (std::size_t j = 0; j < arity; ++j) {
        if ((index >> j) & 1) {
            s[j] = '1';
        }
    }
    return s;
}

std::size_t OutcomeDistribution::outcome_index(std::string_view bits) {
    std::size_t index = 0;
    for (std::size_t j = 0; j < bits.size(); ++j) {
        if (bits[j] == '1') {
            index |= std::size_t{1} << j;
        } else if (bits[j] != '0') {
            throw Error("outcome strings may only contain 0 and 1");
        }
    }
    return index;
}

double OutcomeDistribution::at(std::string_view bits) const {
    if (bits.size() != arity()) {
        throw Error("outcome string has " + std::to_string(bits.size()) + " bits, expected " +
                    std::to_string(arity()));
    }
    return probs[outcome_index(bits)];
}

OutcomeDistribution OutcomeDistribution::marginal(const std::vector<std::size_t> &positions) const {
    std::vector<Qubit> qs;
    for (std::size_t p : positions) {
        qs.push_back(output_qubits.at(p));
    }
    OutcomeDistribution m(qs);
    for (std::size_t i = 0; i < probs.size(); ++i) {
        std::size_t j = 0;
        for (std::size_t k = 0; k < positions.size(); ++k) {
            j |= ((i >> positions[k]) & 1) << k;
        }
        m.probs[j] += probs[i];
    }
    return m;
}

namespace {

void require_same_arity(const OutcomeDistribution &p, const OutcomeDistribution &q) {
    if (p.arity() != q.arity() || p.probs.size() != q.probs.size()) {
        throw Error("arity mismatch: " + std::to_string(p.arity()) + " vs " + std::to_string(q.arity()));
    }
}

}  // namespace

bool check_multiplicative(const OutcomeDistribution &p, const OutcomeDistribution &q, double c) {
    require_same_arity(p, q);
    if (!(c >= 1.0)) {
        throw Error("multiplicative error constant must be >= 1");
    }
    for (std::size_t i = 0; i < p.probs.size(); ++i) {
        const double a = p.probs[i], b = q.probs[i];
        if ((a == 0.0) != (b == 0.0)) {
            return false;
        }
        if (a / c > b || b > c * a) {
            return false;
        }
    }
    return true;
}

bool check_additive(const OutcomeDistribution &p, const OutcomeDistribution &q, double eps) {
    require_same_arity(p, q);
    if (!(eps >= 0.0)) {
        throw Error("additive error must be >= 0");
    }
    return max_deviation(p, q) <= eps;
}

double max_deviation(const OutcomeDistribution &p, const OutcomeDistribution &q) {
    require_same_arity(p, q);
    double worst = 0;
    for (std::size_t i = 0; i < p.probs.size(); ++i) {
        worst = std::max(worst, std::abs(p.probs[i] - q.probs[i]));
    }
    return worst;
}

}  // namespace dqc1
