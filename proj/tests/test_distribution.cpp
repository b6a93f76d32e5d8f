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

#include "comparator_table.hpp"
#include "doctest.h"
#include "dqc1/distribution.hpp"

using namespace dqc1;

TEST_SUITE("distribution") {

TEST_CASE("outcome strings are little-endian in output order") {
    CHECK(OutcomeDistribution::outcome_string(1, 3) == "100");
    CHECK(OutcomeDistribution::outcome_string(6, 3) == "011");
    CHECK(OutcomeDistribution::outcome_index("011") == 6);
    CHECK_THROWS_AS(OutcomeDistribution::outcome_index("0x1"), Error);
    OutcomeDistribution d({4, 2});
    d.probs = {0.1, 0.2, 0.3, 0.4};
    CHECK(d.at("10") == 0.2);
    CHECK_THROWS_AS(d.at("1"), Error);
    CHECK(d.total() == doctest::Approx(1.0));
    const auto m = d.marginal({1});
    CHECK(m.output_qubits == std::vector<Qubit>{2});
    CHECK(m.probs[0] == doctest::Approx(0.3));
    CHECK(m.probs[1] == doctest::Approx(0.7));
}

TEST_CASE("comparator table") {
    for (const auto &row : testing::comparator_table()) {
        CAPTURE(row.name);
        CHECK(testing::run_row(row) == row.expected);
    }
}

TEST_CASE("comparator errors") {
    const auto one = testing::dist({0.5, 0.5});
    const auto two = testing::dist({0.25, 0.25, 0.25, 0.25});
    CHECK_THROWS_WITH_AS(check_additive(one, two, 0.1), doctest::Contains("arity mismatch"), Error);
    CHECK_THROWS_AS(check_multiplicative(one, two, 2), Error);
    CHECK_THROWS_AS(max_deviation(one, two), Error);
    CHECK_THROWS_AS(check_multiplicative(one, one, 0.5), Error);
    CHECK_THROWS_AS(check_additive(one, one, -1e-3), Error);
}

TEST_CASE("reflexivity") {
    const auto d = testing::dist({0.0, 0.125, 0.375, 0.5});
    for (double c : {1.0, 1.5, 10.0}) {
        CHECK(check_multiplicative(d, d, c));
    }
    CHECK(check_additive(d, d, 0.0));
    CHECK(max_deviation(d, d) == 0.0);
}

}
