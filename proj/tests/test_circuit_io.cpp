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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "dqc1/circuit_io.hpp"
#include "helpers.hpp"

using namespace dqc1;

namespace {

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_SUITE("circuit-io") {

TEST_CASE("grammar examples") {
    const Circuit h = parse_circuit("qubits 1\noutputs 0\nH 0");
    CHECK(h.num_qubits == 1);
    REQUIRE(h.gates.size() == 1);
    CHECK(h.gates[0] == Gate::h(0));
    CHECK_FALSE(h.clean_qubit.has_value());

    const Circuit cx = parse_circuit("qubits 2\noutputs 0\nCNOT 1 0");
    CHECK(cx.gates[0] == Gate::cx(1, 0));
    CHECK(cx.gates[0].controls()[0] == 1);
    CHECK(cx.gates[0].target() == 0);

    const Circuit rz = parse_circuit("qubits 1\noutputs 0\nRZ8 2 0");
    CHECK(rz.gates[0] == Gate::rz8(2, 0));

    const Circuit ncx = parse_circuit("qubits 4 # header\nclean 3\noutputs 2 0\n\nNCX 10 0 1 2\n");
    const std::vector<Qubit> controls = {0, 1};
    const std::vector<std::uint8_t> polarity = {1, 0};
    CHECK(ncx.gates[0] == Gate::mcx(controls, polarity, 2));
    CHECK(ncx.clean() == 3);
    CHECK(ncx.outputs == std::vector<Qubit>{2, 0});
    CHECK(parse_circuit("qubits 3\n").outputs == std::vector<Qubit>{0});
}

TEST_CASE("parse errors carry line and column") {
    const auto expect = [](std::string_view text, std::size_t line, std::size_t column) {
        CAPTURE(text);
        try {
            parse_circuit(text);
            FAIL("no error");
        } catch (const ParseError &e) {
            CHECK(e.line() == line);
            CHECK(e.column() == column);
        }
    };
    expect("H 0\n", 1, 1);
    expect("qubits 2\noutputs 0\nFOO 1\n", 3, 1);
    expect("qubits 2\noutputs 0\n  CNOT 1 x\n", 3, 10);
    expect("qubits 2\noutputs 0\nH 0 1\n", 3, 5);
    expect("qubits 2\noutputs 0\nCNOT 1\n", 3, 7);
    expect("qubits 2\nqubits 3\n", 2, 1);
    expect("qubits 0\n", 1, 1);
    expect("qubits 3\nNCX 1a 0 1\n", 2, 6);
    expect("qubits 2\nH -1\n", 2, 3);
    expect("", 1, 1);
}

TEST_CASE("validation errors propagate") {
    CHECK_THROWS_AS(parse_circuit("qubits 2\nCNOT 0 0\n"), ValidationError);
    CHECK_THROWS_AS(parse_circuit("qubits 2\nH 2\n"), ValidationError);
    CHECK_THROWS_AS(parse_circuit("qubits 2\noutputs 0 0\n"), ValidationError);
    CHECK_THROWS_AS(parse_circuit("qubits 2\nclean 2\n"), ValidationError);
}

TEST_CASE("printing is canonical") {
    const Circuit c = parse_circuit("qubits 3\nclean 1\noutputs 2\nRZ8 -1 0\nNCX 01 0 1 2\n");
    CHECK(print_circuit(c) == "qubits 3\nclean 1\noutputs 2\nRZ8 15 0\nNCX 01 0 1 2\n");
    const Circuit d = parse_circuit("qubits 1\nT 0");
    CHECK(print_circuit(d) == "qubits 1\noutputs 0\nT 0\n");
}

TEST_CASE("round trip over the corpus") {
    std::size_t files = 0;
    for (const auto &entry : std::filesystem::directory_iterator(DQC1_TEST_DATA_DIR)) {
        if (entry.path().extension() != ".circ") {
            continue;
        }
        CAPTURE(entry.path().string());
        const Circuit c = parse_circuit(slurp(entry.path()));
        const std::string printed = print_circuit(c);
        CHECK(parse_circuit(printed) == c);
        CHECK(print_circuit(parse_circuit(printed)) == printed);
        ++files;
    }
    CHECK(files >= 5);
}

TEST_CASE("round trip over random circuits") {
    Rng rng(71);
    for (int trial = 0; trial < 50; ++trial) {
        Circuit c = testing::random_rich_circuit(1 + trial % 5, 20, rng);
        if (trial % 2) {
            c.clean_qubit = static_cast<Qubit>(trial % c.num_qubits);
        }
        CHECK(parse_circuit(print_circuit(c)) == c);
    }
}

}
