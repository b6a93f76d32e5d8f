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

#include "commands.hpp"
#include "doctest.h"
#include "dqc1/gate.hpp"

using namespace dqc1;
using namespace dqc1::cli;

namespace {

std::string data(const std::string &name) {
    std::ifstream in(std::filesystem::path(DQC1_TEST_DATA_DIR) / name);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string without_clock(Json report) {
    report.erase("wall_clock_seconds");
    return report.dump();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("demo-lemma1 on a single Hadamard") {
    DemoOptions o;
    o.n = 1;
    o.trials = 1;
    o.circuit_text = "qubits 1\noutputs 0\nH 0\n";
    const auto r = cmd_demo_lemma1(o, {"dqc1sim", "demo-lemma1"});
    CHECK(r.pass);
    const Json &t = r.report["trials"][0];
    CHECK(t["predicted"].get<double>() == 0.5);
    CHECK(std::abs(t["simulated"].get<double>() - 0.5) < 1e-12);
    CHECK(r.report["verdict"] == "pass");
    CHECK(r.report.contains("wall_clock_seconds"));
    CHECK(r.report["input_digest"].get<std::string>().size() == 16);
}

TEST_CASE("demo-lemma1 sweep") {
    DemoOptions o;
    o.n = 3;
    o.trials = 100;
    o.seed = 5;
    const auto r = cmd_demo_lemma1(o, {});
    CHECK(r.pass);
    CHECK(r.report["trials"].size() == 100);
    CHECK(r.report["max_deviation"].get<double>() <= 1e-10);
    CHECK(r.report["sb_gap"]["pass"] == true);
    CHECK(r.report["sb_gap"]["checked"].get<std::size_t>() > 0);

    o.tolerance = 0;
    const auto strict = cmd_demo_lemma1(o, {});
    CHECK(strict.report["max_deviation"] == r.report["max_deviation"]);
    CHECK(strict.pass == (r.report["max_deviation"].get<double>() == 0.0));

    o.tolerance = 1e-10;
    o.decompose_toffoli = true;
    o.trials = 10;
    CHECK(cmd_demo_lemma1(o, {}).pass);

    o.n = 5;
    o.ensemble_cap = 3;
    CHECK_THROWS_AS(cmd_demo_lemma1(o, {}), CapExceeded);
}

TEST_CASE("reports are deterministic apart from the clock") {
    DemoOptions o;
    o.trials = 20;
    o.seed = 99;
    const std::vector<std::string> argv = {"dqc1sim", "--seed", "99", "demo-lemma1"};
    CHECK(without_clock(cmd_demo_lemma1(o, argv).report) == without_clock(cmd_demo_lemma1(o, argv).report));
    o.seed = 100;
    CHECK(without_clock(cmd_demo_lemma1(o, argv).report) != without_clock(cmd_demo_lemma1({}, argv).report));

    CompareOptions c;
    c.circuit_text = data("shallow.circ");
    CHECK(without_clock(cmd_compare(c, argv).report) == without_clock(cmd_compare(c, argv).report));
}

TEST_CASE("compare: shallow and IQP files") {
    CompareOptions c;
    c.circuit_text = data("depth1.circ");
    auto r = cmd_compare(c, {});
    CHECK(r.pass);
    CHECK(r.report["max_deviation"].get<double>() <= 1e-10);
    CHECK(r.report["light_cone_size"] == 2);

    c.circuit_text = data("iqp_path_l3.circ");
    c.method = "iqp";
    r = cmd_compare(c, {});
    CHECK(r.pass);
    CHECK(r.report["strong"]["probabilities"]["0000"].get<double>() == 0.0625);

    c.circuit_text = data("iqp_isolated.circ");
    c.outputs = std::vector<Qubit>{0, 2};
    r = cmd_compare(c, {});
    CHECK(r.pass);
    CHECK(r.report["strong"]["outputs"] == Json::array({0, 2}));

    c.method = "bogus";
    CHECK_THROWS_AS(cmd_compare(c, {}), ValidationError);
}

TEST_CASE("compare: deep circuit trips the cone cap") {
    CompareOptions c;
    c.circuit_text = data("deep.circ");
    CHECK_THROWS_WITH_AS(cmd_compare(c, {}), doctest::Contains("light cone exceeds cap"), CapExceeded);
}

TEST_CASE("simulate and gadget") {
    const auto sim = cmd_simulate(data("bell.circ"), false, 20, {});
    CHECK(sim.report["distribution"]["probabilities"]["11"].get<double>() == doctest::Approx(0.5));
    const auto mixed = cmd_simulate(data("bell.circ"), true, 20, {});
    CHECK(mixed.report["distribution"]["probabilities"]["01"].get<double>() == doctest::Approx(0.25));
    const auto vw = cmd_gadget(data("h.circ"), "vw", false, {});
    CHECK(vw.report["depth"].get<std::size_t>() <= vw.report["depth_bound"].get<std::size_t>());
    const auto dw = cmd_gadget("qubits 4\noutputs 3\nH 0\nCNOT 0 3\n", "dw", true, {});
    CHECK(dw.report["circuit"].get<std::string>().find("NCX") == std::string::npos);
}

TEST_CASE("digest") {
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}

}
