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

// dqc1sim: command-line front end. Reports are JSON on stdout, diagnostics
// on stderr. Exit status 0 = pass, 1 = verdict fail, 2 = usage, parse or
// capacity error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "dqc1/circuit_io.hpp"

namespace {

std::string read_input(const std::string &path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) {
        throw dqc1::Error("cannot open circuit file '" + path + "'");
    }
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main(int argc, char **argv) {
    const std::vector<std::string> echo(argv, argv + argc);
    CLI::App app{"Exact simulators and gadgets for one-clean-qubit circuits"};
    app.require_subcommand(1);

    std::uint64_t seed = 1;
    double tolerance = 1e-10;
    std::size_t cone_cap = 20;
    std::size_t ensemble_cap = 20;
    bool decompose = false;
    app.add_option("--seed", seed, "Random seed")->capture_default_str();
    app.add_option("--tolerance", tolerance, "Pass/fail tolerance")->capture_default_str();
    app.add_option("--cone-cap", cone_cap, "Largest light cone the shallow simulator accepts")->capture_default_str();
    app.add_option("--ensemble-cap", ensemble_cap, "Most mixed qubits the brute-force oracle averages over")
        ->capture_default_str();
    app.add_flag("--decompose-toffoli", decompose, "Lower generalized Toffolis to Clifford+T in gadgets");

    dqc1::cli::DemoOptions demo;
    std::string demo_circuit;
    auto *demo_cmd = app.add_subcommand("demo-lemma1", "Compare D_w acceptance against the predicted law");
    demo_cmd->add_option("-n,--qubits", demo.n, "Qubits per random circuit")->capture_default_str();
    demo_cmd->add_option("--trials", demo.trials, "Number of random circuits")->capture_default_str();
    demo_cmd->add_option("--max-gates", demo.max_gates, "Gate budget per circuit")->capture_default_str();
    demo_cmd->add_option("--circuit", demo_circuit, "Use this circuit file instead of random circuits");

    dqc1::cli::CompareOptions compare;
    std::string compare_file;
    std::vector<dqc1::Qubit> compare_outputs;
    auto *compare_cmd = app.add_subcommand("compare", "Strong simulator versus the brute-force oracle");
    compare_cmd->add_option("file", compare_file, "Circuit file ('-' for stdin)")->required();
    compare_cmd->add_option("--method", compare.method, "constdepth or iqp")
        ->check(CLI::IsMember({"constdepth", "iqp"}))
        ->capture_default_str();
    compare_cmd->add_option("--outputs", compare_outputs, "Measure these wires instead (marginal)");

    std::string sim_file;
    bool sim_dqc1 = false;
    auto *sim_cmd = app.add_subcommand("simulate", "Exact output distribution of a circuit file");
    sim_cmd->add_option("file", sim_file, "Circuit file ('-' for stdin)")->required();
    sim_cmd->add_flag("--dqc1", sim_dqc1, "One clean qubit, all other wires maximally mixed");

    std::string gadget_file;
    std::string gadget_kind;
    auto *gadget_cmd = app.add_subcommand("gadget", "Build a gadget circuit from a circuit file");
    gadget_cmd->add_option("kind", gadget_kind, "dw or vw")->required()->check(CLI::IsMember({"dw", "vw"}));
    gadget_cmd->add_option("file", gadget_file, "Circuit file ('-' for stdin)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        dqc1::cli::CommandResult result;
        if (*demo_cmd) {
            demo.seed = seed;
            demo.tolerance = tolerance;
            demo.ensemble_cap = ensemble_cap;
            demo.decompose_toffoli = decompose;
            if (!demo_circuit.empty()) {
                demo.circuit_text = read_input(demo_circuit);
            }
            result = dqc1::cli::cmd_demo_lemma1(demo, echo);
        } else if (*compare_cmd) {
            compare.circuit_text = read_input(compare_file);
            compare.tolerance = tolerance;
            compare.cone_cap = cone_cap;
            compare.ensemble_cap = ensemble_cap;
            if (!compare_outputs.empty()) {
                compare.outputs = compare_outputs;
            }
            result = dqc1::cli::cmd_compare(compare, echo);
        } else if (*sim_cmd) {
            result = dqc1::cli::cmd_simulate(read_input(sim_file), sim_dqc1, ensemble_cap, echo);
        } else {
            result = dqc1::cli::cmd_gadget(read_input(gadget_file), gadget_kind, decompose, echo);
        }
        std::cout << result.report.dump(2) << '\n';
        return result.pass ? 0 : 1;
    } catch (const dqc1::Error &e) {
        std::cerr << "dqc1sim: error: " << e.what() << '\n';
        dqc1::cli::Json report = {{"command", echo}, {"error", e.what()}, {"verdict", "error"}};
        std::cout << report.dump(2) << '\n';
        return 2;
    }
}
