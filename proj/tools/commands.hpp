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

#ifndef DQC1_TOOLS_COMMANDS_HPP
#define DQC1_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dqc1/circuit.hpp"
#include "json.hpp"

namespace dqc1::cli {

using Json = nlohmann::json;

struct CommandResult {
    Json report;
    bool pass = false;
};

struct DemoOptions {
    std::size_t n = 3;
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    double tolerance = 1e-10;
    std::size_t max_gates = 40;
    std::size_t ensemble_cap = 20;
    bool decompose_toffoli = false;
    std::optional<std::string> circuit_text;  // replaces the random ensemble
};

struct CompareOptions {
    std::string circuit_text;
    std::string method = "constdepth";  // or "iqp"
    std::optional<std::vector<Qubit>> outputs;
    double tolerance = 1e-10;
    std::size_t cone_cap = 20;
    std::size_t ensemble_cap = 20;
};

/// Every report carries `command` (the echoed argument vector), `verdict`
/// and `wall_clock_seconds`; everything except the last is a pure function
/// of the arguments.
CommandResult cmd_demo_lemma1(const DemoOptions &options, const std::vector<std::string> &argv);
CommandResult cmd_compare(const CompareOptions &options, const std::vector<std::string> &argv);

/// Exact pure-state or one-clean-qubit distribution of a circuit file.
CommandResult cmd_simulate(const std::string &circuit_text, bool dqc1, std::size_t ensemble_cap,
                           const std::vector<std::string> &argv);

/// Emits the D_w ("dw") or V_w ("vw") gadget built from a circuit file.
CommandResult cmd_gadget(const std::string &circuit_text, const std::string &which, bool decompose_toffoli,
                         const std::vector<std::string> &argv);

/// 64-bit FNV-1a, printed as 16 hex digits.
std::string fnv1a_hex(const std::string &data);

}  // namespace dqc1::cli

#endif
