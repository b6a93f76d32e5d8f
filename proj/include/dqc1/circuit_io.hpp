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

#ifndef DQC1_CIRCUIT_IO_HPP
#define DQC1_CIRCUIT_IO_HPP

#include <string>
#include <string_view>

#include "dqc1/circuit.hpp"

namespace dqc1 {

/// Syntax error at a 1-based line and column.
class ParseError : public Error {
  public:
    ParseError(std::size_t line, std::size_t column, const std::string &what);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

// Line format, whitespace separated, '#' starts a comment:
//
//   qubits <n>
//   clean <i>            (optional; wire 0 when absent)
//   outputs <i> ...      (optional; wire 0 when absent)
//   H|X|Z|S|SDG|T|TDG q
//   P8 k q | RZ8 k q | RZZ8 k a b
//   CNOT c t | CZ a b | CCX c1 c2 t
//   NCX <polarity bits> <controls...> <target>
//
// `qubits` must come before anything else. The parsed circuit is validated;
// ValidationError propagates unchanged.
Circuit parse_circuit(std::string_view text);

/// Canonical text form; parse_circuit(print_circuit(c)) == c for valid c.
std::string print_circuit(const Circuit &c);

}  // namespace dqc1

#endif
