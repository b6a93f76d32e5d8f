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

#include "dqc1/circuit_io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace dqc1 {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string &what)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

struct Token {
    std::string_view text;
    std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
    }
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        if (i > start) {
            tokens.push_back({line.substr(start, i - start), start + 1});
        }
    }
    return tokens;
}

class LineParser {
  public:
    LineParser(std::size_t line, std::vector<Token> tokens) : line_(line), tokens_(std::move(tokens)) {}

    [[noreturn]] void fail(std::size_t column, const std::string &what) const { throw ParseError(line_, column, what); }

    std::size_t remaining() const { return tokens_.size() - next_; }

    const Token &head() const { return tokens_[0]; }

    template <typename T>
    T number(const char *what) {
        if (next_ >= tokens_.size()) {
            const Token &last = tokens_.back();
            fail(last.column + last.text.size(), std::string("expected ") + what);
        }
        const Token &tok = tokens_[next_++];
        T value{};
        const auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
        if (ec != std::errc() || ptr != tok.text.data() + tok.text.size()) {
            fail(tok.column, std::string("expected ") + what + ", got '" + std::string(tok.text) + "'");
        }
        return value;
    }

    Qubit qubit() { return number<Qubit>("qubit index"); }

    std::vector<std::uint8_t> bits() {
        if (next_ >= tokens_.size()) {
            fail(tokens_.back().column, "expected polarity bits");
        }
        const Token &tok = tokens_[next_++];
        std::vector<std::uint8_t> out;
        for (std::size_t i = 0; i < tok.text.size(); ++i) {
            const char ch = tok.text[i];
            if (ch != '0' && ch != '1') {
                fail(tok.column + i, "polarity bits must be 0 or 1");
            }
            out.push_back(static_cast<std::uint8_t>(ch - '0'));
        }
        return out;
    }

    void finish() const {
        if (next_ < tokens_.size()) {
            fail(tokens_[next_].column, "unexpected token '" + std::string(tokens_[next_].text) + "'");
        }
    }

    void skip_keyword() { next_ = 1; }

  private:
    std::size_t line_;
    std::vector<Token> tokens_;
    std::size_t next_ = 0;
};

const std::unordered_map<std::string_view, GateKind> &gate_keywords() {
    static const std::unordered_map<std::string_view, GateKind> table = {
        {"H", GateKind::H},       {"X", GateKind::X},     {"Z", GateKind::Z},     {"S", GateKind::S},
        {"SDG", GateKind::Sdg},   {"T", GateKind::T},     {"TDG", GateKind::Tdg}, {"P8", GateKind::P8},
        {"RZ8", GateKind::RZ8},   {"CNOT", GateKind::CX}, {"CZ", GateKind::CZ},   {"CCX", GateKind::CCX},
        {"NCX", GateKind::MCX},   {"RZZ8", GateKind::RZZ8},
    };
    return table;
}

Gate parse_gate(GateKind kind, LineParser &p) {
    switch (kind) {
        case GateKind::P8:
        case GateKind::RZ8: {
            const int k = p.number<int>("phase multiplier");
            const Qubit q = p.qubit();
            return kind == GateKind::P8 ? Gate::p8(k, q) : Gate::rz8(k, q);
        }
        case GateKind::RZZ8: {
            const int k = p.number<int>("phase multiplier");
            const Qubit a = p.qubit();
            return Gate::rzz8(k, a, p.qubit());
        }
        case GateKind::CX: {
            const Qubit c = p.qubit();
            return Gate::cx(c, p.qubit());
        }
        case GateKind::CZ: {
            const Qubit a = p.qubit();
            return Gate::cz(a, p.qubit());
        }
        case GateKind::CCX: {
            const Qubit a = p.qubit();
            const Qubit b = p.qubit();
            return Gate::ccx(a, b, p.qubit());
        }
        case GateKind::MCX: {
            const auto polarity = p.bits();
            std::vector<Qubit> controls;
            for (std::size_t i = 0; i < polarity.size(); ++i) {
                controls.push_back(p.qubit());
            }
            return Gate::mcx(controls, polarity, p.qubit());
        }
        default: return Gate{kind, {p.qubit()}, {}, 0};
    }
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
    Circuit c;
    c.gates.clear();
    bool have_qubits = false;
    bool have_clean = false;
    bool have_outputs = false;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto eol = text.find('\n');
        const std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        auto tokens = tokenize(line);
        if (tokens.empty()) {
            continue;
        }
        LineParser p(line_no, std::move(tokens));
        const Token head = p.head();
        p.skip_keyword();
        if (!have_qubits && head.text != "qubits") {
            p.fail(head.column, "expected 'qubits <n>' before '" + std::string(head.text) + "'");
        }
        if (head.text == "qubits") {
            if (have_qubits) {
                p.fail(head.column, "duplicate 'qubits' line");
            }
            const auto n = p.number<std::size_t>("qubit count");
            if (n == 0) {
                p.fail(head.column, "qubit count must be positive");
            }
            c.num_qubits = n;
            have_qubits = true;
        } else if (head.text == "clean") {
            if (have_clean) {
                p.fail(head.column, "duplicate 'clean' line");
            }
            c.clean_qubit = p.qubit();
            have_clean = true;
        } else if (head.text == "outputs") {
            if (have_outputs) {
                p.fail(head.column, "duplicate 'outputs' line");
            }
            c.outputs.clear();
            while (p.remaining() > 0) {
                c.outputs.push_back(p.qubit());
            }
            if (c.outputs.empty()) {
                p.fail(head.column + head.text.size(), "expected at least one output");
            }
            have_outputs = true;
        } else {
            const auto &table = gate_keywords();
            const auto it = table.find(head.text);
            if (it == table.end()) {
                p.fail(head.column, "unknown gate '" + std::string(head.text) + "'");
            }
            c.add(parse_gate(it->second, p));
        }
        p.finish();
    }
    if (!have_qubits) {
        throw ParseError(line_no + 1, 1, "missing 'qubits <n>' line");
    }
    validate(c);
    return c;
}

std::string print_circuit(const Circuit &c) {
    std::ostringstream out;
    out << "qubits " << c.num_qubits << '\n';
    if (c.clean_qubit) {
        out << "clean " << *c.clean_qubit << '\n';
    }
    out << "outputs";
    for (Qubit q : c.outputs) {
        out << ' ' << q;
    }
    out << '\n';
    for (const Gate &g : c.gates) {
        out << gate_name(g.kind);
        if (g.kind == GateKind::MCX) {
            out << ' ';
            for (std::uint8_t b : g.polarity) {
                out << static_cast<int>(b);
            }
        }
        if (has_phase_step(g.kind)) {
            out << ' ' << g.phase_step;
        }
        for (Qubit q : g.qubits) {
            out << ' ' << q;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace dqc1
