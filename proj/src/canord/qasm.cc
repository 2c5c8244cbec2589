// Copyright 2026 The canord Authors
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

#include "canord/qasm.h"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <unordered_map>

namespace canord {

QasmParseError::QasmParseError(size_t line, size_t column, const std::string &message)
    : std::invalid_argument(
          "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line(line),
      column(column) {
}

namespace {

enum class Tok { Ident, Number, String, Punct, Arrow, End };

struct Token {
    Tok type;
    std::string text;
    size_t line;
    size_t column;
};

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    size_t line = 1;
    size_t col = 1;
    size_t k = 0;
    auto advance = [&](size_t n) {
        for (size_t j = 0; j < n; j++) {
            if (src[k] == '\n') {
                line++;
                col = 1;
            } else {
                col++;
            }
            k++;
        }
    };
    while (k < src.size()) {
        char c = src[k];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (c == '/' && k + 1 < src.size() && src[k + 1] == '/') {
            while (k < src.size() && src[k] != '\n') {
                advance(1);
            }
            continue;
        }
        size_t start = k;
        size_t tl = line;
        size_t tc = col;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (k < src.size() && (std::isalnum(static_cast<unsigned char>(src[k])) || src[k] == '_')) {
                advance(1);
            }
            out.push_back({Tok::Ident, std::string(src.substr(start, k - start)), tl, tc});
        } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            while (k < src.size() && (std::isdigit(static_cast<unsigned char>(src[k])) || src[k] == '.')) {
                advance(1);
            }
            if (k < src.size() && (src[k] == 'e' || src[k] == 'E')) {
                advance(1);
                if (k < src.size() && (src[k] == '+' || src[k] == '-')) {
                    advance(1);
                }
                while (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) {
                    advance(1);
                }
            }
            out.push_back({Tok::Number, std::string(src.substr(start, k - start)), tl, tc});
        } else if (c == '"') {
            advance(1);
            while (k < src.size() && src[k] != '"' && src[k] != '\n') {
                advance(1);
            }
            if (k >= src.size() || src[k] != '"') {
                throw QasmParseError(tl, tc, "unterminated string");
            }
            advance(1);
            out.push_back({Tok::String, std::string(src.substr(start + 1, k - start - 2)), tl, tc});
        } else if (c == '-' && k + 1 < src.size() && src[k + 1] == '>') {
            advance(2);
            out.push_back({Tok::Arrow, "->", tl, tc});
        } else if (std::string_view("[](),;*/-+").find(c) != std::string_view::npos) {
            advance(1);
            out.push_back({Tok::Punct, std::string(1, c), tl, tc});
        } else {
            throw QasmParseError(tl, tc, std::string("unexpected character '") + c + "'");
        }
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

const std::unordered_map<std::string, GateKind> &gate_table() {
    static const std::unordered_map<std::string, GateKind> table = {
        {"x", GateKind::X},     {"sx", GateKind::SX},   {"rz", GateKind::RZ},   {"h", GateKind::H},
        {"s", GateKind::S},     {"sdg", GateKind::SDG}, {"t", GateKind::T},     {"tdg", GateKind::TDG},
        {"cx", GateKind::CX},   {"ccx", GateKind::CCX}, {"cp", GateKind::CP},   {"swap", GateKind::SWAP},
    };
    return table;
}

class Parser {
   public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {
    }

    Circuit parse() {
        if (peek_ident("OPENQASM")) {
            next();
            expect_type(Tok::Number, "version number");
            expect_punct(";");
        }
        while (peek().type != Tok::End) {
            statement();
        }
        if (!qreg_) {
            fail(peek(), "missing qreg declaration");
        }
        return std::move(circuit_);
    }

   private:
    const Token &peek() const {
        return toks_[pos_];
    }
    const Token &next() {
        const Token &t = toks_[pos_];
        if (t.type != Tok::End) {
            pos_++;
        }
        return t;
    }
    bool peek_ident(std::string_view s) const {
        return peek().type == Tok::Ident && peek().text == s;
    }
    bool peek_punct(std::string_view s) const {
        return peek().type == Tok::Punct && peek().text == s;
    }
    [[noreturn]] void fail(const Token &t, const std::string &msg) const {
        throw QasmParseError(t.line, t.column, msg);
    }
    const Token &expect_type(Tok type, const char *what) {
        if (peek().type != type) {
            fail(peek(), std::string("expected ") + what + describe(peek()));
        }
        return next();
    }
    void expect_punct(const char *p) {
        if (!peek_punct(p)) {
            fail(peek(), std::string("expected '") + p + "'" + describe(peek()));
        }
        next();
    }
    static std::string describe(const Token &t) {
        if (t.type == Tok::End) {
            return " but reached end of input";
        }
        return " but found '" + t.text + "'";
    }

    uint64_t integer(const Token &t) const {
        uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
            fail(t, "expected an integer but found '" + t.text + "'");
        }
        return v;
    }

    void statement() {
        const Token &head = peek();
        if (head.type != Tok::Ident) {
            fail(head, "expected a statement" + describe(head));
        }
        if (head.text == "include") {
            next();
            const Token &file = expect_type(Tok::String, "an include file name");
            if (file.text != "qelib1.inc") {
                fail(file, "only qelib1.inc may be included");
            }
            expect_punct(";");
        } else if (head.text == "qreg" || head.text == "creg") {
            declaration();
        } else if (head.text == "measure") {
            measure();
        } else if (head.text == "barrier") {
            barrier();
        } else {
            gate();
        }
    }

    void declaration() {
        const Token &kw = next();
        bool quantum = kw.text == "qreg";
        const Token &name = expect_type(Tok::Ident, "a register name");
        expect_punct("[");
        const Token &size_tok = expect_type(Tok::Number, "a register size");
        uint64_t size = integer(size_tok);
        expect_punct("]");
        expect_punct(";");
        if (quantum) {
            if (qreg_) {
                fail(kw, "only one qreg is supported");
            }
            qreg_ = name.text;
            circuit_.num_qubits = static_cast<uint32_t>(size);
        } else {
            if (creg_) {
                fail(kw, "only one creg is supported");
            }
            creg_ = name.text;
            circuit_.num_clbits = static_cast<uint32_t>(size);
            written_.assign(size, false);
        }
    }

    uint32_t operand(const std::optional<std::string> &reg, uint32_t size, bool quantum) {
        const Token &name = expect_type(Tok::Ident, quantum ? "a qubit operand" : "a clbit operand");
        if (!reg || name.text != *reg) {
            fail(name, std::string("unknown ") + (quantum ? "quantum" : "classical") + " register '" + name.text +
                           "'");
        }
        expect_punct("[");
        const Token &idx_tok = expect_type(Tok::Number, "an index");
        uint64_t idx = integer(idx_tok);
        if (idx >= size) {
            fail(idx_tok, "index " + idx_tok.text + " out of range for register '" + name.text + "' of size " +
                              std::to_string(size));
        }
        expect_punct("]");
        return static_cast<uint32_t>(idx);
    }

    uint32_t qubit() {
        const Token &at = peek();
        uint32_t q = operand(qreg_, circuit_.num_qubits, true);
        if (measured_.count(q)) {
            fail(at, "operation on qubit " + std::to_string(q) + " after its measurement");
        }
        return q;
    }

    void measure() {
        next();
        uint32_t q = qubit();
        if (peek().type != Tok::Arrow) {
            fail(peek(), "expected '->'" + describe(peek()));
        }
        next();
        const Token &at = peek();
        uint32_t c = operand(creg_, circuit_.num_clbits, false);
        expect_punct(";");
        if (written_[c]) {
            fail(at, "clbit " + std::to_string(c) + " written twice");
        }
        written_[c] = true;
        measured_.insert({q, true});
        circuit_.append(Gate::measure(q, c));
    }

    void barrier() {
        next();
        std::vector<uint32_t> qs;
        qs.push_back(operand(qreg_, circuit_.num_qubits, true));
        while (peek_punct(",")) {
            next();
            qs.push_back(operand(qreg_, circuit_.num_qubits, true));
        }
        expect_punct(";");
        circuit_.append(Gate::barrier(std::move(qs)));
    }

    void gate() {
        const Token &name = next();
        auto it = gate_table().find(name.text);
        if (it == gate_table().end()) {
            fail(name, "unknown gate '" + name.text + "'");
        }
        GateKind kind = it->second;
        Gate g;
        g.kind = kind;
        if (has_angle(kind)) {
            expect_punct("(");
            g.angle = Angle(angle_expr());
            expect_punct(")");
        } else if (peek_punct("(")) {
            fail(peek(), "gate '" + name.text + "' takes no parameters");
        }
        size_t arity = gate_arity(kind);
        const Token &first = peek();
        for (size_t k = 0; k < arity; k++) {
            if (k) {
                expect_punct(",");
            }
            g.qubits.push_back(qubit());
        }
        expect_punct(";");
        for (size_t a = 0; a < g.qubits.size(); a++) {
            for (size_t b = a + 1; b < g.qubits.size(); b++) {
                if (g.qubits[a] == g.qubits[b]) {
                    fail(first, "repeated qubit operand in '" + name.text + "'");
                }
            }
        }
        circuit_.append(std::move(g));
    }

    // [-] term, where term is a decimal, or [k*]pi[/d].
    double angle_expr() {
        double sign = 1;
        while (peek_punct("-") || peek_punct("+")) {
            if (next().text == "-") {
                sign = -sign;
            }
        }
        const Token &t = peek();
        if (t.type == Tok::Number) {
            next();
            if (peek_punct("*")) {
                next();
                if (!peek_ident("pi")) {
                    fail(peek(), "expected 'pi'" + describe(peek()));
                }
                next();
                double k = static_cast<double>(integer(t));
                return sign * pi_over(k);
            }
            double v = 0;
            auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
            if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
                fail(t, "malformed number '" + t.text + "'");
            }
            return sign * v;
        }
        if (peek_ident("pi")) {
            next();
            return sign * pi_over(1);
        }
        fail(t, "expected an angle" + describe(t));
    }

    double pi_over(double k) {
        double value = k * kPi;
        if (peek_punct("/")) {
            next();
            const Token &d = expect_type(Tok::Number, "a divisor");
            uint64_t div = integer(d);
            if (div == 0) {
                fail(d, "division by zero");
            }
            value /= static_cast<double>(div);
        }
        return value;
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
    Circuit circuit_;
    std::optional<std::string> qreg_;
    std::optional<std::string> creg_;
    std::vector<bool> written_;
    std::unordered_map<uint32_t, bool> measured_;
};

}  // namespace

Circuit parse_qasm(std::string_view text) {
    Parser parser(tokenize(text));
    return parser.parse();
}

std::string format_angle(Angle angle) {
    double r = angle.radians();
    if (r == 0) {
        return "0";
    }
    // Same arithmetic as the parser: (k * pi) / d.
    for (uint64_t d = 1; d <= (uint64_t{1} << 20); d <<= 1) {
        double k = std::round(r * static_cast<double>(d) / kPi);
        if (k < 1 || k > 2.0 * static_cast<double>(d)) {
            continue;
        }
        double value = k * kPi;
        if (d != 1) {
            value /= static_cast<double>(d);
        }
        if (Angle(value).radians() == r) {
            std::string s;
            auto ki = static_cast<uint64_t>(k);
            if (ki != 1) {
                s += std::to_string(ki) + "*";
            }
            s += "pi";
            if (d != 1) {
                s += "/" + std::to_string(d);
            }
            return s;
        }
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", r);
    return buf;
}

std::string emit_qasm(const Circuit &circuit) {
    std::stringstream out;
    out << "OPENQASM 2.0;\n";
    if (!circuit.name.empty()) {
        out << "// " << circuit.name << "\n";
    }
    out << "qreg q[" << circuit.num_qubits << "];\n";
    if (circuit.num_clbits) {
        out << "creg c[" << circuit.num_clbits << "];\n";
    }
    for (const Gate &g : circuit.gates) {
        if (g.kind == GateKind::MEASURE) {
            out << "measure q[" << g.qubits[0] << "] -> c[" << g.clbit << "];\n";
            continue;
        }
        out << gate_name(g.kind);
        if (has_angle(g.kind)) {
            out << "(" << format_angle(g.angle) << ")";
        }
        for (size_t k = 0; k < g.qubits.size(); k++) {
            out << (k ? "," : " ") << "q[" << g.qubits[k] << "]";
        }
        out << ";\n";
    }
    return out.str();
}

}  // namespace canord
