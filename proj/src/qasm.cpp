// Copyright 2026 The topas developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "topas/qasm.hpp"

#include "topas/error.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

namespace topas {

namespace {

constexpr double kPi = std::numbers::pi;

struct Token {
  enum class Kind { Ident, Number, Symbol, String, End };
  Kind kind;
  std::string text;
  double value = 0.0;
  int line = 1, col = 1;
};

class Lexer {
public:
  explicit Lexer(const std::string& src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }

  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, tok_.line, tok_.col);
  }

private:
  void advance() {
    skip_ws_and_comments();
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= src_.size()) {
      tok_.kind = Token::Kind::End;
      tok_.text.clear();
      return;
    }
    const char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string id;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '_')) {
        id += take();
      }
      tok_.kind = Token::Kind::Ident;
      tok_.text = std::move(id);
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::string num;
      while (pos_ < src_.size() &&
             (std::isdigit(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '.' || src_[pos_] == 'e' || src_[pos_] == 'E' ||
              ((src_[pos_] == '+' || src_[pos_] == '-') && !num.empty() &&
               (num.back() == 'e' || num.back() == 'E')))) {
        num += take();
      }
      try {
        tok_.value = std::stod(num);
      } catch (const std::exception&) {
        throw ParseError("malformed number '" + num + "'", tok_.line, tok_.col);
      }
      tok_.kind = Token::Kind::Number;
      tok_.text = std::move(num);
      return;
    }
    if (c == '"') {
      take();
      std::string s;
      while (pos_ < src_.size() && src_[pos_] != '"') s += take();
      if (pos_ >= src_.size()) {
        throw ParseError("unterminated string", tok_.line, tok_.col);
      }
      take();
      tok_.kind = Token::Kind::String;
      tok_.text = std::move(s);
      return;
    }
    tok_.kind = Token::Kind::Symbol;
    tok_.text = std::string(1, take());
  }

  void skip_ws_and_comments() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') take();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        take();
      } else {
        break;
      }
    }
  }

  char take() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
};

class Parser {
public:
  explicit Parser(const std::string& src) : lex_(src) {}

  Circuit run() {
    expect_ident("OPENQASM");
    const Token ver = expect(Token::Kind::Number);
    if (ver.text != "2.0") {
      throw ParseError("unsupported OPENQASM version '" + ver.text + "'",
                       ver.line, ver.col);
    }
    expect_symbol(";");

    while (lex_.peek().kind != Token::Kind::End) {
      statement();
    }
    if (!have_qreg_) {
      throw ParseError("missing qreg declaration", 1, 1);
    }
    return std::move(circuit_);
  }

private:
  void statement() {
    const Token head = expect(Token::Kind::Ident);
    if (head.text == "include") {
      expect(Token::Kind::String);
      expect_symbol(";");
      return;
    }
    if (head.text == "qreg") {
      if (have_qreg_) {
        throw ParseError("only one quantum register is supported", head.line,
                         head.col);
      }
      reg_name_ = expect(Token::Kind::Ident).text;
      expect_symbol("[");
      const Token n = expect(Token::Kind::Number);
      expect_symbol("]");
      expect_symbol(";");
      const int width = static_cast<int>(n.value);
      if (width <= 0 || n.value != width) {
        throw ParseError("bad register size", n.line, n.col);
      }
      circuit_ = Circuit(width);
      have_qreg_ = true;
      return;
    }
    gate_statement(head);
  }

  void gate_statement(const Token& name) {
    if (!have_qreg_) {
      throw ParseError("gate before qreg declaration", name.line, name.col);
    }
    std::vector<double> params;
    if (lex_.peek().kind == Token::Kind::Symbol && lex_.peek().text == "(") {
      lex_.next();
      if (!(lex_.peek().kind == Token::Kind::Symbol &&
            lex_.peek().text == ")")) {
        params.push_back(expr());
        while (lex_.peek().kind == Token::Kind::Symbol &&
               lex_.peek().text == ",") {
          lex_.next();
          params.push_back(expr());
        }
      }
      expect_symbol(")");
    }
    std::vector<int> qubits;
    qubits.push_back(qubit_ref());
    while (lex_.peek().kind == Token::Kind::Symbol && lex_.peek().text == ",") {
      lex_.next();
      qubits.push_back(qubit_ref());
    }
    expect_symbol(";");
    emit_gate(name, params, qubits);
  }

  void emit_gate(const Token& name, const std::vector<double>& params,
                 const std::vector<int>& qubits) {
    const auto need = [&](std::size_t nparams, std::size_t nqubits) {
      if (params.size() != nparams) {
        throw ParseError("gate '" + name.text + "' expects " +
                             std::to_string(nparams) + " parameter(s)",
                         name.line, name.col);
      }
      if (qubits.size() != nqubits) {
        throw ParseError("gate '" + name.text + "' expects " +
                             std::to_string(nqubits) + " qubit(s)",
                         name.line, name.col);
      }
    };
    const std::string& g = name.text;
    try {
      if (g == "u3" || g == "u") {
        need(3, 1);
        circuit_.push(Gate::u3(qubits[0], params[0], params[1], params[2]));
      } else if (g == "cx") {
        need(0, 2);
        circuit_.push(Gate::cnot(qubits[0], qubits[1]));
      } else if (g == "swap") {
        need(0, 2);
        circuit_.push(Gate::swap(qubits[0], qubits[1]));
      } else if (g == "h") {
        need(0, 1);
        circuit_.push(Gate::u3(qubits[0], kPi / 2, 0.0, kPi));
      } else if (g == "x") {
        need(0, 1);
        circuit_.push(Gate::u3(qubits[0], kPi, 0.0, kPi));
      } else if (g == "rz") {
        need(1, 1);
        circuit_.push(Gate::u3(qubits[0], 0.0, 0.0, params[0]));
      } else if (g == "ry") {
        need(1, 1);
        circuit_.push(Gate::u3(qubits[0], params[0], 0.0, 0.0));
      } else if (g == "rx") {
        need(1, 1);
        circuit_.push(Gate::u3(qubits[0], params[0], -kPi / 2, kPi / 2));
      } else {
        throw ParseError("unsupported gate '" + g + "'", name.line, name.col);
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.what(), name.line, name.col);
    }
  }

  int qubit_ref() {
    const Token reg = expect(Token::Kind::Ident);
    if (reg.text != reg_name_) {
      throw ParseError("unknown register '" + reg.text + "'", reg.line,
                       reg.col);
    }
    expect_symbol("[");
    const Token idx = expect(Token::Kind::Number);
    expect_symbol("]");
    const int q = static_cast<int>(idx.value);
    if (idx.value != q || q < 0 || q >= circuit_.width) {
      throw ParseError("qubit index out of range", idx.line, idx.col);
    }
    return q;
  }

  // expr := term (('+'|'-') term)*
  double expr() {
    double v = term();
    while (lex_.peek().kind == Token::Kind::Symbol &&
           (lex_.peek().text == "+" || lex_.peek().text == "-")) {
      const std::string op = lex_.next().text;
      const double rhs = term();
      v = (op == "+") ? v + rhs : v - rhs;
    }
    return v;
  }

  // term := factor (('*'|'/') factor)*
  double term() {
    double v = factor();
    while (lex_.peek().kind == Token::Kind::Symbol &&
           (lex_.peek().text == "*" || lex_.peek().text == "/")) {
      const std::string op = lex_.next().text;
      const double rhs = factor();
      v = (op == "*") ? v * rhs : v / rhs;
    }
    return v;
  }

  double factor() {
    const Token t = lex_.peek();
    if (t.kind == Token::Kind::Symbol && t.text == "-") {
      lex_.next();
      return -factor();
    }
    if (t.kind == Token::Kind::Symbol && t.text == "(") {
      lex_.next();
      const double v = expr();
      expect_symbol(")");
      return v;
    }
    if (t.kind == Token::Kind::Number) {
      lex_.next();
      return t.value;
    }
    if (t.kind == Token::Kind::Ident && t.text == "pi") {
      lex_.next();
      return kPi;
    }
    throw ParseError("expected angle expression", t.line, t.col);
  }

  Token expect(Token::Kind kind) {
    const Token t = lex_.next();
    if (t.kind != kind) {
      throw ParseError("unexpected token '" + t.text + "'", t.line, t.col);
    }
    return t;
  }

  void expect_ident(const std::string& text) {
    const Token t = expect(Token::Kind::Ident);
    if (t.text != text) {
      throw ParseError("expected '" + text + "', found '" + t.text + "'",
                       t.line, t.col);
    }
  }

  void expect_symbol(const std::string& text) {
    const Token t = lex_.next();
    if (t.kind != Token::Kind::Symbol || t.text != text) {
      throw ParseError("expected '" + text + "', found '" + t.text + "'",
                       t.line, t.col);
    }
  }

  Lexer lex_;
  Circuit circuit_;
  std::string reg_name_;
  bool have_qreg_ = false;
};

std::string fmt_angle(double a) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", a);
  return buf;
}

}  // namespace

Circuit parse_qasm(const std::string& text) { return Parser(text).run(); }

std::string emit_qasm(const Circuit& c) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\n";
  out << "include \"qelib1.inc\";\n";
  out << "qreg q[" << c.width << "];\n";
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case Gate::Kind::U3:
        out << "u3(" << fmt_angle(g.theta) << "," << fmt_angle(g.phi) << ","
            << fmt_angle(g.lambda) << ") q[" << g.q0 << "];\n";
        break;
      case Gate::Kind::Cnot:
        out << "cx q[" << g.q0 << "],q[" << g.q1 << "];\n";
        break;
      case Gate::Kind::Swap:
        out << "swap q[" << g.q0 << "],q[" << g.q1 << "];\n";
        break;
    }
  }
  return out.str();
}

Circuit read_qasm_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_qasm(buf.str());
}

void write_qasm_file(const Circuit& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open for writing: " + path);
  out << emit_qasm(c);
  if (!out) throw Error("write failed: " + path);
}

}  // namespace topas
