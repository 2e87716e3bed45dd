// Copyright 2026 The qps Authors
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

#include "qps/ir/qasm.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <vector>

#include "qps/error.hpp"

namespace qps {

namespace {

enum class Tok { Ident, Number, String, Punct, Arrow, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    const char ch = src[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      advance(1);
      continue;
    }
    if (ch == '/' && i + 1 < src.size() && src[i + 1] == '/') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    const int l = line;
    const int c = col;
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), l, c});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(ch)) || (ch == '.' && i + 1 < src.size() &&
                                                               std::isdigit(static_cast<unsigned char>(src[i + 1])))) {
      std::size_t j = i;
      while (j < src.size() && (std::isdigit(static_cast<unsigned char>(src[j])) || src[j] == '.')) ++j;
      if (j < src.size() && (src[j] == 'e' || src[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < src.size() && (src[k] == '+' || src[k] == '-')) ++k;
        if (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) {
          j = k;
          while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
        }
      }
      out.push_back({Tok::Number, std::string(src.substr(i, j - i)), l, c});
      advance(j - i);
    } else if (ch == '"') {
      std::size_t j = i + 1;
      while (j < src.size() && src[j] != '"') ++j;
      if (j >= src.size()) throw ParseError("unterminated string", l, c);
      out.push_back({Tok::String, std::string(src.substr(i + 1, j - i - 1)), l, c});
      advance(j - i + 1);
    } else if (ch == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      out.push_back({Tok::Arrow, "->", l, c});
      advance(2);
    } else if (std::string_view("[](),;+-*/").find(ch) != std::string_view::npos) {
      out.push_back({Tok::Punct, std::string(1, ch), l, c});
      advance(1);
    } else {
      throw ParseError(std::string("unexpected character '") + ch + "'", l, c);
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Circuit run() {
    if (peek().kind == Tok::Ident && peek().text == "OPENQASM") {
      next();
      expect_kind(Tok::Number, "version number");
      expect_punct(";");
    }
    while (peek().kind != Tok::End) statement();
    if (!circuit_) throw ParseError("missing qreg declaration", peek().line, peek().col);
    return std::move(*circuit_);
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg, const Token& t) const { throw ParseError(msg, t.line, t.col); }

  const Token& expect_kind(Tok kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what, peek());
    return next();
  }

  void expect_punct(const char* p) {
    if (peek().kind != Tok::Punct || peek().text != p) fail(std::string("expected '") + p + "'", peek());
    next();
  }

  bool accept_punct(const char* p) {
    if (peek().kind == Tok::Punct && peek().text == p) {
      next();
      return true;
    }
    return false;
  }

  long long parse_int() {
    const Token& t = expect_kind(Tok::Number, "integer");
    if (t.text.find_first_not_of("0123456789") != std::string::npos) fail("expected integer", t);
    return std::stoll(t.text);
  }

  // expr := term (('+'|'-') term)*
  double expr() {
    double v = term();
    for (;;) {
      if (accept_punct("+")) {
        v += term();
      } else if (accept_punct("-")) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  double term() {
    double v = unary();
    for (;;) {
      if (accept_punct("*")) {
        v *= unary();
      } else if (peek().kind == Tok::Punct && peek().text == "/") {
        const Token& at = next();
        const double d = unary();
        if (d == 0.0) fail("division by zero", at);
        v /= d;
      } else {
        return v;
      }
    }
  }

  double unary() {
    if (accept_punct("-")) return -unary();
    if (accept_punct("+")) return unary();
    if (accept_punct("(")) {
      const double v = expr();
      expect_punct(")");
      return v;
    }
    const Token& t = next();
    if (t.kind == Tok::Number) return std::stod(t.text);
    if (t.kind == Tok::Ident && t.text == "pi") return std::numbers::pi;
    fail("expected angle expression", t);
  }

  void declare(bool quantum) {
    const Token& name = expect_kind(Tok::Ident, "register name");
    expect_punct("[");
    const long long n = parse_int();
    expect_punct("]");
    expect_punct(";");
    if (quantum) {
      if (!qreg_.empty()) fail("only one qreg is supported", name);
      qreg_ = name.text;
      circuit_.emplace(static_cast<int>(n), 0);
    } else {
      if (!creg_.empty()) fail("only one creg is supported", name);
      if (!circuit_) fail("creg must follow qreg", name);
      if (!circuit_->empty()) fail("creg must precede gates", name);
      creg_ = name.text;
      circuit_.emplace(circuit_->num_qubits(), static_cast<int>(n));
    }
  }

  int operand(const std::string& reg, int size) {
    const Token& name = expect_kind(Tok::Ident, "register operand");
    if (name.text != reg) fail("unknown register '" + name.text + "'", name);
    expect_punct("[");
    const Token& idx_tok = peek();
    const long long idx = parse_int();
    expect_punct("]");
    if (idx >= size) fail("index " + std::to_string(idx) + " out of range for " + reg, idx_tok);
    return static_cast<int>(idx);
  }

  void statement() {
    const Token& head = expect_kind(Tok::Ident, "statement");
    if (head.text == "include") {
      expect_kind(Tok::String, "file name");
      expect_punct(";");
      return;
    }
    if (head.text == "qreg") return declare(true);
    if (head.text == "creg") return declare(false);
    if (!circuit_) fail("gate before qreg declaration", head);

    const int nq = circuit_->num_qubits();
    Instruction ins;
    if (head.text == "measure") {
      const int q = operand(qreg_, nq);
      if (peek().kind != Tok::Arrow) fail("expected '->'", peek());
      next();
      if (creg_.empty()) fail("measure without creg", head);
      const int c = operand(creg_, circuit_->num_clbits());
      ins = make_measure(q, c);
    } else if (head.text == "barrier") {
      std::vector<int> qs;
      do {
        const Token& name = peek();
        if (name.kind == Tok::Ident && toks_[pos_ + 1].text != "[") {
          next();
          if (name.text != qreg_) fail("unknown register '" + name.text + "'", name);
          for (int q = 0; q < nq; ++q) qs.push_back(q);
        } else {
          qs.push_back(operand(qreg_, nq));
        }
      } while (accept_punct(","));
      ins = make_barrier(std::move(qs));
    } else {
      auto g = gate_from_name(head.text);
      if (!g || *g == Gate::Measure || *g == Gate::Barrier) fail("unknown gate '" + head.text + "'", head);
      double param = 0.0;
      const bool parametric = *g == Gate::RZ || *g == Gate::Delay;
      if (parametric) {
        expect_punct("(");
        param = expr();
        expect_punct(")");
      }
      std::vector<int> qs;
      do {
        qs.push_back(operand(qreg_, nq));
      } while (accept_punct(","));
      ins = make_gate(*g, std::move(qs));
      if (*g == Gate::RZ) ins.angle = param;
      if (*g == Gate::Delay) {
        if (param < 0 || param != std::floor(param)) fail("delay needs a non-negative integer duration", head);
        ins.duration = static_cast<Time>(param);
      }
    }
    expect_punct(";");
    try {
      circuit_->append(std::move(ins));
    } catch (const ValidationError& e) {
      fail(e.what(), head);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::optional<Circuit> circuit_;
  std::string qreg_;
  std::string creg_;
};

std::string format_angle(double a) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", a);
  return buf;
}

std::string format_layout(const Layout& l) {
  std::string s;
  for (int v = 0; v < l.num_virtual(); ++v) {
    if (v) s += ", ";
    s += std::to_string(v) + "->" + std::to_string(l.phys(v));
  }
  return s;
}

}  // namespace

Circuit parse_qasm(std::string_view text) { return Parser(tokenize(text)).run(); }

std::string emit_qasm(const Circuit& c) {
  std::ostringstream os;
  os << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  if (c.initial_layout()) os << "// initial_layout: " << format_layout(*c.initial_layout()) << "\n";
  if (c.final_layout()) os << "// final_layout: " << format_layout(*c.final_layout()) << "\n";
  os << "qreg q[" << c.num_qubits() << "];\n";
  if (c.num_clbits() > 0) os << "creg c[" << c.num_clbits() << "];\n";
  for (const Instruction& ins : c.instructions()) {
    switch (ins.gate) {
      case Gate::Measure:
        os << "measure q[" << ins.qubits[0] << "] -> c[" << ins.clbit << "];";
        break;
      default: {
        os << gate_name(ins.gate);
        if (ins.gate == Gate::RZ) os << "(" << format_angle(ins.angle) << ")";
        if (ins.gate == Gate::Delay) os << "(" << ins.duration << ")";
        os << " ";
        for (std::size_t k = 0; k < ins.qubits.size(); ++k) {
          if (k) os << ",";
          os << "q[" << ins.qubits[k] << "]";
        }
        os << ";";
      }
    }
    if (ins.start) os << " // @t=" << *ins.start;
    os << "\n";
  }
  return os.str();
}

Circuit read_qasm_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open circuit file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_qasm(ss.str());
}

}  // namespace qps
