#include "rigidflow/expr.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "rigidflow/errors.hpp"

namespace rigidflow {

namespace {

// ---- lexer ----

struct Token {
  enum class Kind { Number, Ident, Op, End };
  Kind kind = Kind::End;
  double number = 0.0;
  std::string text;  // identifier or single-char operator
  std::size_t pos = 0;
};

class Lexer {
public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

private:
  void advance() {
    while (i_ < s_.size() && std::isspace((unsigned char)s_[i_])) ++i_;
    tok_ = Token{};
    tok_.pos = i_;
    if (i_ >= s_.size()) {
      tok_.kind = Token::Kind::End;
      return;
    }
    const char c = s_[i_];
    if (std::isdigit((unsigned char)c) || (c == '.' && i_ + 1 < s_.size() &&
                                           std::isdigit((unsigned char)s_[i_ + 1]))) {
      std::size_t j = i_;
      while (j < s_.size() && std::isdigit((unsigned char)s_[j])) ++j;
      if (j < s_.size() && s_[j] == '.') {
        ++j;
        while (j < s_.size() && std::isdigit((unsigned char)s_[j])) ++j;
      }
      if (j < s_.size() && (s_[j] == 'e' || s_[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < s_.size() && (s_[k] == '+' || s_[k] == '-')) ++k;
        if (k < s_.size() && std::isdigit((unsigned char)s_[k])) {
          ++k;
          while (k < s_.size() && std::isdigit((unsigned char)s_[k])) ++k;
          j = k;
        }
      }
      tok_.kind = Token::Kind::Number;
      tok_.number = std::strtod(s_.substr(i_, j - i_).c_str(), nullptr);
      i_ = j;
      return;
    }
    if (std::isalpha((unsigned char)c) || c == '_') {
      std::size_t j = i_;
      while (j < s_.size() &&
             (std::isalnum((unsigned char)s_[j]) || s_[j] == '_')) ++j;
      tok_.kind = Token::Kind::Ident;
      tok_.text = s_.substr(i_, j - i_);
      i_ = j;
      return;
    }
    if (std::string("+-*/^()").find(c) != std::string::npos) {
      tok_.kind = Token::Kind::Op;
      tok_.text = std::string(1, c);
      ++i_;
      return;
    }
    throw SyntaxError(i_, std::string("unexpected character '") + c + "'");
  }

  const std::string& s_;
  std::size_t i_ = 0;
  Token tok_;
};

// ---- parser ----

class Parser {
public:
  Parser(const std::string& text, const std::vector<std::string>& coords,
         const std::vector<std::string>& params)
      : lex_(text), coords_(coords), params_(params) {}

  ExprPtr run() {
    ExprPtr e = expr();
    const Token& t = lex_.peek();
    if (t.kind != Token::Kind::End)
      throw SyntaxError(t.pos, "unexpected trailing input at '" + describe(t) + "'");
    return e;
  }

private:
  static std::string describe(const Token& t) {
    switch (t.kind) {
      case Token::Kind::Number: return "number";
      case Token::Kind::Ident: return t.text;
      case Token::Kind::Op: return t.text;
      default: return "end of input";
    }
  }

  bool at_op(const char* set) const {
    const Token& t = lex_.peek();
    return t.kind == Token::Kind::Op && std::string(set).find(t.text[0]) != std::string::npos;
  }

  ExprPtr expr() {
    ExprPtr left = term();
    while (at_op("+-")) {
      const Token op = lex_.take();
      ExprPtr right = term();
      auto node = std::make_shared<Expr>();
      node->kind = Expr::Kind::Binary;
      node->bop = op.text[0] == '+' ? BinaryOp::Add : BinaryOp::Sub;
      node->a = left;
      node->b = right;
      left = node;
    }
    return left;
  }

  ExprPtr term() {
    ExprPtr left = factor();
    while (at_op("*/")) {
      const Token op = lex_.take();
      ExprPtr right = factor();
      auto node = std::make_shared<Expr>();
      node->kind = Expr::Kind::Binary;
      node->bop = op.text[0] == '*' ? BinaryOp::Mul : BinaryOp::Div;
      node->a = left;
      node->b = right;
      left = node;
    }
    return left;
  }

  ExprPtr factor() {
    if (at_op("-")) {
      lex_.take();
      auto node = std::make_shared<Expr>();
      node->kind = Expr::Kind::Unary;
      node->uop = UnaryOp::Neg;
      node->a = factor();
      return node;
    }
    ExprPtr b = base();
    if (at_op("^")) {
      lex_.take();
      auto node = std::make_shared<Expr>();
      node->kind = Expr::Kind::Binary;
      node->bop = BinaryOp::Pow;
      node->a = b;
      node->b = factor();
      return node;
    }
    return b;
  }

  ExprPtr base() {
    const Token t = lex_.take();
    if (t.kind == Token::Kind::Number) {
      auto node = std::make_shared<Expr>();
      node->kind = Expr::Kind::Literal;
      node->literal = t.number;
      return node;
    }
    if (t.kind == Token::Kind::Ident) {
      if (at_op("(")) {
        lex_.take();
        static const std::map<std::string, UnaryOp> funcs = {
            {"sin", UnaryOp::Sin},   {"cos", UnaryOp::Cos},  {"sinh", UnaryOp::Sinh},
            {"cosh", UnaryOp::Cosh}, {"tanh", UnaryOp::Tanh}, {"exp", UnaryOp::Exp},
            {"log", UnaryOp::Log},   {"sqrt", UnaryOp::Sqrt}};
        auto it = funcs.find(t.text);
        if (it == funcs.end()) throw UnknownSymbol(t.text);
        ExprPtr arg = expr();
        expect(")");
        auto node = std::make_shared<Expr>();
        node->kind = Expr::Kind::Unary;
        node->uop = it->second;
        node->a = arg;
        return node;
      }
      auto ci = std::find(coords_.begin(), coords_.end(), t.text);
      if (ci != coords_.end()) {
        auto node = std::make_shared<Expr>();
        node->kind = Expr::Kind::Coordinate;
        node->coord = (std::size_t)(ci - coords_.begin());
        node->name = t.text;
        return node;
      }
      if (std::find(params_.begin(), params_.end(), t.text) != params_.end()) {
        auto node = std::make_shared<Expr>();
        node->kind = Expr::Kind::Parameter;
        node->name = t.text;
        return node;
      }
      throw UnknownSymbol(t.text);
    }
    if (t.kind == Token::Kind::Op && t.text == "(") {
      ExprPtr e = expr();
      expect(")");
      return e;
    }
    throw SyntaxError(t.pos, "expected a number, identifier or '(' at '" + describe(t) + "'");
  }

  void expect(const char* op) {
    const Token& t = lex_.peek();
    if (t.kind != Token::Kind::Op || t.text != op)
      throw SyntaxError(t.pos, std::string("expected '") + op + "' at '" + describe(t) + "'");
    lex_.take();
  }

  Lexer lex_;
  const std::vector<std::string>& coords_;
  const std::vector<std::string>& params_;
};

bool literal_integer(const Expr& e, long long& out) {
  const Expr* p = &e;
  bool neg = false;
  while (p->kind == Expr::Kind::Unary && p->uop == UnaryOp::Neg) {
    neg = !neg;
    p = p->a.get();
  }
  if (p->kind != Expr::Kind::Literal) return false;
  const double v = p->literal;
  if (std::floor(v) != v || std::fabs(v) > 1e9) return false;
  out = (long long)v;
  if (neg) out = -out;
  return true;
}

double fetch_param(const Expr& e, const Params& params) {
  auto it = params.find(e.name);
  if (it == params.end()) throw UnknownSymbol(e.name);
  return it->second;
}

} // namespace

ExprPtr parse_expression(const std::string& text,
                         const std::vector<std::string>& coordinates,
                         const std::vector<std::string>& parameters) {
  return Parser(text, coordinates, parameters).run();
}

double eval_value(const Expr& e, const std::vector<double>& point, const Params& params) {
  switch (e.kind) {
    case Expr::Kind::Literal: return e.literal;
    case Expr::Kind::Coordinate: return point[e.coord];
    case Expr::Kind::Parameter: return fetch_param(e, params);
    case Expr::Kind::Unary: {
      const double u = eval_value(*e.a, point, params);
      switch (e.uop) {
        case UnaryOp::Neg: return -u;
        case UnaryOp::Sin: return std::sin(u);
        case UnaryOp::Cos: return std::cos(u);
        case UnaryOp::Sinh: return std::sinh(u);
        case UnaryOp::Cosh: return std::cosh(u);
        case UnaryOp::Tanh: return std::tanh(u);
        case UnaryOp::Exp: return std::exp(u);
        case UnaryOp::Log:
          if (u <= 0.0) throw DomainError(unparse(e), "log of a non-positive value");
          return std::log(u);
        case UnaryOp::Sqrt:
          if (u <= 0.0) throw DomainError(unparse(e), "sqrt of a non-positive value");
          return std::sqrt(u);
      }
      break;
    }
    case Expr::Kind::Binary: {
      if (e.bop == BinaryOp::Pow) {
        long long p;
        const double a = eval_value(*e.a, point, params);
        if (literal_integer(*e.b, p)) {
          if (p < 0 && a == 0.0) throw DomainError(unparse(e), "zero base with negative exponent");
          return std::pow(a, (double)p);
        }
        const double b = eval_value(*e.b, point, params);
        if (a <= 0.0)
          throw DomainError(unparse(e), "non-integer power of a non-positive base");
        return std::exp(b * std::log(a));
      }
      const double a = eval_value(*e.a, point, params);
      const double b = eval_value(*e.b, point, params);
      switch (e.bop) {
        case BinaryOp::Add: return a + b;
        case BinaryOp::Sub: return a - b;
        case BinaryOp::Mul: return a * b;
        case BinaryOp::Div:
          if (b == 0.0) throw DomainError(unparse(e), "division by zero");
          return a / b;
        default: break;
      }
      break;
    }
  }
  throw NumericalError("corrupt expression node");
}

Jet2 eval_jet2(const Expr& e, const std::vector<double>& point, const Params& params) {
  const std::size_t n = point.size();
  switch (e.kind) {
    case Expr::Kind::Literal: return Jet2::constant(n, e.literal);
    case Expr::Kind::Coordinate: return Jet2::variable(n, e.coord, point[e.coord]);
    case Expr::Kind::Parameter: return Jet2::constant(n, fetch_param(e, params));
    case Expr::Kind::Unary: {
      const Jet2 u = eval_jet2(*e.a, point, params);
      switch (e.uop) {
        case UnaryOp::Neg: return -u;
        case UnaryOp::Sin: return sin(u);
        case UnaryOp::Cos: return cos(u);
        case UnaryOp::Sinh: return sinh(u);
        case UnaryOp::Cosh: return cosh(u);
        case UnaryOp::Tanh: return tanh(u);
        case UnaryOp::Exp: return exp(u);
        case UnaryOp::Log:
          if (u.value() <= 0.0) throw DomainError(unparse(e), "log of a non-positive value");
          return log(u);
        case UnaryOp::Sqrt:
          if (u.value() <= 0.0) throw DomainError(unparse(e), "sqrt of a non-positive value");
          return sqrt(u);
      }
      break;
    }
    case Expr::Kind::Binary: {
      if (e.bop == BinaryOp::Pow) {
        long long p;
        const Jet2 a = eval_jet2(*e.a, point, params);
        if (literal_integer(*e.b, p)) {
          if (p < 0 && a.value() == 0.0)
            throw DomainError(unparse(e), "zero base with negative exponent");
          return pow_int(a, p);
        }
        // Non-integer exponent: rewrite a^b = exp(b*log(a)).
        const Jet2 b = eval_jet2(*e.b, point, params);
        if (a.value() <= 0.0)
          throw DomainError(unparse(e), "non-integer power of a non-positive base");
        return exp(b * log(a));
      }
      const Jet2 a = eval_jet2(*e.a, point, params);
      const Jet2 b = eval_jet2(*e.b, point, params);
      switch (e.bop) {
        case BinaryOp::Add: return a + b;
        case BinaryOp::Sub: return a - b;
        case BinaryOp::Mul: return a * b;
        case BinaryOp::Div:
          if (b.value() == 0.0) throw DomainError(unparse(e), "division by zero");
          return a / b;
        default: break;
      }
      break;
    }
  }
  throw NumericalError("corrupt expression node");
}

namespace {

// Precedence for unparse: atoms 5, '^' 4, unary '-' 3, '*' '/' 2, '+' '-' 1.
int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Literal:
    case Expr::Kind::Coordinate:
    case Expr::Kind::Parameter: return 5;
    case Expr::Kind::Unary: return e.uop == UnaryOp::Neg ? 3 : 5;
    case Expr::Kind::Binary:
      switch (e.bop) {
        case BinaryOp::Pow: return 4;
        case BinaryOp::Mul:
        case BinaryOp::Div: return 2;
        default: return 1;
      }
  }
  return 5;
}

void emit(const Expr& e, std::string& out);

void emit_child(const Expr& child, int min_prec, std::string& out) {
  if (precedence(child) < min_prec) {
    out += '(';
    emit(child, out);
    out += ')';
  } else {
    emit(child, out);
  }
}

void emit(const Expr& e, std::string& out) {
  switch (e.kind) {
    case Expr::Kind::Literal: {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", e.literal);
      out += buf;
      return;
    }
    case Expr::Kind::Coordinate:
    case Expr::Kind::Parameter: out += e.name; return;
    case Expr::Kind::Unary: {
      static const char* names[] = {"",     "sin",  "cos", "sinh", "cosh",
                                    "tanh", "exp",  "log", "sqrt"};
      if (e.uop == UnaryOp::Neg) {
        out += '-';
        emit_child(*e.a, 3, out);
      } else {
        out += names[(int)e.uop];
        out += '(';
        emit(*e.a, out);
        out += ')';
      }
      return;
    }
    case Expr::Kind::Binary: {
      switch (e.bop) {
        case BinaryOp::Add:
          emit_child(*e.a, 1, out); out += " + "; emit_child(*e.b, 2, out); return;
        case BinaryOp::Sub:
          emit_child(*e.a, 1, out); out += " - "; emit_child(*e.b, 2, out); return;
        case BinaryOp::Mul:
          emit_child(*e.a, 2, out); out += "*"; emit_child(*e.b, 3, out); return;
        case BinaryOp::Div:
          emit_child(*e.a, 2, out); out += "/"; emit_child(*e.b, 3, out); return;
        case BinaryOp::Pow:
          emit_child(*e.a, 5, out); out += "^"; emit_child(*e.b, 3, out); return;
      }
    }
  }
}

} // namespace

std::string unparse(const Expr& e) {
  std::string out;
  emit(e, out);
  return out;
}

FiniteDifferenceJet finite_difference_oracle(const Expr& e,
                                             const std::vector<double>& point,
                                             const Params& params, double step) {
  const std::size_t n = point.size();
  FiniteDifferenceJet r;
  r.value = eval_value(e, point, params);
  r.grad.assign(n, 0.0);
  r.hess.assign(n * n, 0.0);
  std::vector<double> p = point;
  for (std::size_t i = 0; i < n; ++i) {
    p[i] = point[i] + step;
    const double fp = eval_value(e, p, params);
    p[i] = point[i] - step;
    const double fm = eval_value(e, p, params);
    p[i] = point[i];
    r.grad[i] = (fp - fm) / (2.0 * step);
    r.hess[i * n + i] = (fp - 2.0 * r.value + fm) / (step * step);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double s = 0.0;
      for (int si = -1; si <= 1; si += 2) {
        for (int sj = -1; sj <= 1; sj += 2) {
          p[i] = point[i] + si * step;
          p[j] = point[j] + sj * step;
          s += si * sj * eval_value(e, p, params);
        }
      }
      p[i] = point[i];
      p[j] = point[j];
      r.hess[i * n + j] = r.hess[j * n + i] = s / (4.0 * step * step);
    }
  }
  return r;
}

} // namespace rigidflow
