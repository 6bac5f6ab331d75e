#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <utility>

#include "j3/cli/expr.hpp"

namespace j3::cli {
namespace {

struct Builtin {
  std::string_view name;
  int arity;
};

constexpr Builtin kBuiltins[] = {
    {"conj", 1}, {"det", 1}, {"mod", 1},    {"alt", 1},      {"dir", 1},
    {"exp", 1},  {"log", 1}, {"inv", 1},    {"classify", 1}, {"tocyl", 1},
    {"phi", 1},  {"sqrt", 1}, {"abg", 3},   {"toabg", 1},
};

constexpr std::string_view kConstants[] = {"j", "alpha", "beta", "gamma", "pi", "one", "zero"};

enum class Tok { Number, Ident, LParen, RParen, Comma, Plus, Minus, Star, Slash, Caret, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t column = 0;
  double value = 0.0;
  int suffix = 0;  // 0: none, 1: j, 2: jj
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::vector<Token> lex(std::string_view in) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < in.size()) {
    const char c = in[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Token t;
    t.column = i + 1;
    if (digit(c) || (c == '.' && i + 1 < in.size() && digit(in[i + 1]))) {
      const std::size_t start = i;
      while (i < in.size() && digit(in[i])) ++i;
      if (i < in.size() && in[i] == '.') {
        ++i;
        while (i < in.size() && digit(in[i])) ++i;
      }
      if (i < in.size() && (in[i] == 'e' || in[i] == 'E')) {
        std::size_t k = i + 1;
        if (k < in.size() && (in[k] == '+' || in[k] == '-')) ++k;
        if (k < in.size() && digit(in[k])) {
          i = k;
          while (i < in.size() && digit(in[i])) ++i;
        }
      }
      const std::string literal(in.substr(start, i - start));
      t.value = std::strtod(literal.c_str(), nullptr);
      if (!std::isfinite(t.value)) throw ParseError(t.column, literal, "finite number");
      if (i < in.size() && in[i] == 'j') {
        t.suffix = (i + 1 < in.size() && in[i + 1] == 'j') ? 2 : 1;
        i += static_cast<std::size_t>(t.suffix);
        if (i < in.size() && ident_char(in[i])) {
          throw ParseError(t.column, std::string(in.substr(start, i - start + 1)),
                           "number suffix 'j' or 'jj'");
        }
      } else if (i < in.size() && ident_char(in[i])) {
        throw ParseError(t.column, std::string(in.substr(start, i - start + 1)),
                         "number suffix 'j' or 'jj'");
      }
      t.kind = Tok::Number;
      t.text = std::string(in.substr(start, i - start));
    } else if (ident_start(c)) {
      const std::size_t start = i;
      while (i < in.size() && ident_char(in[i])) ++i;
      t.kind = Tok::Ident;
      t.text = std::string(in.substr(start, i - start));
    } else {
      switch (c) {
        case '(': t.kind = Tok::LParen; break;
        case ')': t.kind = Tok::RParen; break;
        case ',': t.kind = Tok::Comma; break;
        case '+': t.kind = Tok::Plus; break;
        case '-': t.kind = Tok::Minus; break;
        case '*': t.kind = Tok::Star; break;
        case '/': t.kind = Tok::Slash; break;
        case '^': t.kind = Tok::Caret; break;
        default: throw ParseError(t.column, std::string(1, c), "number, identifier, operator or parenthesis");
      }
      t.text = std::string(1, c);
      ++i;
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.kind = Tok::End;
  end.column = in.size() + 1;
  out.push_back(end);
  return out;
}

ExprPtr make(auto node) { return std::make_shared<const Expr>(Expr{std::move(node)}); }

// Literal value of a folded node, if it is one.
std::optional<J3Lit> as_literal(const Expr& e) {
  if (const auto* r = std::get_if<RealLit>(&e.node)) return J3Lit{r->value, 0.0, 0.0};
  if (const auto* l = std::get_if<J3Lit>(&e.node)) return *l;
  return std::nullopt;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  ExprPtr parse_all() {
    ExprPtr e = expr();
    if (peek().kind != Tok::End) fail("operator or end of input");
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& expected) const {
    const Token& t = peek();
    throw ParseError(t.column, t.kind == Tok::End ? "end of input" : t.text, expected);
  }

  void expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) fail(what);
    ++pos_;
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const BinaryOp op = next().kind == Tok::Plus ? BinaryOp::Add : BinaryOp::Sub;
      lhs = fold_sum(op, lhs, term());
    }
    return lhs;
  }

  static ExprPtr fold_sum(BinaryOp op, const ExprPtr& lhs, const ExprPtr& rhs) {
    const auto a = as_literal(*lhs);
    const auto b = as_literal(*rhs);
    if (!a || !b) return make(Binary{op, lhs, rhs});
    const double sign = op == BinaryOp::Add ? 1.0 : -1.0;
    const auto* ra = std::get_if<RealLit>(&lhs->node);
    const auto* rb = std::get_if<RealLit>(&rhs->node);
    if (ra && rb) return make(RealLit{ra->value + sign * rb->value});
    return make(J3Lit{a->u + sign * b->u, a->v + sign * b->v, a->w + sign * b->w});
  }

  ExprPtr term() {
    ExprPtr lhs = factor();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const BinaryOp op = next().kind == Tok::Star ? BinaryOp::Mul : BinaryOp::Div;
      lhs = make(Binary{op, lhs, factor()});
    }
    return lhs;
  }

  ExprPtr factor() {
    if (peek().kind == Tok::Minus) {
      ++pos_;
      ExprPtr operand = factor();
      if (const auto* r = std::get_if<RealLit>(&operand->node)) return make(RealLit{-r->value});
      if (const auto* l = std::get_if<J3Lit>(&operand->node)) return make(J3Lit{-l->u, -l->v, -l->w});
      return make(Unary{UnaryOp::Neg, operand});
    }
    ExprPtr base = atom();
    if (peek().kind == Tok::Caret) {
      ++pos_;
      return make(Binary{BinaryOp::Pow, base, make(RealLit{static_cast<double>(exponent())})});
    }
    return base;
  }

  std::uint32_t exponent() {
    const Token& t = peek();
    if (t.kind != Tok::Number || t.suffix != 0 || t.value != std::floor(t.value) ||
        t.value > 4294967295.0) {
      fail("non-negative integer exponent");
    }
    ++pos_;
    const auto base = static_cast<std::uint64_t>(t.value);
    if (peek().kind != Tok::Caret) return static_cast<std::uint32_t>(base);
    ++pos_;
    const std::size_t column = peek().column;
    const std::uint32_t power = exponent();
    std::uint64_t result = 1;
    for (std::uint32_t i = 0; i < power; ++i) {
      result *= base;
      if (result > 4294967295ull) throw ParseError(column, std::to_string(power), "smaller exponent");
      if (base <= 1) break;
    }
    if (base == 0 && power > 0) result = 0;
    return static_cast<std::uint32_t>(result);
  }

  ExprPtr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        ++pos_;
        if (t.suffix == 0) return make(RealLit{t.value});
        if (t.suffix == 1) return make(J3Lit{0.0, t.value, 0.0});
        return make(J3Lit{0.0, 0.0, t.value});
      }
      case Tok::Ident: {
        const Token ident = next();
        if (peek().kind != Tok::LParen) return make(Var{ident.text});
        ++pos_;
        const int arity = builtin_arity(ident.text);
        if (arity < 0) throw ParseError(ident.column, ident.text, "known function");
        std::vector<ExprPtr> args{expr()};
        while (peek().kind == Tok::Comma) {
          ++pos_;
          args.push_back(expr());
        }
        expect(Tok::RParen, "',' or ')'");
        if (static_cast<int>(args.size()) != arity) {
          throw ParseError(ident.column, ident.text,
                           std::to_string(arity) + " argument" + (arity == 1 ? "" : "s"));
        }
        if (ident.text == "abg") {
          const auto* a = std::get_if<RealLit>(&args[0]->node);
          const auto* b = std::get_if<RealLit>(&args[1]->node);
          const auto* c = std::get_if<RealLit>(&args[2]->node);
          if (a && b && c) return make(AbgLit{a->value, b->value, c->value});
        }
        return make(Call{ident.text, std::move(args)});
      }
      case Tok::LParen: {
        ++pos_;
        ExprPtr inner = expr();
        expect(Tok::RParen, "')'");
        return inner;
      }
      default:
        fail("number, identifier, '(' or '-'");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

std::string exact(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string signed_term(double x, const char* suffix) {
  if (x == 0.0) x = 0.0;
  return (std::signbit(x) ? " - " : " + ") + exact(std::abs(x)) + suffix;
}

}  // namespace

ParseError::ParseError(std::size_t column, std::string token, std::string expected)
    : std::runtime_error("column " + std::to_string(column) + ": unexpected " +
                         (token == "end of input" ? token : "'" + token + "'") + ", expected " +
                         expected),
      column_(column),
      token_(std::move(token)),
      expected_(std::move(expected)) {}

int builtin_arity(std::string_view name) {
  for (const auto& b : kBuiltins)
    if (b.name == name) return b.arity;
  return -1;
}

bool is_builtin_constant(std::string_view name) {
  for (auto c : kConstants)
    if (c == name) return true;
  return false;
}

ExprPtr parse(std::string_view input) { return Parser(lex(input)).parse_all(); }

bool operator==(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, RealLit>) {
          return x.value == y.value;
        } else if constexpr (std::is_same_v<T, J3Lit>) {
          return x.u == y.u && x.v == y.v && x.w == y.w;
        } else if constexpr (std::is_same_v<T, AbgLit>) {
          return x.a == y.a && x.b == y.b && x.c == y.c;
        } else if constexpr (std::is_same_v<T, Var>) {
          return x.name == y.name;
        } else if constexpr (std::is_same_v<T, Unary>) {
          return x.op == y.op && *x.operand == *y.operand;
        } else if constexpr (std::is_same_v<T, Binary>) {
          return x.op == y.op && *x.lhs == *y.lhs && *x.rhs == *y.rhs;
        } else {
          if (x.func != y.func || x.args.size() != y.args.size()) return false;
          for (std::size_t i = 0; i < x.args.size(); ++i)
            if (!(*x.args[i] == *y.args[i])) return false;
          return true;
        }
      },
      a.node);
}

std::string print(const Expr& e) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, RealLit>) {
          return std::signbit(x.value) && x.value != 0.0 ? "(" + exact(x.value) + ")" : exact(x.value);
        } else if constexpr (std::is_same_v<T, J3Lit>) {
          return "(" + exact(x.u) + signed_term(x.v, "j") + signed_term(x.w, "jj") + ")";
        } else if constexpr (std::is_same_v<T, AbgLit>) {
          return "abg(" + exact(x.a) + ", " + exact(x.b) + ", " + exact(x.c) + ")";
        } else if constexpr (std::is_same_v<T, Var>) {
          return x.name;
        } else if constexpr (std::is_same_v<T, Unary>) {
          return "(-" + print(*x.operand) + ")";
        } else if constexpr (std::is_same_v<T, Binary>) {
          static constexpr const char* kOps[] = {" + ", " - ", " * ", " / ", "^"};
          return "(" + print(*x.lhs) + kOps[static_cast<int>(x.op)] + print(*x.rhs) + ")";
        } else {
          std::string out = x.func + "(";
          for (std::size_t i = 0; i < x.args.size(); ++i) {
            if (i > 0) out += ", ";
            out += print(*x.args[i]);
          }
          return out + ")";
        }
      },
      e.node);
}

}  // namespace j3::cli
