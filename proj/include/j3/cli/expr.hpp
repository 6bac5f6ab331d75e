#pragma once

// Expression language of the j3 calculator.
//
//   expr   := term (("+" | "-") term)*
//   term   := factor (("*" | "/") factor)*
//   factor := atom ("^" integer)? | "-" factor
//   atom   := number suffix? | ident | ident "(" expr ("," expr)* ")" | "(" expr ")"
//   suffix := "j" | "jj"
//
// "*" is the J3 product, "/" multiplies by the inverse, "^" takes a
// non-negative integer and is right-associative (2^3^2 = 2^9). Sums and
// differences of literals fold into a single J3Lit, so "1 + 2j + 3jj"
// parses to J3Lit(1, 2, 3).

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace j3::cli {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class UnaryOp { Neg };
enum class BinaryOp { Add, Sub, Mul, Div, Pow };

struct RealLit {
  double value = 0.0;
};
struct J3Lit {
  double u = 0.0, v = 0.0, w = 0.0;
};
struct AbgLit {
  double a = 0.0, b = 0.0, c = 0.0;
};
struct Var {
  std::string name;
};
struct Unary {
  UnaryOp op;
  ExprPtr operand;
};
/// For Pow the right operand is always a non-negative integral RealLit.
struct Binary {
  BinaryOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};
struct Call {
  std::string func;
  std::vector<ExprPtr> args;
};

struct Expr {
  std::variant<RealLit, J3Lit, AbgLit, Var, Unary, Binary, Call> node;
};

/// Structural equality.
bool operator==(const Expr& a, const Expr& b);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t column, std::string token, std::string expected);

  /// 1-based.
  std::size_t column() const { return column_; }
  const std::string& token() const { return token_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t column_;
  std::string token_;
  std::string expected_;
};

/// Number of arguments a built-in takes, or -1 for unknown names.
int builtin_arity(std::string_view name);
bool is_builtin_constant(std::string_view name);

ExprPtr parse(std::string_view input);

/// Text that parses back to the same tree.
std::string print(const Expr& e);

}  // namespace j3::cli
