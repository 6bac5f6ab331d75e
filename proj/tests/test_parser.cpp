#include <gtest/gtest.h>

#include <random>

#include "j3/cli/expr.hpp"

namespace j3::cli {
namespace {

ExprPtr mk(auto node) { return std::make_shared<const Expr>(Expr{std::move(node)}); }

TEST(Parser, FoldsLiteralSums) {
  EXPECT_EQ(*parse("1 + 2j + 3jj"), *mk(J3Lit{1, 2, 3}));
  EXPECT_EQ(*parse("  1+2j   +3jj "), *mk(J3Lit{1, 2, 3}));
  EXPECT_EQ(*parse("1 - 1j + 1jj"), *mk(J3Lit{1, -1, 1}));
  EXPECT_EQ(*parse("2 + 3"), *mk(RealLit{5}));
  EXPECT_EQ(*parse("-2.5e1"), *mk(RealLit{-25}));
  EXPECT_EQ(*parse("-(1 + 1j)"), *mk(J3Lit{-1, -1, 0}));
  EXPECT_EQ(*parse("abg(1, -2, 0.5)"), *mk(AbgLit{1, -2, 0.5}));
}

TEST(Parser, Structure) {
  const ExprPtr jjj = parse("j*j*j");
  const ExprPtr j = mk(Var{"j"});
  EXPECT_EQ(*jjj, *mk(Binary{BinaryOp::Mul, mk(Binary{BinaryOp::Mul, j, j}), j}));
  const ExprPtr e = parse("exp(2*pi*gamma)");
  const auto* call = std::get_if<Call>(&e->node);
  ASSERT_NE(call, nullptr);
  EXPECT_EQ(call->func, "exp");
  ASSERT_EQ(call->args.size(), 1u);
  EXPECT_EQ(*parse("x - y - z"),
            *mk(Binary{BinaryOp::Sub, mk(Binary{BinaryOp::Sub, mk(Var{"x"}), mk(Var{"y"})}), mk(Var{"z"})}));
  EXPECT_EQ(*parse("x / y * z"),
            *mk(Binary{BinaryOp::Mul, mk(Binary{BinaryOp::Div, mk(Var{"x"}), mk(Var{"y"})}), mk(Var{"z"})}));
  EXPECT_EQ(*parse("x + y * z"),
            *mk(Binary{BinaryOp::Add, mk(Var{"x"}), mk(Binary{BinaryOp::Mul, mk(Var{"y"}), mk(Var{"z"})})}));
}

TEST(Parser, PowerIsRightAssociative) {
  EXPECT_EQ(*parse("x^2^3"), *mk(Binary{BinaryOp::Pow, mk(Var{"x"}), mk(RealLit{8})}));
  EXPECT_EQ(*parse("-x^2"), *mk(Unary{UnaryOp::Neg, mk(Binary{BinaryOp::Pow, mk(Var{"x"}), mk(RealLit{2})})}));
}

struct BadInput {
  const char* text;
  std::size_t column;
  const char* token;
};

TEST(Parser, Errors) {
  const BadInput cases[] = {
      {"1 +", 4, "end of input"},    {"(1 + 2", 7, "end of input"}, {"1 + * 2", 5, "*"},
      {"foo(1)", 1, "foo"},          {"exp(1, 2)", 1, "exp"},        {"x^1.5", 3, "1.5"},
      {"x^-1", 3, "-"},              {"2jx", 1, "2jx"},              {"1 2", 3, "2"},
      {"abg(1, 2)", 1, "abg"},       {"", 1, "end of input"},        {"1 $ 2", 3, "$"},
  };
  for (const BadInput& c : cases) {
    try {
      parse(c.text);
      ADD_FAILURE() << "parsed: " << c.text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.column(), c.column) << c.text << ": " << e.what();
      EXPECT_EQ(e.token(), c.token) << c.text << ": " << e.what();
      EXPECT_FALSE(e.expected().empty());
    }
  }
}

TEST(Parser, ErrorMessage) {
  try {
    parse("1 +");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_STREQ(e.what(), "column 4: unexpected end of input, expected number, identifier, '(' or '-'");
  }
}

TEST(Parser, Arity) {
  EXPECT_EQ(builtin_arity("exp"), 1);
  EXPECT_EQ(builtin_arity("abg"), 3);
  EXPECT_EQ(builtin_arity("nope"), -1);
  EXPECT_TRUE(is_builtin_constant("gamma"));
  EXPECT_FALSE(is_builtin_constant("x"));
}

// Random trees in the form the parser produces: no foldable literal sums,
// no negated literals, and abg calls never have three literal arguments.
class TreeGen {
 public:
  explicit TreeGen(std::uint64_t seed) : rng_(seed) {}

  ExprPtr gen(int depth) {
    if (depth == 0 || pick(4) == 0) return leaf();
    switch (pick(5)) {
      case 0: {
        ExprPtr x = gen(depth - 1);
        if (is_literal(*x)) x = mk(Var{"x"});
        return mk(Unary{UnaryOp::Neg, x});
      }
      case 1: {
        const BinaryOp op = pick(2) ? BinaryOp::Add : BinaryOp::Sub;
        ExprPtr a = gen(depth - 1), b = gen(depth - 1);
        if (is_literal(*a) && is_literal(*b)) b = mk(Var{"y"});
        return mk(Binary{op, a, b});
      }
      case 2:
        return mk(Binary{pick(2) ? BinaryOp::Mul : BinaryOp::Div, gen(depth - 1), gen(depth - 1)});
      case 3:
        return mk(Binary{BinaryOp::Pow, gen(depth - 1), mk(RealLit{static_cast<double>(pick(20))})});
      default: {
        static const char* kFuncs[] = {"conj", "det", "mod", "alt", "dir", "exp", "log", "inv",
                                       "classify", "tocyl", "phi", "sqrt", "toabg", "abg"};
        const std::string f = kFuncs[pick(14)];
        std::vector<ExprPtr> args;
        for (int i = 0; i < builtin_arity(f); ++i) args.push_back(gen(depth - 1));
        if (f == "abg") args[1] = mk(Var{"z"});
        return mk(Call{f, args});
      }
    }
  }

 private:
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

  double number() {
    switch (pick(4)) {
      case 0: return pick(10);
      case 1: return std::uniform_real_distribution<double>(-1e3, 1e3)(rng_);
      case 2: return std::ldexp(std::uniform_real_distribution<double>(-1, 1)(rng_), pick(200) - 100);
      default: return -static_cast<double>(pick(5));
    }
  }

  static bool is_literal(const Expr& e) {
    return std::holds_alternative<RealLit>(e.node) || std::holds_alternative<J3Lit>(e.node);
  }

  ExprPtr leaf() {
    static const char* kNames[] = {"x", "y", "z", "_", "value2", "alpha", "beta", "gamma", "pi", "j", "one", "zero"};
    switch (pick(4)) {
      case 0: return mk(RealLit{number()});
      case 1: return mk(J3Lit{number(), number(), number()});
      case 2: return mk(AbgLit{number(), number(), number()});
      default: return mk(Var{kNames[pick(12)]});
    }
  }

  std::mt19937_64 rng_;
};

TEST(ParserProperties, PrintParseRoundTrip) {
  TreeGen gen(7);
  for (int i = 0; i < 5000; ++i) {
    const ExprPtr e = gen.gen(5);
    const std::string text = print(*e);
    ExprPtr back;
    ASSERT_NO_THROW(back = parse(text)) << text;
    ASSERT_EQ(*back, *e) << text << "\n  reprinted: " << print(*back);
  }
}

TEST(ParserProperties, ParsePrintIsStable) {
  for (const char* s : {"1 + 2j + 3jj", "x * (y + 1) / z", "-x^3", "exp(log(2 + 1j + 1jj))", "abg(1, x, 2)",
                        "classify(1 - 1j + 1jj)", "2^3^2", "-(-x)", "1e-300 * x", "conj(-y) - -z"}) {
    const std::string once = print(*parse(s));
    EXPECT_EQ(print(*parse(once)), once) << s;
  }
}

}  // namespace
}  // namespace j3::cli
