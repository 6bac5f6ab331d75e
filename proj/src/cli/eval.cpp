#include "j3/cli/eval.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "j3/matrixrep.hpp"

namespace j3::cli {
namespace {

constexpr double kRoundoff = 64.0 * std::numeric_limits<double>::epsilon();

double chop_real(double x, double scale) { return std::abs(x) <= kRoundoff * scale ? 0.0 : x; }

std::string type_name(const Value& v) {
  static constexpr const char* kNames[] = {"real",   "j3",          "class", "solutions",
                                           "cyl",    "direct sum",  "abg",   "decomposition"};
  return kNames[v.index()];
}

double to_real(const Value& v) {
  if (const auto* d = std::get_if<double>(&v)) return *d;
  if (const auto* x = std::get_if<J3>(&v); x && x->v() == 0.0 && x->w() == 0.0) return x->u();
  throw EvalError("TypeError", "expected a real number, got " + type_name(v));
}

}  // namespace

J3 chop(const J3& x, double scale) {
  return {chop_real(x.u(), scale), chop_real(x.v(), scale), chop_real(x.w(), scale)};
}

J3 to_j3(const Value& v) {
  if (const auto* d = std::get_if<double>(&v)) return {*d, 0.0, 0.0};
  if (const auto* x = std::get_if<J3>(&v)) return *x;
  throw EvalError("TypeError", "expected a J3-number, got " + type_name(v));
}

void OracleProbe::record(double dev) {
  if (dev > max_dev_) max_dev_ = dev;
}

J3 OracleProbe::mul(const J3& a, const J3& b) {
  const J3 out = j3::mul(a, b);
  if (enabled_) record(relative_deviation(out, oracle_mul(a, b), modulus(a) * modulus(b)));
  return out;
}

J3 OracleProbe::inverse(const J3& a, double tol) {
  const J3 out = j3::inverse(a, tol);
  if (enabled_) record(relative_deviation(out, oracle_inverse(a), modulus(out)));
  return out;
}

J3 OracleProbe::pow(const J3& a, std::uint32_t n) {
  const J3 out = j3::pow(a, n);
  if (enabled_) {
    ToeplitzMat acc = to_matrix(kOne);
    ToeplitzMat base = to_matrix(a);
    for (std::uint32_t k = n; k > 0; k >>= 1) {
      if (k & 1u) acc = acc * base;
      if (k > 1) base = base * base;
    }
    record(relative_deviation(out, from_matrix(acc), std::pow(modulus(a), n)));
  }
  return out;
}

EvalResult Evaluator::evaluate(const Expr& e, const Environment& env) {
  EvalResult result{eval(e, env), std::nullopt};
  if (probe_.enabled()) result.oracle_delta = probe_.max_deviation();
  return result;
}

Value Evaluator::eval(const Expr& e, const Environment& env) {
  return std::visit(
      [&](const auto& n) -> Value {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, RealLit>) {
          return n.value;
        } else if constexpr (std::is_same_v<T, J3Lit>) {
          return J3{n.u, n.v, n.w};
        } else if constexpr (std::is_same_v<T, AbgLit>) {
          const J3 x = from_abg({n.a, n.b, n.c});
          return chop(x, modulus(x));
        } else if constexpr (std::is_same_v<T, Var>) {
          if (n.name == "pi") return std::numbers::pi;
          if (n.name == "j") return kJ;
          if (n.name == "alpha") return kAlpha;
          if (n.name == "beta") return kBeta;
          if (n.name == "gamma") return kGamma;
          if (n.name == "one") return kOne;
          if (n.name == "zero") return kZero;
          if (auto it = env.find(n.name); it != env.end()) return it->second;
          throw EvalError("UnboundVariable", "unbound variable '" + n.name + "'");
        } else if constexpr (std::is_same_v<T, Unary>) {
          const Value v = eval(*n.operand, env);
          if (const auto* d = std::get_if<double>(&v)) return -*d;
          return negate(to_j3(v));
        } else if constexpr (std::is_same_v<T, Binary>) {
          return binary(n.op, eval(*n.lhs, env), eval(*n.rhs, env));
        } else {
          return call(n, env);
        }
      },
      e.node);
}

Value Evaluator::binary(BinaryOp op, const Value& lhs, const Value& rhs) {
  const auto* dl = std::get_if<double>(&lhs);
  const auto* dr = std::get_if<double>(&rhs);
  if (dl && dr) {
    switch (op) {
      case BinaryOp::Add: return *dl + *dr;
      case BinaryOp::Sub: return *dl - *dr;
      case BinaryOp::Mul: return *dl * *dr;
      case BinaryOp::Div:
        if (*dr == 0.0) throw EvalError("DivisionByZeroDivisor", "division by zero (Zero)", J3Class::Zero);
        return *dl / *dr;
      case BinaryOp::Pow: {
        double out = 1.0;
        for (auto k = static_cast<std::uint32_t>(*dr), i = 0u; i < k; ++i) out *= *dl;
        if (!std::isfinite(out)) throw MathError(ErrorCode::Overflow, "power overflows");
        return out;
      }
    }
  }

  const J3 a = to_j3(lhs);
  if (op == BinaryOp::Pow) {
    const auto n = static_cast<std::uint32_t>(to_real(rhs));
    const J3 out = probe_.pow(a, n);
    return chop(out, std::max(modulus(out), std::pow(modulus(a), n)));
  }
  const J3 b = to_j3(rhs);
  switch (op) {
    case BinaryOp::Add: return chop(add(a, b), std::max(modulus(a), modulus(b)));
    case BinaryOp::Sub: return chop(sub(a, b), std::max(modulus(a), modulus(b)));
    case BinaryOp::Mul: return chop(probe_.mul(a, b), kSqrt3 * modulus(a) * modulus(b));
    default: break;
  }
  const J3Class cls = classify(b, options_.tol);
  if (cls != J3Class::Invertible) {
    throw EvalError("DivisionByZeroDivisor",
                    "division by a non-invertible number (" + std::string(to_string(cls)) + ")", cls);
  }
  const J3 bi = probe_.inverse(b, options_.tol);
  return chop(probe_.mul(a, bi), kSqrt3 * modulus(a) * modulus(bi));
}

Value Evaluator::call(const Call& c, const Environment& env) {
  std::vector<Value> args;
  for (const auto& a : c.args) args.push_back(eval(*a, env));
  const std::string& f = c.func;

  if (f == "abg") {
    const J3 x = from_abg({to_real(args[0]), to_real(args[1]), to_real(args[2])});
    return chop(x, modulus(x));
  }
  if (f == "sqrt") return sqrt_real(to_real(args[0]));

  const J3 x = to_j3(args[0]);
  if (f == "conj") return conj(x);
  if (f == "det") return chop_real(det(x), 4.0 * std::pow(modulus(x), 3));
  if (f == "mod") return modulus(x);
  if (f == "alt") return chop_real(altitude(x), kSqrt3 * modulus(x));
  if (f == "dir") return direction(x);
  if (f == "exp") {
    const J3 y = exp(x);
    return chop(y, modulus(y) * std::max(1.0, modulus(x)));
  }
  if (f == "log") {
    const J3 y = log(x);
    return chop(y, modulus(y));
  }
  if (f == "inv") {
    const J3 y = probe_.inverse(x, options_.tol);
    return chop(y, modulus(y));
  }
  if (f == "classify") return classify(x, options_.tol);
  if (f == "tocyl") return to_cyl(x);
  if (f == "phi") return phi(x);
  if (f == "toabg") return to_abg(x);
  throw EvalError("UnknownFunction", "unknown function '" + f + "'");
}

}  // namespace j3::cli
