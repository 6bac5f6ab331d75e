#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>

#include "j3/basis.hpp"
#include "j3/cli/expr.hpp"
#include "j3/core.hpp"
#include "j3/equations.hpp"
#include "j3/transcend.hpp"

namespace j3::cli {

/// Polar factors together with the cylindrical coordinates they came from.
struct Decomposition {
  PolarForm polar;
  CylCoords cyl;
};

using Value =
    std::variant<double, J3, J3Class, SolutionSet, CylCoords, DirectSum, AbgCoords, Decomposition>;

struct EvalResult {
  Value value;
  /// Largest relative deviation between the production and matrix routes
  /// over every product and inverse evaluated; set only in oracle mode.
  std::optional<double> oracle_delta;
};

using Environment = std::map<std::string, J3, std::less<>>;

/// Evaluation failure that is not a library MathError.
class EvalError : public std::runtime_error {
 public:
  EvalError(std::string code, const std::string& message,
            std::optional<J3Class> divisor_class = std::nullopt)
      : std::runtime_error(message), code_(std::move(code)), divisor_class_(divisor_class) {}

  const std::string& code() const { return code_; }
  std::optional<J3Class> divisor_class() const { return divisor_class_; }

 private:
  std::string code_;
  std::optional<J3Class> divisor_class_;
};

/// Routes products and inverses through both core.hpp and the Toeplitz
/// oracle when enabled, recording the worst disagreement.
class OracleProbe {
 public:
  explicit OracleProbe(bool enabled) : enabled_(enabled) {}

  J3 mul(const J3& a, const J3& b);
  J3 inverse(const J3& a, double tol);
  J3 pow(const J3& a, std::uint32_t n);

  bool enabled() const { return enabled_; }
  double max_deviation() const { return max_dev_; }

 private:
  void record(double dev);

  bool enabled_;
  double max_dev_ = 0.0;
};

struct EvalOptions {
  double tol = kDefaultTol;
  bool oracle = false;
};

/// Flushes components below the round-off floor of a result of size
/// `scale` to zero.
J3 chop(const J3& x, double scale);

/// Coerces a value to a J3-number; reals become (r, 0, 0).
J3 to_j3(const Value& v);

class Evaluator {
 public:
  explicit Evaluator(EvalOptions options = {}) : options_(options), probe_(options.oracle) {}

  EvalResult evaluate(const Expr& e, const Environment& env);

  OracleProbe& probe() { return probe_; }

 private:
  Value eval(const Expr& e, const Environment& env);
  Value call(const Call& c, const Environment& env);
  Value binary(BinaryOp op, const Value& lhs, const Value& rhs);

  EvalOptions options_;
  OracleProbe probe_;
};

}  // namespace j3::cli
