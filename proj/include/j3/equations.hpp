#pragma once

/**
 * @file equations.hpp
 * @brief Linear and quadratic equations over J3-numbers.
 *
 * Zero divisors make the solution sets richer than over C: a linear
 * equation S X = T with S in L or M has either no solution or a whole
 * line/plane of them, X^2 = r has four roots for r > 0, and a monic
 * quadratic has 0, 1, 2 or 4 roots depending on its discriminant.
 */

#include <optional>
#include <vector>

#include "j3/core.hpp"

namespace j3 {

enum class SolutionKind { Empty, Unique, Finite, Line, Plane };

std::string_view to_string(SolutionKind kind);

struct SolutionSet {
  SolutionKind kind = SolutionKind::Empty;
  /// Unique: the root. Finite: the roots. Line/Plane: the base point.
  std::vector<J3> values;
  /// Line: one direction. Plane: two orthogonal directions.
  std::vector<J3> directions;
  /// Set when every value + t * generator, t real, is also a solution.
  std::optional<J3> generator;

  bool parametric() const { return generator.has_value(); }

  static SolutionSet empty();
  static SolutionSet unique(const J3& x);
  static SolutionSet finite(std::vector<J3> xs);
  static SolutionSet line(const J3& base, const J3& direction);
  static SolutionSet plane(const J3& base, const J3& d1, const J3& d2);
};

/// P^2 - 4Q for the monic equation X^2 + P X + Q = 0.
J3 discriminant(const J3& p, const J3& q);
/// B^2 - 4 A C for A X^2 + B X + C = 0.
J3 discriminant(const J3& a, const J3& b, const J3& c);

/// |S X - T|.
double linear_residual(const J3& s, const J3& t, const J3& x);
/// |A X^2 + B X + C|.
double quadratic_residual(const J3& a, const J3& b, const J3& c, const J3& x);

/// Every point the set describes: the values themselves, plus samples at
/// t in {-2, -1, 0, 1, 2} along lines, planes and parametric generators.
std::vector<J3> sample_points(const SolutionSet& set);

/// True when every sampled point satisfies S X = T within
/// 1e-8 (1 + |S| + |T|).
bool verify_linear(const J3& s, const J3& t, const SolutionSet& set);
/// True when every sampled point satisfies A X^2 + B X + C = 0 within
/// 1e-8 (1 + |A| + |B| + |C|).
bool verify_quadratic(const J3& a, const J3& b, const J3& c, const SolutionSet& set);

/// The solution of S X = T lying in L, for S, T in L with S nonzero.
J3 particular_solution_l(const J3& s, const J3& t);
/// The solution of S X = T lying in M, for S = (u, u+v, v) and
/// T = (a, a+b, b) in M with S nonzero: X = (c, c+d, d) where
///   c =  (u(2a+b) + v(a+2b)) / (3(u^2+uv+v^2))
///   d = -(u(a-b) + v(2a+b)) / (3(u^2+uv+v^2))
J3 particular_solution_m(const J3& s, const J3& t);

/// S X = T. Throws MathError(ZeroLHS) when S classifies as zero.
///
///   S invertible                    -> Unique(S^-1 T)
///   S zero divisor, T invertible    -> Empty
///   S, T in opposite ideals         -> Empty
///   S, T in L                       -> Plane(X_L, M)
///   S, T in M                       -> Line(X_M, L)
///   S zero divisor, T = 0           -> the annihilator of S (M or L)
SolutionSet solve_linear(const J3& s, const J3& t, double tol = kDefaultTol);

/// X^2 = r: none for r < 0, {0} for r = 0, four roots for r > 0.
SolutionSet sqrt_real(double r);

/// {0, 1, alpha, beta}.
std::vector<J3> idempotents();

/// X^2 + P X + Q = 0 via the discriminant D = P^2 - 4Q.
SolutionSet solve_monic_quadratic(const J3& p, const J3& q, double tol = kDefaultTol);

/// A X^2 + B X + C = 0.
///
/// Invertible A reduces to the monic case. When A and B both lie in M the
/// equation only constrains the M-part of X; the result is then a set of
/// representatives in M with generator (1, -1, 1). Throws
/// MathError(Unsupported) for any other zero-divisor A, and for the
/// sub-case where the reduced leading coefficient a1 + j a2 has a1 = a2.
SolutionSet solve_quadratic(const J3& a, const J3& b, const J3& c, double tol = kDefaultTol);

}  // namespace j3
