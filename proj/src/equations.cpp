#include "j3/equations.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "j3/basis.hpp"

namespace j3 {
namespace {

// Direction of the line L.
constexpr J3 kLineL{1.0, -1.0, 1.0};

void push_distinct(std::vector<J3>& xs, const J3& x, double threshold) {
  for (const J3& y : xs)
    if (max_abs_diff(x, y) <= threshold) return;
  xs.push_back(x);
}

SolutionSet from_roots(std::vector<J3> roots) {
  if (roots.empty()) return SolutionSet::empty();
  if (roots.size() == 1) return SolutionSet::unique(roots.front());
  return SolutionSet::finite(std::move(roots));
}

// Principal square root: non-negative real part, and a non-negative
// imaginary part when the real part vanishes.
std::complex<double> principal_sqrt(double x, double y) {
  std::complex<double> z = std::sqrt(std::complex<double>(x, y));
  if (z.real() == 0.0 && z.imag() < 0.0) z = -z;
  if (z.real() < 0.0) z = -z;
  return z;
}

J3 project_onto_m(const J3& x) { return sub(x, scale(altitude(x), kAlpha)); }

}  // namespace

J3 particular_solution_l(const J3& s, const J3& t) {
  return scale(altitude(t) / (3.0 * altitude(s)), kLineL);
}

J3 particular_solution_m(const J3& s, const J3& t) {
  const double u = s.u(), v = s.w();
  const double a = t.u(), b = t.w();
  const double den = 3.0 * (u * u + u * v + v * v);
  const double c = (u * (2.0 * a + b) + v * (a + 2.0 * b)) / den;
  const double d = -(u * (a - b) + v * (2.0 * a + b)) / den;
  return {c, c + d, d};
}

std::string_view to_string(SolutionKind kind) {
  switch (kind) {
    case SolutionKind::Empty: return "empty";
    case SolutionKind::Unique: return "unique";
    case SolutionKind::Finite: return "finite";
    case SolutionKind::Line: return "line";
    case SolutionKind::Plane: return "plane";
  }
  return "unknown";
}

SolutionSet SolutionSet::empty() { return {}; }

SolutionSet SolutionSet::unique(const J3& x) {
  SolutionSet s;
  s.kind = SolutionKind::Unique;
  s.values = {x};
  return s;
}

SolutionSet SolutionSet::finite(std::vector<J3> xs) {
  SolutionSet s;
  s.kind = SolutionKind::Finite;
  s.values = std::move(xs);
  return s;
}

SolutionSet SolutionSet::line(const J3& base, const J3& direction) {
  SolutionSet s;
  s.kind = SolutionKind::Line;
  s.values = {base};
  s.directions = {direction};
  return s;
}

SolutionSet SolutionSet::plane(const J3& base, const J3& d1, const J3& d2) {
  SolutionSet s;
  s.kind = SolutionKind::Plane;
  s.values = {base};
  s.directions = {d1, d2};
  return s;
}

J3 discriminant(const J3& p, const J3& q) { return sub(square(p), scale(4.0, q)); }

J3 discriminant(const J3& a, const J3& b, const J3& c) {
  return sub(square(b), scale(4.0, mul(a, c)));
}

double linear_residual(const J3& s, const J3& t, const J3& x) { return modulus(sub(mul(s, x), t)); }

double quadratic_residual(const J3& a, const J3& b, const J3& c, const J3& x) {
  return modulus(add(mul(add(mul(a, x), b), x), c));
}

std::vector<J3> sample_points(const SolutionSet& set) {
  static constexpr double kSamples[] = {-2.0, -1.0, 0.0, 1.0, 2.0};
  std::vector<J3> points;
  for (const J3& base : set.values) {
    std::vector<J3> from_base;
    switch (set.kind) {
      case SolutionKind::Line:
        for (double t : kSamples) from_base.push_back(add(base, scale(t, set.directions[0])));
        break;
      case SolutionKind::Plane:
        for (double t1 : kSamples)
          for (double t2 : kSamples)
            from_base.push_back(
                add(base, add(scale(t1, set.directions[0]), scale(t2, set.directions[1]))));
        break;
      default:
        from_base.push_back(base);
    }
    for (const J3& x : from_base) {
      if (set.generator) {
        for (double t : kSamples) points.push_back(add(x, scale(t, *set.generator)));
      } else {
        points.push_back(x);
      }
    }
  }
  return points;
}

bool verify_linear(const J3& s, const J3& t, const SolutionSet& set) {
  const double bound = 1e-8 * (1.0 + modulus(s) + modulus(t));
  for (const J3& x : sample_points(set))
    if (!(linear_residual(s, t, x) <= bound)) return false;
  return true;
}

bool verify_quadratic(const J3& a, const J3& b, const J3& c, const SolutionSet& set) {
  const double bound = 1e-8 * (1.0 + modulus(a) + modulus(b) + modulus(c));
  for (const J3& x : sample_points(set))
    if (!(quadratic_residual(a, b, c, x) <= bound)) return false;
  return true;
}

SolutionSet solve_linear(const J3& s, const J3& t, double tol) {
  const J3Class cs = classify(s, tol);
  if (cs == J3Class::Zero) {
    throw MathError(ErrorCode::ZeroLHS, "left-hand side of S X = T is zero");
  }
  if (cs == J3Class::Invertible) return SolutionSet::unique(mul(inverse(s, tol), t));

  const J3Class ct = classify(t, tol);
  if (cs == J3Class::ZeroDivisorL) {
    switch (ct) {
      case J3Class::Zero: return SolutionSet::plane(kZero, kBeta, kGamma);
      case J3Class::ZeroDivisorL: return SolutionSet::plane(particular_solution_l(s, t), kBeta, kGamma);
      default: return SolutionSet::empty();
    }
  }
  switch (ct) {
    case J3Class::Zero: return SolutionSet::line(kZero, kLineL);
    case J3Class::ZeroDivisorM: return SolutionSet::line(particular_solution_m(s, t), kLineL);
    default: return SolutionSet::empty();
  }
}

SolutionSet sqrt_real(double r) {
  if (!std::isfinite(r)) throw MathError(ErrorCode::NonFinite, "sqrt argument must be finite");
  if (r < 0.0) return SolutionSet::empty();
  if (r == 0.0) return SolutionSet::unique(kZero);
  const double root = std::sqrt(r);
  const J3 mixed{root / 3.0, 2.0 * root / 3.0, -2.0 * root / 3.0};
  return SolutionSet::finite({{root, 0.0, 0.0}, {-root, 0.0, 0.0}, mixed, negate(mixed)});
}

std::vector<J3> idempotents() { return {kZero, kOne, kAlpha, kBeta}; }

SolutionSet solve_monic_quadratic(const J3& p, const J3& q, double tol) {
  const J3 d = discriminant(p, q);
  const double coeff_scale = std::max({1.0, modulus(p) * modulus(p), 4.0 * modulus(q)});
  const J3 minus_p = negate(p);
  if (modulus(d) <= tol * coeff_scale) return SolutionSet::unique(scale(0.5, minus_p));

  // (2X + P)^2 = D, solved in {alpha, beta, gamma}: the alpha part is a real
  // square root and the (beta, gamma) part a complex one.
  const AbgCoords dc = to_abg(d);
  std::vector<double> alpha_parts;
  std::vector<std::complex<double>> m_parts;
  switch (classify(d, tol)) {
    case J3Class::ZeroDivisorM: {
      alpha_parts = {0.0};
      const auto z = principal_sqrt(dc.b, dc.c);
      m_parts = {z, -z};
      break;
    }
    case J3Class::ZeroDivisorL:
      if (dc.a <= 0.0) return SolutionSet::empty();
      alpha_parts = {-std::sqrt(dc.a), std::sqrt(dc.a)};
      m_parts = {0.0};
      break;
    case J3Class::Invertible: {
      if (dc.a <= 0.0) return SolutionSet::empty();
      alpha_parts = {-std::sqrt(dc.a), std::sqrt(dc.a)};
      const auto z = principal_sqrt(dc.b, dc.c);
      m_parts = {z, -z};
      break;
    }
    case J3Class::Zero:
      return SolutionSet::unique(scale(0.5, minus_p));
  }

  const double threshold = 1e-9 * coeff_scale;
  std::vector<J3> roots;
  for (const auto& z : m_parts)
    for (double a : alpha_parts) {
      const J3 w = from_abg({a, z.real(), z.imag()});
      push_distinct(roots, scale(0.5, add(w, minus_p)), threshold);
    }
  return from_roots(std::move(roots));
}

SolutionSet solve_quadratic(const J3& a, const J3& b, const J3& c, double tol) {
  const J3Class ca = classify(a, tol);
  if (ca == J3Class::Zero) throw MathError(ErrorCode::ZeroLHS, "leading coefficient is zero");
  if (ca == J3Class::Invertible) {
    const J3 ai = inverse(a, tol);
    return solve_monic_quadratic(mul(ai, b), mul(ai, c), tol);
  }

  const J3Class cb = classify(b, tol);
  if (ca != J3Class::ZeroDivisorM || !(cb == J3Class::ZeroDivisorM || cb == J3Class::Zero)) {
    throw MathError(ErrorCode::Unsupported,
                    "zero-divisor leading coefficient is only handled when A and B lie in M");
  }

  // (A X + B) X lies in M for every X, so only the M-part of X matters and
  // the L-part is free.
  const double threshold = 1e-9 * std::max({1.0, modulus(a), modulus(b), modulus(c)});
  std::vector<J3> reps;
  const J3Class cc = classify(c, tol);
  if (cc == J3Class::Invertible || cc == J3Class::ZeroDivisorL) return SolutionSet::empty();

  if (cc == J3Class::Zero) {
    // X (A X + B) = 0: X in L, or A X = -B.
    reps.push_back(kZero);
    if (cb != J3Class::Zero) push_distinct(reps, particular_solution_m(a, negate(b)), threshold);
  } else {
    // A = (1 + j)(a1 + j a2) and likewise for B, C.
    const double a1 = a.u(), a2 = a.w();
    if (std::abs(a1 - a2) <= tol * modulus(a)) {
      throw MathError(ErrorCode::Unsupported,
                      "reduced leading coefficient a1 + j a2 with a1 = a2 is not handled");
    }
    const J3 a_red{a1, a2, 0.0};
    const J3 b_red{b.u(), b.w(), 0.0};
    const J3 c_red{c.u(), c.w(), 0.0};
    // A' X^2 + B' X + C' may equal any element of L. Choosing the element
    // with the same altitude as C' puts Q'' in M, which keeps the reduced
    // discriminant's altitude non-negative.
    const J3 l_shift = scale(altitude(c_red) / 3.0, kLineL);
    const J3 ai = inverse(a_red, tol);
    const SolutionSet reduced =
        solve_monic_quadratic(mul(ai, b_red), mul(ai, sub(c_red, l_shift)), tol);
    for (const J3& x : reduced.values) push_distinct(reps, project_onto_m(x), threshold);
  }

  SolutionSet set = reps.size() == 1 ? SolutionSet::unique(reps[0]) : SolutionSet::finite(reps);
  set.generator = kLineL;
  return set;
}

}  // namespace j3
