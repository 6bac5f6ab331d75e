#include "j3/transcend.hpp"

#include <cmath>

namespace j3 {
namespace {

constexpr double kPi = std::numbers::pi;

double wrap_angle(double theta) {
  // atan2 returns [-pi, pi]; fold -pi onto pi.
  return theta == -kPi ? kPi : theta;
}

}  // namespace

J3 direction(const J3& t) {
  const double norm = modulus(t);
  if (norm == 0.0) throw MathError(ErrorCode::ZeroInput, "direction of zero is undefined");
  return {t.u() / norm, t.v() / norm, t.w() / norm};
}

CylCoords to_cyl(const J3& s) {
  const AbgCoords c = to_abg(s);
  const double r = std::hypot(c.b, c.c);
  const double theta = r == 0.0 ? 0.0 : wrap_angle(std::atan2(c.c, c.b));
  return {r, theta, c.a};
}

J3 from_cyl(const CylCoords& c) {
  return from_abg({c.a, c.r * std::cos(c.theta), c.r * std::sin(c.theta)});
}

PolarForm polar_decompose(const J3& s) {
  const CylCoords c = to_cyl(s);
  const double sign = c.a < 0.0 ? -1.0 : 1.0;
  return {from_abg({std::abs(c.a), c.r, 0.0}),
          from_abg({sign, std::cos(c.theta), std::sin(c.theta)})};
}

TrigTriple trig(double x) {
  // Roots of y''' + y = 0: e^{-x} and e^{x/2} (cos, sin)(sqrt(3) x / 2).
  const double h = 0.5 * kSqrt3 * x;
  const double decay = std::exp(-x);
  const double grow = std::exp(0.5 * x);
  const double c = std::cos(h), s = std::sin(h);
  return {(decay + 2.0 * grow * c) / 3.0,
          (-decay + grow * (c + kSqrt3 * s)) / 3.0,
          (decay - grow * (c - kSqrt3 * s)) / 3.0};
}

TrigTriple trig_series(double x, std::size_t n_terms) {
  TrigTriple out;
  // term_k = x^k / k!, with the sign flipping every three powers.
  double term = 1.0;
  for (std::size_t k = 0; k < 3 * n_terms; ++k) {
    if (k > 0) term *= x / static_cast<double>(k);
    const double signed_term = ((k / 3) % 2 == 0) ? term : -term;
    switch (k % 3) {
      case 0: out.cos0 += signed_term; break;
      case 1: out.sin1 += signed_term; break;
      default: out.sin2 += signed_term; break;
    }
  }
  return out;
}

J3 exp(const J3& x) {
  const AbgCoords c = to_abg(x);
  const double es = std::exp(c.a);
  const double et = std::exp(c.b);
  if (!std::isfinite(es) || !std::isfinite(et)) {
    throw MathError(ErrorCode::Overflow, "exponential overflows");
  }
  return from_abg({es, et * std::cos(c.c), et * std::sin(c.c)});
}

J3 exp_series(const J3& x, std::size_t n_terms) {
  J3 sum = kZero;
  J3 term = kOne;
  for (std::size_t k = 0; k < n_terms; ++k) {
    if (k > 0) term = scale(1.0 / static_cast<double>(k), mul(term, x));
    sum = add(sum, term);
  }
  return sum;
}

J3 log(const J3& y) {
  const CylCoords c = to_cyl(y);
  if (!(c.a > 0.0)) {
    throw MathError(ErrorCode::DomainError, "log requires positive altitude");
  }
  if (c.r == 0.0) {
    throw MathError(ErrorCode::DomainError, "log is undefined on the line L");
  }
  return from_abg({std::log(c.a), std::log(c.r), c.theta});
}

J3 log_branch(const J3& y, long k) {
  return add(log(y), scale(2.0 * kPi * static_cast<double>(k), kGamma));
}

J3 poly_eval(std::span<const J3> coeffs, const J3& x) {
  J3 acc = kZero;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = add(mul(acc, x), *it);
  return acc;
}

}  // namespace j3
