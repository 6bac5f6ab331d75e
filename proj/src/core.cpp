#include "j3/core.hpp"

#include <algorithm>
#include <cmath>

namespace j3 {

J3 add(const J3& a, const J3& b) { return {a.u() + b.u(), a.v() + b.v(), a.w() + b.w()}; }

J3 sub(const J3& a, const J3& b) { return {a.u() - b.u(), a.v() - b.v(), a.w() - b.w()}; }

J3 scale(double k, const J3& a) { return {k * a.u(), k * a.v(), k * a.w()}; }

J3 negate(const J3& a) { return {-a.u(), -a.v(), -a.w()}; }

J3 mul(const J3& t, const J3& s) {
  const double a = t.u(), b = t.v(), c = t.w();
  const double u = s.u(), v = s.v(), w = s.w();
  // Pair the cross terms so that swapping t and s swaps the summands of each
  // two-term sum only; floating-point addition is commutative, so the result
  // is bit-identical in either order.
  return {a * u - (b * w + c * v),
          (a * v + b * u) - c * w,
          (a * w + c * u) + b * v};
}

J3 apply_j(const J3& s) { return {-s.w(), s.u(), s.v()}; }

double modulus(const J3& s) { return std::hypot(s.u(), s.v(), s.w()); }

double altitude(const J3& s) { return s.u() - s.v() + s.w(); }

double det(const J3& s) {
  const double u = s.u(), v = s.v(), w = s.w();
  return u * u * u - v * v * v + w * w * w + 3.0 * u * v * w;
}

double cone_form(const J3& s) { return s.u() * s.v() - s.u() * s.w() + s.v() * s.w(); }

J3 conj(const J3& s) { return {s.u(), -s.w(), -s.v()}; }

J3Class classify(const J3& s, double tol) {
  if (!(tol >= 0.0)) {
    throw MathError(ErrorCode::InvalidArgument, "classification tolerance must be >= 0");
  }
  const double norm = modulus(s);
  if (norm <= tol) return J3Class::Zero;

  const double u = s.u(), v = s.v(), w = s.w();
  const double m_residual = std::abs(u - v + w);
  const double l_residual_sq = (u + v) * (u + v) + (u - w) * (u - w) + (v + w) * (v + w);

  const bool in_m = m_residual <= tol * norm;
  const bool in_l = l_residual_sq <= tol * tol * norm * norm;
  if (in_m && in_l) {
    return m_residual <= std::sqrt(l_residual_sq) ? J3Class::ZeroDivisorM : J3Class::ZeroDivisorL;
  }
  if (in_m) return J3Class::ZeroDivisorM;
  if (in_l) return J3Class::ZeroDivisorL;
  return J3Class::Invertible;
}

J3 inverse(const J3& s, double tol) {
  const J3Class cls = classify(s, tol);
  if (cls != J3Class::Invertible) {
    throw MathError(ErrorCode::NotInvertible,
                    "not invertible: " + std::string(to_string(cls)));
  }
  const double u = s.u(), v = s.v(), w = s.w();
  const double delta = det(s);
  return {(u * u + v * w) / delta, (-w * w - u * v) / delta, (v * v - u * w) / delta};
}

J3 square(const J3& s) {
  const double u = s.u(), v = s.v(), w = s.w();
  return {u * u - 2.0 * v * w, 2.0 * u * v - w * w, v * v + 2.0 * u * w};
}

J3 pow(const J3& s, std::uint32_t n) {
  J3 result = kOne;
  J3 base = s;
  while (n > 0) {
    if (n & 1u) result = mul(result, base);
    n >>= 1;
    if (n > 0) base = square(base);
  }
  return result;
}

double max_abs_diff(const J3& a, const J3& b) {
  return std::max({std::abs(a.u() - b.u()), std::abs(a.v() - b.v()), std::abs(a.w() - b.w())});
}

}  // namespace j3
