#pragma once

/**
 * @file core.hpp
 * @brief J3-numbers u + jv + jjw and their commutative product.
 *
 * The generator j acts on R^3 as (x, y, z) -> (-z, x, y), so j^3 = -1.
 * Extending that rule bilinearly gives the product
 *
 *   (a + jb + jjc) * (u + jv + jjw)
 *       = (au - bw - cv) + j(av + bu - cw) + jj(aw + bv + cu),
 *
 * which is commutative, associative and unital. The algebra has zero
 * divisors: the line L = {x = -y = z} and the plane M = {x - y + z = 0}
 * are ideals with L * M = 0.
 */

#include <cstdint>
#include <string_view>

#include "j3/error.hpp"

namespace j3 {

/// Default relative tolerance for classification and solvers.
inline constexpr double kDefaultTol = 1e-9;

namespace detail {
constexpr bool is_finite(double x) { return x - x == 0.0; }
}  // namespace detail

class J3 {
 public:
  constexpr J3() = default;

  /// Throws MathError(NonFinite) when any component is NaN or infinite.
  constexpr J3(double u, double v, double w) : u_(u), v_(v), w_(w) {
    if (!detail::is_finite(u) || !detail::is_finite(v) || !detail::is_finite(w)) {
      throw MathError(ErrorCode::NonFinite, "J3 components must be finite");
    }
  }

  constexpr double u() const { return u_; }
  constexpr double v() const { return v_; }
  constexpr double w() const { return w_; }

  /// Exact componentwise equality.
  constexpr bool operator==(const J3&) const = default;

 private:
  double u_ = 0.0;
  double v_ = 0.0;
  double w_ = 0.0;
};

inline constexpr J3 kZero{0.0, 0.0, 0.0};
inline constexpr J3 kOne{1.0, 0.0, 0.0};
inline constexpr J3 kJ{0.0, 1.0, 0.0};

enum class J3Class { Zero, Invertible, ZeroDivisorL, ZeroDivisorM };

constexpr std::string_view to_string(J3Class c) {
  switch (c) {
    case J3Class::Zero: return "Zero";
    case J3Class::Invertible: return "Invertible";
    case J3Class::ZeroDivisorL: return "ZeroDivisorL";
    case J3Class::ZeroDivisorM: return "ZeroDivisorM";
  }
  return "Unknown";
}

J3 add(const J3& a, const J3& b);
J3 sub(const J3& a, const J3& b);
J3 scale(double k, const J3& a);
J3 negate(const J3& a);

/// The product; nine multiplies, symmetric in its arguments.
J3 mul(const J3& t, const J3& s);

inline J3 operator+(const J3& a, const J3& b) { return add(a, b); }
inline J3 operator-(const J3& a, const J3& b) { return sub(a, b); }
inline J3 operator-(const J3& a) { return negate(a); }
inline J3 operator*(const J3& a, const J3& b) { return mul(a, b); }
inline J3 operator*(double k, const J3& a) { return scale(k, a); }
inline J3 operator*(const J3& a, double k) { return scale(k, a); }

/// (u, v, w) -> (-w, u, v); identical to mul(kJ, s).
J3 apply_j(const J3& s);

/// Euclidean norm.
double modulus(const J3& s);

/// u - v + w. Multiplicative: altitude(s * t) = altitude(s) * altitude(t).
double altitude(const J3& s);

/// u^3 - v^3 + w^3 + 3uvw, the determinant of the Toeplitz matrix of s.
double det(const J3& s);

/// uv - uw + vw. |s * t|^2 = |s|^2 |t|^2 + 2 cone_form(s) cone_form(t).
double cone_form(const J3& s);

/// (u, v, w) -> (u, -w, -v). Reflection through the plane y + z = 0.
J3 conj(const J3& s);

/// Classifies s as zero, invertible, or a zero divisor in L or M.
///
/// |s| <= tol gives Zero. Otherwise the subspace residuals are measured
/// relative to |s|: s is in M when |u - v + w| <= tol |s|, and in L when
/// (u+v)^2 + (u-w)^2 + (v+w)^2 <= tol^2 |s|^2. If both pass, the smaller
/// residual wins.
J3Class classify(const J3& s, double tol = kDefaultTol);

/// Throws MathError(NotInvertible) unless classify(s, tol) is Invertible.
J3 inverse(const J3& s, double tol = kDefaultTol);

J3 square(const J3& s);

/// s^n by repeated squaring; pow(s, 0) is kOne.
J3 pow(const J3& s, std::uint32_t n);

/// Largest componentwise absolute difference.
double max_abs_diff(const J3& a, const J3& b);

inline bool approx_equal(const J3& a, const J3& b, double tol) {
  return max_abs_diff(a, b) <= tol;
}

}  // namespace j3
