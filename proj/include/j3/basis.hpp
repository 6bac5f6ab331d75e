#pragma once

/**
 * @file basis.hpp
 * @brief The idempotent basis {alpha, beta, gamma} and the isomorphism
 *        Phi: R^3 -> R (+) C.
 *
 * alpha = (1, -1, 1)/3 spans L, beta = (2, 1, -1)/3 and
 * gamma = (0, 1, 1)/sqrt(3) span M. The products are
 *
 *   alpha*alpha = alpha, beta*beta = beta, beta*gamma = gamma,
 *   gamma*gamma = -beta, alpha*beta = alpha*gamma = 0,
 *
 * so a alpha + b beta + c gamma behaves like the pair (a, b + ic).
 */

#include "j3/core.hpp"

namespace j3 {

inline constexpr double kSqrt3 = 1.7320508075688772935;

inline constexpr J3 kAlpha{1.0 / 3.0, -1.0 / 3.0, 1.0 / 3.0};
inline constexpr J3 kBeta{2.0 / 3.0, 1.0 / 3.0, -1.0 / 3.0};
inline constexpr J3 kGamma{0.0, kSqrt3 / 3.0, kSqrt3 / 3.0};

/// Coefficients of a J3-number in {alpha, beta, gamma}. Deliberately not
/// convertible to J3: the two coordinate systems multiply differently.
struct AbgCoords {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  bool operator==(const AbgCoords&) const = default;
};

/// An element (r, x + iy) of R (+) C.
struct DirectSum {
  double r = 0.0;
  double zx = 0.0;
  double zy = 0.0;

  bool operator==(const DirectSum&) const = default;
};

AbgCoords to_abg(const J3& s);
J3 from_abg(const AbgCoords& c);

DirectSum phi(const J3& s);
J3 phi_inv(const DirectSum& d);

/// (r1, z1) (x) (r2, z2) = (r1 r2, z1 z2).
DirectSum dsum_mul(const DirectSum& p, const DirectSum& q);

}  // namespace j3
