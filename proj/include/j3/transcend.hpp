#pragma once

/**
 * @file transcend.hpp
 * @brief Polar and cylindrical forms, J3-trigonometric functions, Exp, Log.
 *
 * Writing X = s alpha + t beta + theta gamma,
 *
 *   Exp(X) = e^s alpha + e^t cos(theta) beta + e^t sin(theta) gamma,
 *
 * so Exp(theta gamma) traces the unit circle centred at alpha in the plane
 * x - y + z = 1, and Exp(2 pi gamma) = 1. Log inverts Exp on the half-space
 * of positive altitude minus the line L.
 */

#include <cstddef>
#include <numbers>
#include <span>

#include "j3/basis.hpp"
#include "j3/core.hpp"

namespace j3 {

/// Radius about L, azimuth from beta towards gamma, and altitude.
struct CylCoords {
  double r = 0.0;
  double theta = 0.0;  // (-pi, pi]
  double a = 0.0;
};

/// s = p * u_dir with p = |a| alpha + r beta and
/// u_dir = sign(a) alpha + cos(theta) beta + sin(theta) gamma.
struct PolarForm {
  J3 p;
  J3 u_dir;
};

struct TrigTriple {
  double cos0 = 0.0;
  double sin1 = 0.0;
  double sin2 = 0.0;
};

/// s / |s|. Throws MathError(ZeroInput) for s = 0.
J3 direction(const J3& t);

CylCoords to_cyl(const J3& s);
J3 from_cyl(const CylCoords& c);

PolarForm polar_decompose(const J3& s);

/// cos0, sin1, sin2 in closed form.
TrigTriple trig(double x);
/// The defining power series truncated after n_terms terms each.
TrigTriple trig_series(double x, std::size_t n_terms);

/// Throws MathError(Overflow) when e^s or e^t is not representable.
J3 exp(const J3& x);
/// sum_{k < n_terms} x^k / k!.
J3 exp_series(const J3& x, std::size_t n_terms);

/// Principal logarithm, azimuth in (-pi, pi]. Throws MathError(DomainError)
/// when the altitude is not positive or y lies on L.
J3 log(const J3& y);
/// log(y) + 2 pi k gamma.
J3 log_branch(const J3& y, long k);

/// sum_k coeffs[k] x^k by Horner's rule; an empty list gives zero.
J3 poly_eval(std::span<const J3> coeffs, const J3& x);

}  // namespace j3
