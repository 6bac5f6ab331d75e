#pragma once

/**
 * @file matrixrep.hpp
 * @brief 3x3 Toeplitz representation of J3-numbers.
 *
 * u + jv + jjw is represented by
 *
 *   | u  -w  -v |
 *   | v   u  -w |
 *   | w   v   u |
 *
 * and the product becomes the ordinary matrix product. The first column
 * carries (u, v, w). Everything here is an independent route to the results
 * of core.hpp and is used to cross-check them.
 */

#include <array>
#include <cstdint>

#include "j3/basis.hpp"
#include "j3/core.hpp"

namespace j3 {

using Mat3 = std::array<std::array<double, 3>, 3>;

Mat3 matmul(const Mat3& x, const Mat3& y);
Mat3 transpose(const Mat3& m);
Mat3 identity3();
Mat3 matpow(const Mat3& m, std::uint32_t n);
/// Cofactor expansion along the first row.
double determinant(const Mat3& m);

/// A 3x3 matrix that satisfies the Toeplitz pattern above.
class ToeplitzMat {
 public:
  /// Validates the six pattern constraints within tol relative to the
  /// larger of the largest entry and `scale`; throws
  /// MathError(PatternViolation) otherwise.
  static ToeplitzMat from_entries(const Mat3& entries, double tol = 1e-12, double scale = 0.0);

  const Mat3& entries() const { return entries_; }
  double operator()(int row, int col) const { return entries_[row][col]; }

  /// Matrix product; the result is re-validated against the pattern, with
  /// round-off measured against the magnitude of the factors.
  friend ToeplitzMat operator*(const ToeplitzMat& x, const ToeplitzMat& y);

  double max_abs_entry() const;

 private:
  explicit ToeplitzMat(const Mat3& entries) : entries_(entries) {}
  Mat3 entries_;
};

/// The block form diag(a, [[b, -c], [c, b]]) with (a, b, c) the
/// {alpha, beta, gamma} coefficients.
struct BlockDiagMat {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  double det() const { return a * (b * b + c * c); }
  Mat3 entries() const { return {{{a, 0.0, 0.0}, {0.0, b, -c}, {0.0, c, b}}}; }
};

ToeplitzMat to_matrix(const J3& s);

/// Reads (u, v, w) from the first column after checking the pattern.
J3 from_matrix(const Mat3& m, double tol = 1e-12);
J3 from_matrix(const ToeplitzMat& m);

/// mul(s, t) computed as a matrix product.
J3 oracle_mul(const J3& s, const J3& t);

/// Solves T(s) x = (1, 0, 0) by Gaussian elimination with partial pivoting.
/// Throws MathError(Singular) when a pivot falls below 1e-12 times the
/// largest pivot candidate seen.
J3 oracle_inverse(const J3& s);

/// transpose(to_matrix(s)); this equals to_matrix(conj(s)).
Mat3 conj_matrix(const J3& s);

BlockDiagMat to_block_diag(const J3& s);

/// |x - y| / scale, or |x - y| when scale is zero.
double relative_deviation(const J3& x, const J3& y, double scale);

}  // namespace j3
