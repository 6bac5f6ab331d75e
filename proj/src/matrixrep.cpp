#include "j3/matrixrep.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace j3 {

Mat3 matmul(const Mat3& x, const Mat3& y) {
  Mat3 out{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double sum = 0.0;
      for (int k = 0; k < 3; ++k) sum += x[i][k] * y[k][j];
      out[i][j] = sum;
    }
  }
  return out;
}

Mat3 transpose(const Mat3& m) {
  Mat3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i][j] = m[j][i];
  return out;
}

Mat3 identity3() { return {{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}}}; }

Mat3 matpow(const Mat3& m, std::uint32_t n) {
  Mat3 out = identity3();
  for (std::uint32_t i = 0; i < n; ++i) out = matmul(out, m);
  return out;
}

double determinant(const Mat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

ToeplitzMat ToeplitzMat::from_entries(const Mat3& e, double tol, double scale) {
  double largest = 0.0;
  for (const auto& row : e)
    for (double x : row) {
      if (!std::isfinite(x)) throw MathError(ErrorCode::NonFinite, "matrix entry is not finite");
      largest = std::max(largest, std::abs(x));
    }
  const double bound = tol * std::max({largest, scale, 1e-300});
  const std::pair<double, double> checks[] = {
      {e[1][1], e[0][0]}, {e[2][2], e[0][0]},   // diagonal u
      {e[2][1], e[1][0]},                        // v below the diagonal
      {e[0][1], -e[2][0]}, {e[1][2], -e[2][0]},  // -w above the diagonal
      {e[0][2], -e[1][0]},                       // -v in the corner
  };
  for (const auto& [lhs, rhs] : checks) {
    if (std::abs(lhs - rhs) > bound) {
      throw MathError(ErrorCode::PatternViolation, "matrix does not have the J3 Toeplitz pattern");
    }
  }
  return ToeplitzMat(e);
}

double ToeplitzMat::max_abs_entry() const {
  double largest = 0.0;
  for (const auto& row : entries_)
    for (double x : row) largest = std::max(largest, std::abs(x));
  return largest;
}

ToeplitzMat operator*(const ToeplitzMat& x, const ToeplitzMat& y) {
  return ToeplitzMat::from_entries(matmul(x.entries_, y.entries_), 1e-12,
                                   3.0 * x.max_abs_entry() * y.max_abs_entry());
}

ToeplitzMat to_matrix(const J3& s) {
  const double u = s.u(), v = s.v(), w = s.w();
  return ToeplitzMat::from_entries({{{u, -w, -v}, {v, u, -w}, {w, v, u}}});
}

J3 from_matrix(const Mat3& m, double tol) { return from_matrix(ToeplitzMat::from_entries(m, tol)); }

J3 from_matrix(const ToeplitzMat& m) { return {m(0, 0), m(1, 0), m(2, 0)}; }

J3 oracle_mul(const J3& s, const J3& t) { return from_matrix(to_matrix(s) * to_matrix(t)); }

J3 oracle_inverse(const J3& s) {
  Mat3 a = to_matrix(s).entries();
  std::array<double, 3> rhs{1.0, 0.0, 0.0};

  double largest_pivot = 0.0;
  for (int col = 0; col < 3; ++col) {
    int pivot = col;
    for (int row = col + 1; row < 3; ++row)
      if (std::abs(a[row][col]) > std::abs(a[pivot][col])) pivot = row;
    largest_pivot = std::max(largest_pivot, std::abs(a[pivot][col]));
    if (std::abs(a[pivot][col]) <= 1e-12 * largest_pivot || largest_pivot == 0.0) {
      throw MathError(ErrorCode::Singular, "Toeplitz matrix is singular");
    }
    std::swap(a[pivot], a[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (int row = col + 1; row < 3; ++row) {
      const double factor = a[row][col] / a[col][col];
      for (int k = col; k < 3; ++k) a[row][k] -= factor * a[col][k];
      rhs[row] -= factor * rhs[col];
    }
  }

  std::array<double, 3> x{};
  for (int row = 2; row >= 0; --row) {
    double sum = rhs[row];
    for (int k = row + 1; k < 3; ++k) sum -= a[row][k] * x[k];
    x[row] = sum / a[row][row];
  }
  return {x[0], x[1], x[2]};
}

Mat3 conj_matrix(const J3& s) { return transpose(to_matrix(s).entries()); }

BlockDiagMat to_block_diag(const J3& s) {
  const AbgCoords c = to_abg(s);
  return {c.a, c.b, c.c};
}

double relative_deviation(const J3& x, const J3& y, double scale) {
  const double diff = modulus(sub(x, y));
  return scale > 0.0 ? diff / scale : diff;
}

}  // namespace j3
