#pragma once

#include <array>
#include <cmath>
#include <ostream>
#include <random>

#include "j3/core.hpp"
#include "j3/transcend.hpp"

namespace j3 {

inline void PrintTo(const J3& x, std::ostream* os) { *os << "(" << x.u() << ", " << x.v() << ", " << x.w() << ")"; }
inline void PrintTo(J3Class c, std::ostream* os) { *os << to_string(c); }

}  // namespace j3

namespace j3::test {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

inline J3 random_j3(double lo = -10.0, double hi = 10.0) {
  const double u = uniform(lo, hi), v = uniform(lo, hi), w = uniform(lo, hi);
  return {u, v, w};
}

// Product of u + v j + w j^2 as polynomials in j reduced by j^3 = -1.
inline J3 poly_mul(const J3& s, const J3& t) {
  const std::array<double, 3> a{s.u(), s.v(), s.w()};
  const std::array<double, 3> b{t.u(), t.v(), t.w()};
  std::array<double, 3> c{};
  for (int i = 0; i < 3; ++i) {
    for (int k = 0; k < 3; ++k) {
      const int e = i + k;
      c[e % 3] += (e >= 3 ? -1.0 : 1.0) * a[i] * b[k];
    }
  }
  return {c[0], c[1], c[2]};
}

// Leibniz expansion of the 3x3 matrix whose columns are s, j s, j^2 s.
inline double leibniz_det(const J3& s) {
  auto jop = [](const J3& x) { return J3{-x.w(), x.u(), x.v()}; };
  const J3 c0 = s, c1 = jop(s), c2 = jop(jop(s));
  const double m[3][3] = {{c0.u(), c1.u(), c2.u()}, {c0.v(), c1.v(), c2.v()}, {c0.w(), c1.w(), c2.w()}};
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Truncated power series with argument halving: exp(x) = exp(x / 2^m)^(2^m),
// m chosen so |x / 2^m| <= 1/2. Without it a 30-term truncation is far from
// converged at |x| ~ 5 and cancels badly when the altitude is negative.
inline J3 halved_series_exp(const J3& x, std::size_t n_terms) {
  int m = 0;
  while (std::ldexp(modulus(x), -m) > 0.5) ++m;
  J3 y = exp_series(scale(std::ldexp(1.0, -m), x), n_terms);
  for (int i = 0; i < m; ++i) y = mul(y, y);
  return y;
}

inline double dist(const J3& a, const J3& b) { return modulus(sub(a, b)); }

}  // namespace j3::test
