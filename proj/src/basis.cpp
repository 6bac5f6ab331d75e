#include "j3/basis.hpp"

namespace j3 {

AbgCoords to_abg(const J3& s) {
  const double u = s.u(), v = s.v(), w = s.w();
  return {u - v + w, 0.5 * (2.0 * u + v - w), 0.5 * kSqrt3 * (v + w)};
}

J3 from_abg(const AbgCoords& c) {
  const double root = c.c * kSqrt3;
  return {(c.a + 2.0 * c.b) / 3.0, (-c.a + c.b + root) / 3.0, (c.a - c.b + root) / 3.0};
}

DirectSum phi(const J3& s) {
  const AbgCoords c = to_abg(s);
  return {c.a, c.b, c.c};
}

J3 phi_inv(const DirectSum& d) { return from_abg({d.r, d.zx, d.zy}); }

DirectSum dsum_mul(const DirectSum& p, const DirectSum& q) {
  return {p.r * q.r, p.zx * q.zx - p.zy * q.zy, p.zx * q.zy + p.zy * q.zx};
}

}  // namespace j3
