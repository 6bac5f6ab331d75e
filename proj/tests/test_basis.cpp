#include <gtest/gtest.h>

#include <cmath>

#include "j3/basis.hpp"
#include "support.hpp"

namespace j3 {
namespace {

using test::dist;
using test::random_j3;

const double kS3 = std::sqrt(3.0);

bool near(const AbgCoords& x, const AbgCoords& y, double tol) {
  return std::abs(x.a - y.a) <= tol && std::abs(x.b - y.b) <= tol && std::abs(x.c - y.c) <= tol;
}

bool near(const DirectSum& x, const DirectSum& y, double tol) {
  return std::abs(x.r - y.r) <= tol && std::abs(x.zx - y.zx) <= tol && std::abs(x.zy - y.zy) <= tol;
}

TEST(Basis, Constants) {
  EXPECT_LT(dist(kAlpha, scale(1.0 / 3, {1, -1, 1})), 1e-16);
  EXPECT_LT(dist(kBeta, scale(1.0 / 3, {2, 1, -1})), 1e-16);
  EXPECT_LT(dist(kGamma, scale(kS3 / 3, {0, 1, 1})), 1e-16);
  auto dot = [](const J3& x, const J3& y) { return x.u() * y.u() + x.v() * y.v() + x.w() * y.w(); };
  EXPECT_LE(std::abs(dot(kAlpha, kBeta)), 1e-15);
  EXPECT_LE(std::abs(dot(kAlpha, kGamma)), 1e-15);
  EXPECT_LE(std::abs(dot(kBeta, kGamma)), 1e-15);
}

TEST(Basis, MultiplicationTable) {
  EXPECT_LE(dist(mul(kAlpha, kAlpha), kAlpha), 1e-15);
  EXPECT_LE(dist(mul(kBeta, kBeta), kBeta), 1e-15);
  EXPECT_LE(dist(mul(kBeta, kGamma), kGamma), 1e-15);
  EXPECT_LE(dist(mul(kGamma, kGamma), negate(kBeta)), 1e-15);
  EXPECT_LE(modulus(mul(kAlpha, kBeta)), 1e-15);
  EXPECT_LE(modulus(mul(kAlpha, kGamma)), 1e-15);
}

TEST(Basis, ToAbgExamples) {
  EXPECT_TRUE(near(to_abg(kOne), {1, 1, 0}, 1e-15));
  EXPECT_TRUE(near(to_abg({0, kS3 / 3, kS3 / 3}), {0, 0, 1}, 1e-15));
  EXPECT_TRUE(near(to_abg({0, 0, 1}), {1, -0.5, kS3 / 2}, 1e-15));
  EXPECT_LE(dist(from_abg({1, 0, 0}), kAlpha), 1e-16);
  EXPECT_LE(dist(from_abg({0, 1, 0}), kBeta), 1e-16);
  EXPECT_LE(dist(from_abg({0, 0, 1}), kGamma), 1e-16);
}

TEST(Basis, Roundtrip) {
  for (int i = 0; i < 10000; ++i) {
    const J3 s = random_j3(-100, 100);
    EXPECT_LE(dist(from_abg(to_abg(s)), s), 1e-13 * modulus(s));
    EXPECT_LE(dist(phi_inv(phi(s)), s), 1e-13 * (1 + modulus(s)));
    const AbgCoords c{test::uniform(-10, 10), test::uniform(-10, 10), test::uniform(-10, 10)};
    EXPECT_NEAR(modulus(from_abg(c)), std::sqrt((c.a * c.a + 2 * c.b * c.b + 2 * c.c * c.c) / 3), 1e-12);
  }
}

TEST(Basis, Phi) {
  EXPECT_TRUE(near(phi(kOne), {1, 1, 0}, 1e-15));
  EXPECT_TRUE(near(phi(kAlpha), {1, 0, 0}, 1e-15));
  EXPECT_TRUE(near(phi(kBeta), {0, 1, 0}, 1e-15));
  EXPECT_TRUE(near(phi(kGamma), {0, 0, 1}, 1e-15));
  EXPECT_LE(dist(phi_inv({1, 1, 0}), kOne), 1e-15);
  EXPECT_LE(dist(phi_inv({0, 0, 1}), kGamma), 1e-15);
  const double x = 1.25, y = -0.5;
  EXPECT_LE(dist(phi_inv({0, x, y}), {2 * x / 3, (x + y * kS3) / 3, (-x + y * kS3) / 3}), 1e-15);
}

TEST(Basis, DirectSumProduct) {
  const DirectSum d{-2.5, 0.75, 3};
  EXPECT_EQ(dsum_mul({1, 1, 0}, d), d);
  EXPECT_TRUE(near(dsum_mul({2, 0, 1}, {3, 0, 1}), {6, -1, 0}, 0));
  EXPECT_TRUE(near(dsum_mul({4, 0, 0}, {0, 1.5, -2}), {0, 0, 0}, 0));
}

TEST(BasisProperties, PhiIsAnAlgebraIsomorphism) {
  for (int i = 0; i < 10000; ++i) {
    const J3 s = random_j3(), t = random_j3();
    const double k = test::uniform(-3, 3);
    const double rel = 1e-11 * (1 + modulus(s) * modulus(t));
    EXPECT_TRUE(near(phi(mul(s, t)), dsum_mul(phi(s), phi(t)), rel));
    const DirectSum lin = phi(add(s, scale(k, t)));
    const DirectSum ps = phi(s), pt = phi(t);
    EXPECT_TRUE(near(lin, {ps.r + k * pt.r, ps.zx + k * pt.zx, ps.zy + k * pt.zy}, 1e-11 * (1 + modulus(s) + 3 * modulus(t))));
    const DirectSum pc = phi(conj(s));
    EXPECT_TRUE(near(pc, {ps.r, ps.zx, -ps.zy}, 1e-13 * (1 + modulus(s))));
  }
}

}  // namespace
}  // namespace j3
