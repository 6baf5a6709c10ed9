#include <wfano/chow.hpp>

#include <gtest/gtest.h>

using namespace wfano;

TEST(AmbientDegree, ProductN1) {
  const AmbientDegree amb(Ambient::product_n1, 4);  // P^3 x P^1
  EXPECT_EQ(ambient_degree(amb, 3, 1), 1);
  EXPECT_EQ(ambient_degree(amb, 4, 0), 0);
  EXPECT_EQ(ambient_degree(amb, 2, 2), 0);
  EXPECT_EQ(ambient_degree(amb, 2, 1), 0);
}

TEST(AmbientDegree, ProductN2AndProjective) {
  const AmbientDegree p2(Ambient::product_n2, 5);  // P^3 x P^2
  EXPECT_EQ(ambient_degree(p2, 3, 2), 1);
  EXPECT_EQ(ambient_degree(p2, 4, 1), 0);
  const AmbientDegree pn(Ambient::projective, 4);
  EXPECT_EQ(ambient_degree(pn, 4, 0), 1);
  EXPECT_EQ(ambient_degree(pn, 3, 0), 0);
}

TEST(AmbientDegree, Errors) {
  const AmbientDegree amb(Ambient::product_n1, 4);
  EXPECT_THROW(ambient_degree(amb, -1, 1), DomainError);
  EXPECT_THROW(ambient_degree(amb, 1, -1), DomainError);
  const AmbientDegree pn(Ambient::projective, 4);
  EXPECT_THROW(ambient_degree(pn, 3, 1), DomainError);
  EXPECT_THROW(AmbientDegree(Ambient::product_n1, 2), DomainError);
  EXPECT_THROW(AmbientDegree(Ambient::product_n2, 2), DomainError);
  EXPECT_THROW(AmbientDegree(Ambient::projective, 3), DomainError);
}

TEST(SurfaceDegree, TableValues) {
  const SurfaceDegreeTable tbl(5, 2, 1);
  EXPECT_EQ(surface_degree(tbl, 3, 0), 3);
  EXPECT_EQ(surface_degree(tbl, 2, 1), 2);
  EXPECT_EQ(surface_degree(tbl, 1, 2), 0);
  EXPECT_EQ(surface_degree(tbl, 0, 3), 0);
}

TEST(SurfaceDegree, WrongDegreeRejected) {
  const SurfaceDegreeTable tbl(5, 2, 1);
  EXPECT_THROW(surface_degree(tbl, 2, 0), DomainError);
  EXPECT_THROW(surface_degree(tbl, 4, 0), DomainError);
  EXPECT_THROW(surface_degree(tbl, -1, 4), DomainError);
}

// S = U.V with U = aH+bL, V = H+L, expanded by hand with L^2 = 0:
// H^i L^j (aH+bL)(H+L) = a H^{i+2} L^j + (a+b) H^{i+1} L^{j+1}.
TEST(SurfaceDegree, AgreesWithAmbientByHand) {
  for (int n = 3; n <= 9; ++n)
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; b <= 4; ++b) {
        const SurfaceDegreeTable tbl(n, a, b);
        const AmbientDegree amb(Ambient::product_n1, n);
        for (int j = 0; j <= 1; ++j) {
          const int i = n - 2 - j;
          const Rational expected = a * ambient_degree(amb, i + 2, j) + (a + b) * ambient_degree(amb, i + 1, j + 1);
          EXPECT_EQ(surface_degree(tbl, i, j), expected) << n << " " << a << " " << b << " " << j;
        }
      }
}

TEST(ChowPoly, TruncatedMultiplication) {
  const auto h = ChowPoly::monomial(3, 1, 1, 0);
  const auto l = ChowPoly::monomial(3, 1, 0, 1);
  EXPECT_TRUE((l * l).is_zero());
  EXPECT_TRUE(h.pow(4).is_zero());
  EXPECT_EQ((h + l).pow(2).coeff(1, 1), 2);
  EXPECT_EQ((h + l).pow(2).coeff(2, 0), 1);
}

TEST(ChowPoly, InverseOfGeometricSeries) {
  const auto one = ChowPoly::constant(4, 1, 1);
  const auto h = ChowPoly::monomial(4, 1, 1, 0);
  const auto inv = (one - h).inverse();
  for (int i = 0; i <= 4; ++i) EXPECT_EQ(inv.coeff(i, 0), 1);
  EXPECT_EQ((one - h) * inv, one);
  EXPECT_THROW(h.inverse(), DomainError);
}

TEST(ChowPoly, HomogeneousParts) {
  const auto p = ChowPoly::linear(3, 1, 2, 5) + ChowPoly::constant(3, 1, 7);
  EXPECT_EQ(p.homogeneous(0), ChowPoly::constant(3, 1, 7));
  EXPECT_EQ(p.homogeneous(1), ChowPoly::linear(3, 1, 2, 5));
  EXPECT_TRUE(p.homogeneous(2).is_zero());
}

TEST(ChowPoly, IntegrationIsLinear) {
  const AmbientDegree amb(Ambient::product_n1, 4);
  const auto x = ChowPoly::monomial(3, 1, 3, 1, 5) + ChowPoly::monomial(3, 1, 2, 1, 9);
  const auto y = ChowPoly::monomial(3, 1, 3, 1, -2);
  EXPECT_EQ(integrate(amb, x), 5);
  EXPECT_EQ(integrate(amb, x * Rational(3) + y), 13);
}

TEST(ChowPoly, AnticanonicalPowerOfProduct) {
  // (nH + 2L)^n = 2 n^n on P^{n-1} x P^1.
  for (int n = 3; n <= 10; ++n) {
    const AmbientDegree amb(Ambient::product_n1, n);
    EXPECT_EQ(integrate(amb, ChowPoly::linear(n - 1, 1, n, 2).pow(n)), Rational(2 * power(n, n)));
  }
}
