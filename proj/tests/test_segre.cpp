#include "oracle.hpp"

#include <wfano/segre.hpp>

#include <gtest/gtest.h>

using namespace wfano;

TEST(Segre, DocumentedValue) {
  const auto s = segre_ci(2, 2, 1);
  EXPECT_EQ(s.p, 7);
  EXPECT_EQ(s.q, 9);
}

TEST(Segre, LowDegrees) {
  EXPECT_EQ(segre_ci(0, 3, 2), (SegreVector{0, 1, 0}));
  // s_1 = u + v = (a+1) h + (b+1) l
  EXPECT_EQ(segre_ci(1, 3, 2), (SegreVector{1, 4, 3}));
}

TEST(Segre, InversionMatchesLiteralSum) {
  // P = 1 + 2 + 4, Q = (0 + 2) + (0 + 2) + (0 + 0) for (a,b) = (2,0)
  const auto s = segre_by_inversion(2, 2, 0);
  EXPECT_EQ(s.p, 7);
  EXPECT_EQ(s.q, 4);
}

TEST(Segre, AgreesWithIndependentExpansion) {
  for (int m = 0; m <= 9; ++m)
    for (int a = 0; a <= 5; ++a)
      for (int b = 0; b <= 5; ++b) {
        const auto [p, q] = oracle::segre_pq(m, a, b);
        const auto s = segre_ci(m, a, b);
        EXPECT_EQ(s.p, Rational(p)) << m << a << b;
        EXPECT_EQ(s.q, Rational(q)) << m << a << b;
        EXPECT_EQ(segre_by_inversion(m, a, b), s);
      }
}

TEST(Segre, RejectsBadArguments) {
  EXPECT_THROW(segre_ci(-1, 1, 1), DomainError);
  EXPECT_THROW(segre_ci(2, -1, 1), DomainError);
  EXPECT_THROW(segre_by_inversion(2, 1, -1), DomainError);
}

TEST(Segre, ConormalIsInverseOfChern) {
  const auto u = ChowPoly::linear(5, 1, 2, 3);
  const auto v = ChowPoly::linear(5, 1, 1, 1);
  const auto one = ChowPoly::constant(5, 1, 1);
  EXPECT_EQ(conormal_segre(u, v) * ((one - u) * (one - v)), one);
}

TEST(Segre, CurveNormalDegree) {
  // A P^1 fibre of P^{n-1} x P^1 has trivial normal bundle.
  EXPECT_EQ(normal_degree(2, 0), 0);
  // A line in P^4: N = O(1)^3.
  EXPECT_EQ(normal_degree(5, 0), 3);
  // A plane cubic (genus 1) in a P^2 fibre: -K.C = 9.
  EXPECT_EQ(normal_degree(9, 1), 9);
  // s_1(N*) = -c_1(N*) = deg N.
  EXPECT_EQ(curve_s1(CurveSegreData{Integer(-3), 0}), -3);
}

TEST(Segre, InversionFirstDegree) {
  // u + v = 3h + l for (a,b) = (2,0)
  const auto s = segre_by_inversion(1, 2, 0);
  EXPECT_EQ(s.p, 3);
  EXPECT_EQ(s.q, 1);
  EXPECT_EQ(segre_by_inversion(0, 4, 4), (SegreVector{0, 1, 0}));
}

TEST(Segre, UnitDegreeClosedForm) {
  for (int m = 0; m <= 10; ++m)
    for (int b = 0; b <= 6; ++b) {
      const auto s = segre_ci(m, 1, b);
      EXPECT_EQ(s.p, m + 1);
      EXPECT_EQ(s.q, ratio(Integer(b + 1) * m * (m + 1), 2));
    }
}

TEST(Segre, ZeroDegreeEdge) {
  // a = 0: P(m) = 1 and only i = 0, 1 contribute to Q.
  for (int m = 1; m <= 6; ++m) {
    const auto s = segre_ci(m, 0, 1);
    EXPECT_EQ(s.p, 1);
    EXPECT_EQ(s.q, m + 1);
  }
}
