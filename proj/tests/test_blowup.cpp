#include <wfano/blowup.hpp>

#include <gtest/gtest.h>

using namespace wfano;

namespace {
CenterData constant_center(int n, int codim, Rational value) {
  return CenterData{n, codim, [value](int) { return value; }};
}
}  // namespace

TEST(MixedTerm, BelowCodimensionVanishes) {
  const auto c = constant_center(5, 2, 7);
  EXPECT_EQ(mixed_term(c, 1), 0);
  EXPECT_EQ(mixed_term(c, 2), -7);
  const auto c3 = constant_center(5, 3, 7);
  EXPECT_EQ(mixed_term(c3, 2), 0);
  EXPECT_EQ(mixed_term(c3, 3), 7);
}

TEST(MixedTerm, RangeChecked) {
  const auto c = constant_center(4, 2, 1);
  EXPECT_THROW(mixed_term(c, 0), DomainError);
  EXPECT_THROW(mixed_term(c, 5), DomainError);
}

TEST(MixedTerm, CurveCentreTopPower) {
  // s_1(N*) = -1 gives G^n = (-1)^n s_1 = (-1)^{n+1}.
  for (int n = 3; n <= 9; ++n) {
    const auto c = curve_center(n, 1, CurveSegreData{Integer(-1), 0});
    EXPECT_EQ(mixed_term(c, n), sign_power(n + 1));
    for (int k = 1; k <= n - 2; ++k) EXPECT_EQ(mixed_term(c, k), 0);
  }
  EXPECT_THROW(curve_center(2, 1, CurveSegreData{Integer(0), 0}), DomainError);
}

TEST(ExpandPower, ZeroCoefficientKeepsBase) {
  EXPECT_EQ(expand_power(constant_center(6, 2, 11), 123, 0), 123);
}

TEST(ExpandPower, CurveCentreStep) {
  // C' with -K_Z.C' = 1 and N = O^{n-2} + O(-1), c = n-2:
  // the result drops by 2(n-1)(n-2)^{n-1}.
  for (int n = 3; n <= 12; ++n) {
    const auto c = curve_center(n, 1, CurveSegreData{Integer(-1), 0});
    const Rational base = 1000;
    EXPECT_EQ(expand_power(c, base, n - 2), base - Rational(2 * Integer(n - 1) * power(n - 2, n - 1)));
  }
}

TEST(ExpandPower, FlipStep) {
  // Gamma0~ with -K.Gamma0~ = 3-n, N = O(-1)^{n-1}, c = n-3: adds (n-3)^n.
  for (int n = 3; n <= 12; ++n) {
    const auto c = curve_center(n, 3 - n, CurveSegreData{Integer(-(n - 1)), 0});
    EXPECT_EQ(expand_power(c, 0, n - 3), Rational(power(n - 3, n)));
  }
}

TEST(ExpandPower, PointBlowupOfProjectivePlane) {
  // Bl_p P^2: (3H - E)^2 = 8. A point in a surface has codim 2, s_0 = 1,
  // (D|_p)^0 = 1.
  const CenterData point{2, 2, [](int k) -> Rational { return k == 2 ? 1 : 0; }};
  EXPECT_EQ(expand_power(point, 9, 1), 8);
}

TEST(ExpandPower, PointBlowupOfProjectiveSpace) {
  // Bl_p P^3: (4H - 2E)^3 = 64 - 8 = 56.
  const CenterData point{3, 3, [](int k) -> Rational { return k == 3 ? 1 : 0; }};
  EXPECT_EQ(expand_power(point, 64, 2), 56);
}
