#include "oracle.hpp"

#include <wfano/anticanonical.hpp>

#include <gtest/gtest.h>

using namespace wfano;

namespace {
Rational Q(const oracle::Q& q) { return q; }
}  // namespace

TEST(Sums, UnitDegreeClosedForms) {
  for (int n = 2; n <= 12; ++n)
    for (int b = 0; b <= 4; ++b) {
      const auto s = sums_closed(n, 1, b);
      const Integer nn = power(n, n);
      const Integer n1 = power(n - 1, n - 1);
      EXPECT_EQ(s.I, Rational(nn - (2 * n - 1) * n1));
      EXPECT_EQ(s.Iprime, Rational(n * n1));
      EXPECT_EQ(s.J, ratio(b + 1, 2) * Rational((5 * n - 2) * n1 - 2 * nn));
    }
  EXPECT_EQ(sums_closed(3, 1, 0).I, 7);
}

TEST(Sums, DirectSmallCase) {
  // n = 3: k = 2, 3 with P(0) = 1, P(1) = a+1, Q(0) = 0, Q(1) = b+1.
  // I = 3*3 - (a+1) = 6, I' = 2*9 - 3(a+1) = 9, J = -(b+1) = -2.
  EXPECT_EQ(sums_direct(3, 2, 1), (SumTriple{6, 9, -2}));
}

TEST(Sums, ClosedMatchesDirect) {
  for (int n = 2; n <= 10; ++n)
    for (int a = 1; a <= 5; ++a)
      for (int b = 0; b <= 5; ++b) EXPECT_EQ(sums_closed(n, a, b), sums_direct(n, a, b)) << n << a << b;
}

TEST(Sums, Errors) {
  EXPECT_THROW(sums_direct(1, 1, 1), DomainError);
  EXPECT_THROW(sums_closed(4, 0, 1), DomainError);
  EXPECT_THROW(sums_closed(4, 1, -1), DomainError);
}

TEST(Closed, Anchors) {
  EXPECT_EQ(kx_selfint_closed(4, 15, 0), -285);
  EXPECT_EQ(kx_selfint_closed(4, 15, 1), -591);
  EXPECT_EQ(kx_selfint_closed(5, 15, 0), 1344);
  EXPECT_EQ(kx_selfint_closed(5, 15, 1), 4400);
  EXPECT_EQ(kx_selfint_closed(3, 3, 2), 16);
  EXPECT_EQ(kx_selfint_closed(4, 1, 1), 277);
  EXPECT_EQ(kx_selfint_closed(3, 0, 1), 42);
  EXPECT_EQ(kx_selfint_closed(4, 0, 1), 384);
}

TEST(Closed, RejectsDomain) {
  EXPECT_THROW(kx_selfint_closed(4, 0, 0), DomainError);
  EXPECT_THROW(kx_selfint_closed(2, 1, 1), DomainError);
  EXPECT_THROW(kx_selfint_p2family(4, 0), DomainError);
  EXPECT_THROW(kx_selfint_case01(2), DomainError);
}

TEST(Closed, Case01Specialisation) {
  for (int n = 3; n <= 12; ++n) {
    const Rational expected(2 * power(n, n) - power(n - 1, n) - 2 * Integer(n - 1) * power(n - 2, n - 1) +
                           power(n - 3, n));
    EXPECT_EQ(kx_selfint_case01(n), expected);
    EXPECT_EQ(kx_selfint_closed(n, 0, 1), expected);
  }
}

TEST(Closed, P2Family) {
  EXPECT_EQ(kx_selfint_p2family(3, 3), 32);
  EXPECT_EQ(kx_selfint_p2family(4, 1), 369);
  EXPECT_EQ(kx_selfint_p2family(5, 1), 4342);
}

TEST(Pipeline, MatchesClosedForm) {
  for (int n = 3; n <= 9; ++n) {
    EXPECT_EQ(kx_selfint_pipeline(Scenario::main(n, 0, 1)), kx_selfint_closed(n, 0, 1));
    for (int a = 1; a <= 6; ++a)
      for (int b = 0; b <= 6; ++b)
        EXPECT_EQ(kx_selfint_pipeline(Scenario::main(n, a, b)), kx_selfint_closed(n, a, b)) << n << a << b;
    for (int d = 1; d <= 4; ++d) EXPECT_EQ(kx_selfint_pipeline(Scenario::p2(n, d)), kx_selfint_p2family(n, d));
  }
}

TEST(Pipeline, StepValues) {
  // Step 1 against the sum formula, Step 2 and Step 3 against their corrections.
  for (int n = 3; n <= 8; ++n)
    for (int a = 1; a <= 4; ++a)
      for (int b = 0; b <= 3; ++b) {
        const auto st = pipeline_stages(Scenario::main(n, a, b));
        EXPECT_EQ(st.ky, Rational(2 * power(n, n)));
        EXPECT_EQ(st.kz, kz_selfint_from_sums(n, a, b, sums_direct(n, a, b)));
        EXPECT_EQ(st.kz_tilde, st.kz - Rational(2 * Integer(n - 1) * power(n - 2, n - 1)));
        EXPECT_EQ(st.kx, st.kz_tilde + Rational(power(n - 3, n)));
      }
}

TEST(Pipeline, SurfaceTableMatchesAmbientRing) {
  for (int n = 3; n <= 8; ++n)
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; b <= 4; ++b) {
        if (a == 0 && b != 1) continue;
        const auto table = main_surface_center(n, a, b);
        const auto ring = ci_surface_center(ambient_center(Scenario::main(n, a, b)));
        for (int k = 2; k <= n; ++k) EXPECT_EQ(table.restricted_power(k), ring.restricted_power(k));
      }
}

TEST(Pipeline, FlipsAddNothingInDimensionThree) {
  for (int a = 1; a <= 4; ++a) {
    const auto st = pipeline_stages(Scenario::main(3, a, 1));
    EXPECT_EQ(st.kx, st.kz_tilde);
  }
}

TEST(Oracle, DirectRouteMainFamily) {
  for (int n = 3; n <= 8; ++n)
    for (int a = 0; a <= 5; ++a)
      for (int b = 0; b <= 5; ++b) {
        if (a == 0 && b != 1) continue;
        EXPECT_EQ(Q(oracle::direct_route_selfint(oracle::main_family_input(n, a, b))), kx_selfint_closed(n, a, b))
            << n << a << b;
      }
}

TEST(Oracle, CurveBlowupOfCase01) {
  // (-K_X)^n = 2n(n^{n-1} - (n-2)^{n-1}) for the fibre blow-up.
  for (int n = 3; n <= 10; ++n)
    EXPECT_EQ(Q(oracle::curve_blowup_selfint(oracle::main_family_input(n, 0, 1))),
              Rational(2 * Integer(n) * (power(n, n - 1) - power(n - 2, n - 1))));
}

TEST(Oracle, DirectRouteP2Family) {
  for (int n = 3; n <= 8; ++n)
    for (int d = 1; d <= 5; ++d)
      EXPECT_EQ(Q(oracle::direct_route_selfint(oracle::p2_family_input(n, d))), kx_selfint_p2family(n, d));
}

TEST(Oracle, DirectRouteProjectiveExamples) {
  for (int n = 4; n <= 8; ++n) {
    EXPECT_EQ(Q(oracle::direct_route_selfint(oracle::projective_input(n, 1, 1))),
              kx_selfint_pipeline(Scenario::pn(Family::pn_ex1, n)));
    EXPECT_EQ(Q(oracle::direct_route_selfint(oracle::projective_input(n, 1, 1, 2))),
              kx_selfint_pipeline(Scenario::pn(Family::pn_ex2, n, 1)));
    EXPECT_EQ(Q(oracle::direct_route_selfint(oracle::projective_input(n, 1, 2, 2))),
              kx_selfint_pipeline(Scenario::pn(Family::pn_ex2, n, 2)));
    EXPECT_EQ(Q(oracle::direct_route_selfint(oracle::projective_input(n, 2, 2))),
              kx_selfint_pipeline(Scenario::pn(Family::pn_ex3, n)));
  }
}

TEST(ConicExample, Intermediates) {
  // P^4, plane S, conic C with #(C.S) = 2.
  const auto st = pipeline_stages(Scenario::pn(Family::pn_ex3, 4));
  EXPECT_EQ(st.ky, 625);
  EXPECT_EQ(st.kz, 512);
  EXPECT_EQ(st.kz_tilde, 352);
  EXPECT_EQ(st.kx, 354);  // each of the two flips adds (n-3)^n = 1
  const auto in = oracle::projective_input(4, 2, 2);
  EXPECT_EQ(Q(oracle::curve_blowup_selfint(in)), 433);
  EXPECT_EQ(Q(oracle::direct_route_selfint(in)), 354);
}

TEST(AmbientCenter, Selfintersections) {
  EXPECT_EQ(blowup_tower(Scenario::pn(Family::pn_ex1, 4)).ambient_selfint, 625);
  EXPECT_EQ(blowup_tower(Scenario::p2(4, 1)).ambient_selfint, Rational(6 * 9 * 9));
  EXPECT_EQ(blowup_tower(Scenario::main(5, 2, 1)).ambient_selfint, Rational(2 * power(5, 5)));
}
