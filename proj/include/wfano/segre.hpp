#pragma once

// Segre classes of conormal bundles.
//
// Sign convention (the single source of truth for the library):
//   s(N*) = 1 / c(N*),  hence  s_k(N*) = (-1)^k s_k(N)  and  s_1(N*) = c_1(N).
//
// For the complete intersection S = U.V in P^{n-1} x P^1 with U ~ aH+bL and
// V ~ H+L, N*_{S/Y} = O(-u) + O(-v), so s(N*) = 1/((1-u)(1-v)) and
//   s_m(N*) = P(m) h^m + Q(m) h^{m-1} l,
//   P(m) = sum_{i=0..m} a^i,
//   Q(m) = sum_{i=0..m} (i a^{i-1} b + (m-i) a^i),
// evaluated with 0^0 = 1 so the a = 0 surface uses the same sums.

#include <wfano/arith.hpp>
#include <wfano/chow.hpp>

namespace wfano {

struct SegreVector {
  int m = 0;
  Rational p;  // coefficient of h^m
  Rational q;  // coefficient of h^{m-1} l

  friend bool operator==(const SegreVector&, const SegreVector&) = default;
};

namespace detail {
inline void check_segre_args(int m, int a, int b) {
  if (m < 0) throw DomainError("Segre degree m must be non-negative");
  if (a < 0 || b < 0) throw DomainError("bidegree (a,b) must be non-negative");
}
}  // namespace detail

// Closed-sum coefficients (P(m), Q(m)).
inline SegreVector segre_ci(int m, int a, int b) {
  detail::check_segre_args(m, a, b);
  SegreVector s{m, 0, 0};
  for (int i = 0; i <= m; ++i) {
    const Integer ai = power(a, static_cast<unsigned long>(i));
    s.p += ai;
    // i * a^{i-1} * b vanishes at i = 0 whatever a is.
    if (i >= 1) s.q += Integer(i) * power(a, static_cast<unsigned long>(i - 1)) * b;
    s.q += Integer(m - i) * ai;
  }
  return s;
}

// Total Segre class of the conormal bundle of a complete intersection of
// divisors u and v, computed by inverting c(N*) = (1-u)(1-v) in the ring that
// u and v live in.
inline ChowPoly conormal_segre(const ChowPoly& u, const ChowPoly& v) {
  const auto one = ChowPoly::constant(u.h_top(), u.l_top(), 1);
  return ((one - u) * (one - v)).inverse();
}

// Same coefficients as segre_ci, obtained by series inversion in the
// truncated ring Q[h,l]/(h^{m+1}, l^2).
inline SegreVector segre_by_inversion(int m, int a, int b) {
  detail::check_segre_args(m, a, b);
  const int h_top = m;
  const int l_top = 1;
  const auto u = ChowPoly::linear(h_top, l_top, a, b);
  const auto v = ChowPoly::linear(h_top, l_top, 1, 1);
  const auto s = conormal_segre(u, v);
  return SegreVector{m, s.coeff(m, 0), m >= 1 ? s.coeff(m - 1, 1) : Rational(0)};
}

// Data of a smooth curve centre: c_1 of its normal bundle and its genus.
struct CurveSegreData {
  Integer c1N;
  int genus = 0;
};

// deg N_{C/Y} = -K_Y.C - (2 - 2g), from the normal bundle sequence.
inline Integer normal_degree(const Integer& anticanonical_degree, int genus) {
  return anticanonical_degree - (2 - 2 * genus);
}

// s_1(N*) of a curve centre; equals c_1(N) under the convention above.
inline Integer curve_s1(const CurveSegreData& data) { return data.c1N; }

}  // namespace wfano
