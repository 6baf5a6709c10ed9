#pragma once

// Self-intersection numbers (-K_X~)^n.
//
// Two independent routes are provided:
//   * closed forms in (n, a, b) for P^{n-1} x P^1 and in (n, d) for
//     P^{n-2} x P^2;
//   * a blow-up pipeline that never uses a closed form. It blows Y up along S
//     first (Z), then along the strict transform C' of the curve (Z~), and
//     finally crosses to X~ through one flip per point of C.S, each flip
//     realised as the common blow-up W of X~ along E0~ and of Z~ along the
//     flipped curve Gamma0~:
//       delta^*(-K_X~) = gamma^*(-K_Z~) - (n-3) M.

#include <wfano/arith.hpp>
#include <wfano/blowup.hpp>
#include <wfano/chow.hpp>
#include <wfano/scenario.hpp>
#include <wfano/segre.hpp>

namespace wfano {

// I_n, I'_n and J_n: the binomial sums of P(k-2), k P(k-2) and Q(k-2)
// weighted by C(n,k) (-1)^k n^{n-k} over 2 <= k <= n.
struct SumTriple {
  Rational I;
  Rational Iprime;
  Rational J;

  friend bool operator==(const SumTriple&, const SumTriple&) = default;
};

inline SumTriple sums_direct(int n, int a, int b) {
  if (n < 2) throw DomainError("sums need n >= 2");
  if (a < 0 || b < 0) throw DomainError("bidegree (a,b) must be non-negative");
  SumTriple s{0, 0, 0};
  for (int k = 2; k <= n; ++k) {
    const auto seg = segre_ci(k - 2, a, b);
    const Rational w = Rational(binomial(n, k) * power(n, n - k)) * sign_power(k);
    s.I += w * seg.p;
    s.Iprime += w * k * seg.p;
    s.J += w * seg.q;
  }
  return s;
}

// Closed forms of the three sums; a = 0 is not covered.
inline SumTriple sums_closed(int n, int a, int b) {
  if (n < 2) throw DomainError("sums need n >= 2");
  if (a < 1 || b < 0) throw DomainError("closed sums need a >= 1 and b >= 0");
  const auto un = static_cast<unsigned long>(n);
  const Integer nn = power(n, un);
  const Integer n1 = power(n - 1, un - 1);  // (n-1)^{n-1}
  if (a == 1) {
    return SumTriple{Rational(nn - (2 * n - 1) * n1), Rational(n * n1),
                     ratio(b + 1, 2) * Rational((5 * n - 2) * n1 - 2 * nn)};
  }
  const Integer na = power(n - a, un - 1);  // (n-a)^{n-1}
  const Integer am1 = a - 1;
  // The -a(n-1)^n term appears once; a duplicated copy does not match the
  // term-by-term sums.
  const Rational I = ratio(Integer(n - a) * na + am1 * nn - a * Integer(n - 1) * n1, a * am1);
  const Rational Iprime = ratio(n, am1) * Rational(n1 - na);
  const Rational J = ratio(Integer((a + b - 2 * a * b) * (n - a)) - Integer(a * b) * am1 * n,
                              Integer(a * a) * am1 * am1) *
                         Rational(na) +
                     ratio(am1 * n + Integer(a + b - 2) * (n - 1), am1 * am1) * Rational(n1) -
                     ratio(a + b, a * a) * Rational(nn);
  return SumTriple{I, Iprime, J};
}

// (-K_Z)^n for Z = Bl_S(P^{n-1} x P^1) from the three sums.
inline Rational kz_selfint_from_sums(int n, int a, int b, const SumTriple& s) {
  return Rational(2 * power(n, n)) - Rational(3 * a + b) * s.I + ratio(2 * a, n) * s.Iprime -
         Rational(a) * s.J;
}

namespace detail {
inline Integer curve_and_flip_terms(int n) {
  return -2 * Integer(n - 1) * power(n - 2, n - 1) + power(n - 3, n);
}
}  // namespace detail

inline Rational kx_selfint_closed(int n, int a, int b) {
  validate(Scenario::main(n, a, b));
  const auto un = static_cast<unsigned long>(n);
  if (a == 1) {
    return ratio((7 - b) * n, 2) * Rational(power(n - 1, un - 1)) +
           Rational(detail::curve_and_flip_terms(n));
  }
  const Integer am1_sq = Integer(a - 1) * (a - 1);
  return ratio(power(n - a, un - 1) * ((-3 * a + 2 + a * b) * n + a * a - a * b), am1_sq) +
         ratio(power(n - 1, un - 1) * ((a * a - b) * n - a + b), am1_sq) +
         Rational(detail::curve_and_flip_terms(n));
}

// (a,b) = (0,1): S' is itself a complete intersection in X = Bl_C(Y), so
// (-K_X~)^n = (-K_X)^n + sum_k C(n,k)(-1)^k ((n-2)^{n-k} - n^{n-k}) with
// (-K_X)^n = 2n(n^{n-1} - (n-2)^{n-1}).
inline Rational kx_selfint_case01(int n) {
  if (n < 3) throw DomainError("n must be >= 3");
  Integer total = 2 * Integer(n) * (power(n, n - 1) - power(n - 2, n - 1));
  for (int k = 2; k <= n; ++k)
    total += binomial(n, k) * sign_power(k) * (power(n - 2, n - k) - power(n, n - k));
  return Rational(total);
}

inline Rational kx_selfint_p2family(int n, int d) {
  validate(Scenario::p2(n, d));
  const Integer dd = d;
  return Rational(4 * Integer(n) * power(n - 1, n - 1) +
                  power(n - 2, n - 1) * (dd * (dd - 3) * n - 2 * dd * dd + 2) + power(n - 3, n));
}

// ---------------------------------------------------------------------------
// Pipeline

// Codimension-two centre S in P^{n-1} x P^1 evaluated through the surface
// degree table and the closed Segre sums:
//   (-K_Y|_S)^{n-k} s_{k-2}(N*) with -K_Y|_S = n h + 2 l.
inline CenterData main_surface_center(int n, int a, int b) {
  const SurfaceDegreeTable table(n, a, b);
  return CenterData{n, 2, [table, n, a, b](int k) -> Rational {
                      const int m = k - 2;
                      const auto seg = segre_ci(m, a, b);
                      const int h_top = n - 2;
                      auto s = ChowPoly::monomial(h_top, 1, m, 0, seg.p);
                      if (m >= 1) s += ChowPoly::monomial(h_top, 1, m - 1, 1, seg.q);
                      const auto K = ChowPoly::linear(h_top, 1, n, 2);
                      return integrate(table, K.pow(n - k) * s);
                    }};
}

// The anticanonical class of Y and the two divisors cutting out S, as
// polynomials in the ambient ring.
struct AmbientCenter {
  AmbientDegree ambient;
  ChowPoly anticanonical;
  ChowPoly u;
  ChowPoly v;
};

inline AmbientCenter ambient_center(const Scenario& s) {
  validate(s);
  const AmbientDegree amb(ambient_of(s.family), s.n);
  const int ht = amb.h_top();
  const int lt = amb.l_top();
  const int n = s.n;
  switch (s.family) {
    case Family::pp_n1:
      return {amb, ChowPoly::linear(ht, lt, n, 2), ChowPoly::linear(ht, lt, s.a, s.b),
              ChowPoly::linear(ht, lt, 1, 1)};
    case Family::pp_n2:
      return {amb, ChowPoly::linear(ht, lt, n - 1, 3), ChowPoly::linear(ht, lt, 0, 1),
              ChowPoly::linear(ht, lt, 0, 1)};
    case Family::pn_ex1:
    case Family::pn_ex3:
      return {amb, ChowPoly::linear(ht, lt, n + 1, 0), ChowPoly::linear(ht, lt, 1, 0),
              ChowPoly::linear(ht, lt, 1, 0)};
    case Family::pn_ex2:
      return {amb, ChowPoly::linear(ht, lt, n + 1, 0), ChowPoly::linear(ht, lt, 1, 0),
              ChowPoly::linear(ht, lt, 2, 0)};
  }
  throw DomainError("unknown family");
}

// Same restricted powers as main_surface_center, but for any complete
// intersection centre: deg_Y(K^{n-k} s_{k-2}(N*) u v) with s(N*) inverted in
// the ambient ring.
inline CenterData ci_surface_center(const AmbientCenter& ac) {
  const auto s = conormal_segre(ac.u, ac.v);
  const auto uv = ac.u * ac.v;
  const int n = ac.ambient.n();
  return CenterData{n, 2, [ac, s, uv, n](int k) -> Rational {
                      return integrate(ac.ambient, ac.anticanonical.pow(n - k) * s.homogeneous(k - 2) * uv);
                    }};
}

struct BlowupTower {
  int n = 0;
  Rational ambient_selfint;             // (-K_Y)^n
  CenterData surface;                   // S with D = -K_Y
  Integer curve_anticanonical_degree;   // -K_Y . C
  int curve_genus = 0;
  int transversal_points = 1;           // #(C . S)
};

inline BlowupTower blowup_tower(const Scenario& s) {
  const auto ac = ambient_center(s);
  BlowupTower tw;
  tw.n = s.n;
  tw.ambient_selfint = integrate(ac.ambient, ac.anticanonical.pow(s.n));
  tw.surface = s.family == Family::pp_n1 ? main_surface_center(s.n, s.a, s.b) : ci_surface_center(ac);
  tw.transversal_points = s.t;
  switch (s.family) {
    case Family::pp_n1:  // a P^1 fibre: (nH+2L).C = 2
      tw.curve_anticanonical_degree = 2;
      break;
    case Family::pp_n2:  // plane curve of degree d in a P^2 fibre
      tw.curve_anticanonical_degree = 3 * s.d;
      tw.curve_genus = (s.d - 1) * (s.d - 2) / 2;
      break;
    case Family::pn_ex1:
    case Family::pn_ex2:
      tw.curve_anticanonical_degree = s.n + 1;
      break;
    case Family::pn_ex3:
      tw.curve_anticanonical_degree = 2 * (s.n + 1);
      break;
  }
  return tw;
}

struct PipelineStages {
  Rational ky;       // (-K_Y)^n
  Rational kz;       // (-K_Z), Z = Bl_S Y
  Rational kz_tilde; // (-K_Z~), Z~ = Bl_{C'} Z
  Rational kx;       // (-K_X~) after the flips
};

inline PipelineStages pipeline_stages(const BlowupTower& tw) {
  const int n = tw.n;
  PipelineStages out;
  out.ky = tw.ambient_selfint;
  // Bl_S: discrepancy 1.
  out.kz = expand_power(tw.surface, out.ky, 1);

  // C' meets the exceptional divisor of Bl_S transversally at t points, each
  // lowering -K.C and deg N by codim S - 1 = 1.
  const Integer t = tw.transversal_points;
  const Integer kz_dot_c = tw.curve_anticanonical_degree - t;
  const Integer c1n = normal_degree(tw.curve_anticanonical_degree, tw.curve_genus) - t;
  const auto curve = curve_center(n, Rational(kz_dot_c), CurveSegreData{c1n, tw.curve_genus});
  out.kz_tilde = expand_power(curve, out.kz, n - 2);

  // Gamma0 = fibre of Bl_S over a point of C.S: -K_Z.Gamma0 = 1, and the
  // blow-up of C' (discrepancy n-2) meets it once, so
  // -K_Z~.Gamma0~ = 3-n and deg N = (3-n) - 2.
  const Integer flip_degree = 1 - (n - 2);
  const auto flipped = curve_center(n, Rational(flip_degree),
                                    CurveSegreData{normal_degree(flip_degree, 0), 0});
  Rational value = out.kz_tilde;
  for (int i = 0; i < tw.transversal_points; ++i) value = expand_power(flipped, value, n - 3);
  out.kx = value;
  return out;
}

inline PipelineStages pipeline_stages(const Scenario& s) { return pipeline_stages(blowup_tower(s)); }

inline Rational kx_selfint_pipeline(const Scenario& s) { return pipeline_stages(s).kx; }

}  // namespace wfano
