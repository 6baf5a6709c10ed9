#pragma once

// Intersection numbers on a blow-up mu: Z -> Y along a smooth centre S of
// codimension r with exceptional divisor F:
//
//   (mu^* D)^{n-k} F^k = (-1)^{r-1} (D|_S)^{n-k} s_{k-r}(N*_{S/Y}),  1 <= k <= n,
//
// and the binomial expansion of (mu^* D - c F)^n built from it. The centre is
// described only by the numbers (D|_S)^{n-k} s_{k-r}(N*) so the same code
// serves surface centres, curve centres and flipped curves.

#include <wfano/arith.hpp>
#include <wfano/segre.hpp>

#include <functional>
#include <string>

namespace wfano {

struct CenterData {
  int n = 0;      // dimension of the ambient variety
  int codim = 2;  // r
  // k -> (D|_S)^{n-k} s_{k-r}(N*), queried only for r <= k <= n.
  std::function<Rational(int)> restricted_power;
};

inline Rational mixed_term(const CenterData& center, int k) {
  if (k < 1 || k > center.n)
    throw DomainError("mixed term index k=" + std::to_string(k) + " outside [1," +
                      std::to_string(center.n) + "]");
  if (k < center.codim) return 0;
  return Rational(sign_power(center.codim - 1)) * center.restricted_power(k);
}

// (mu^* D - c F)^n, where base_selfint = D^n (projection formula).
inline Rational expand_power(const CenterData& center, const Rational& base_selfint,
                             const Rational& c) {
  Rational total = base_selfint;
  const Rational minus_c = -c;
  for (int k = 1; k <= center.n; ++k) {
    if (k < center.codim) continue;
    total += Rational(binomial(center.n, k)) * power(minus_c, k) * mixed_term(center, k);
  }
  return total;
}

// A smooth curve in an n-fold (codimension n-1). Only two restricted powers
// survive: D.C against s_0 and s_1(N*) against D^0.
inline CenterData curve_center(int n, const Rational& divisor_degree, const CurveSegreData& data) {
  if (n < 3) throw DomainError("curve centre needs ambient dimension >= 3");
  const Rational s1(curve_s1(data));
  return CenterData{n, n - 1, [n, divisor_degree, s1](int k) -> Rational {
                      if (k == n - 1) return divisor_degree;
                      if (k == n) return s1;
                      return 0;
                    }};
}

}  // namespace wfano
