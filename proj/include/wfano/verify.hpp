#pragma once

// Self-check suites run by `wfano verify`. Each check sweeps a parameter grid
// and reports the first counterexample it meets, if any.

#include <wfano/anticanonical.hpp>
#include <wfano/blowup.hpp>
#include <wfano/chow.hpp>
#include <wfano/classify.hpp>
#include <wfano/cone.hpp>
#include <wfano/segre.hpp>

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wfano {

enum class Suite { identities, duality, oracle, all };

inline std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "identities") return Suite::identities;
  if (name == "duality") return Suite::duality;
  if (name == "oracle") return Suite::oracle;
  if (name == "all") return Suite::all;
  return std::nullopt;
}

struct CheckResult {
  std::string suite;
  std::string name;
  std::string params;
  bool passed = false;
  std::string detail;  // first counterexample on failure
};

namespace detail {

// Runs body over a grid; body returns a description of the failure or nullopt.
inline CheckResult run_check(std::string suite, std::string name, std::string params,
                             const std::function<std::optional<std::string>()>& body) {
  CheckResult r{std::move(suite), std::move(name), std::move(params), true, {}};
  try {
    if (auto failure = body()) {
      r.passed = false;
      r.detail = *failure;
    }
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  return r;
}

inline std::string mismatch(const std::string& where, const Rational& lhs, const Rational& rhs) {
  return where + ": " + to_string(lhs) + " != " + to_string(rhs);
}

// sum_{k=2..n} C(n,k) (-x)^k n^{n-k} g(k), evaluated as (mu^*D - x F)^n - D^n
// over a codimension-two centre whose restricted powers are n^{n-k} g(k).
inline Rational binomial_sum_via_blowup(int n, int x, const std::function<Integer(int)>& g) {
  const CenterData center{n, 2, [n, g](int k) -> Rational {
                            return Rational(-power(n, static_cast<unsigned long>(n - k)) * g(k));
                          }};
  return expand_power(center, 0, x);
}

}  // namespace detail

inline std::vector<CheckResult> identity_checks() {
  using detail::mismatch;
  using detail::run_check;
  std::vector<CheckResult> out;
  const std::string suite = "identities";

  out.push_back(run_check(suite, "binomial-sum-order-0", "x=1..6 n=2..14", []() -> std::optional<std::string> {
    for (int x = 1; x <= 6; ++x)
      for (int n = 2; n <= 14; ++n) {
        const auto lhs = detail::binomial_sum_via_blowup(n, x, [](int) { return Integer(1); });
        const Rational rhs(power(n - x, n) + (x - 1) * power(n, n));
        if (lhs != rhs) return mismatch("x=" + std::to_string(x) + " n=" + std::to_string(n), lhs, rhs);
      }
    return std::nullopt;
  }));
  out.push_back(run_check(suite, "binomial-sum-order-1", "x=1..6 n=2..14", []() -> std::optional<std::string> {
    for (int x = 1; x <= 6; ++x)
      for (int n = 2; n <= 14; ++n) {
        const auto lhs = detail::binomial_sum_via_blowup(n, x, [](int k) { return Integer(k); });
        const Rational rhs(x * power(n, n) - Integer(x) * n * power(n - x, n - 1));
        if (lhs != rhs) return mismatch("x=" + std::to_string(x) + " n=" + std::to_string(n), lhs, rhs);
      }
    return std::nullopt;
  }));
  out.push_back(run_check(suite, "binomial-sum-order-2", "x=1..6 n=2..14", []() -> std::optional<std::string> {
    for (int x = 1; x <= 6; ++x)
      for (int n = 2; n <= 14; ++n) {
        const auto lhs = detail::binomial_sum_via_blowup(n, x, [](int k) -> Integer { return Integer(k) * k; });
        // 0^0 = 1 at n = x = 2.
        const Rational rhs(Integer(x) * (x - 1) * n * n * power(n - x, n - 2) + x * power(n, n));
        if (lhs != rhs) return mismatch("x=" + std::to_string(x) + " n=" + std::to_string(n), lhs, rhs);
      }
    return std::nullopt;
  }));
  out.push_back(run_check(suite, "segre-inversion-oracle", "m=0..10 a=0..6 b=0..6", []() -> std::optional<std::string> {
    for (int m = 0; m <= 10; ++m)
      for (int a = 0; a <= 6; ++a)
        for (int b = 0; b <= 6; ++b) {
          const auto x = segre_ci(m, a, b);
          const auto y = segre_by_inversion(m, a, b);
          if (!(x == y))
            return "m=" + std::to_string(m) + " a=" + std::to_string(a) + " b=" + std::to_string(b) + ": (" +
                   to_string(x.p) + "," + to_string(x.q) + ") vs (" + to_string(y.p) + "," + to_string(y.q) + ")";
        }
    return std::nullopt;
  }));
  out.push_back(run_check(suite, "segre-recurrences", "m=1..10 a=0..6 b=0..6", []() -> std::optional<std::string> {
    for (int m = 1; m <= 10; ++m)
      for (int a = 0; a <= 6; ++a)
        for (int b = 0; b <= 6; ++b) {
          const auto cur = segre_ci(m, a, b);
          const auto prev = segre_ci(m - 1, a, b);
          const std::string where = "m=" + std::to_string(m) + " a=" + std::to_string(a) + " b=" + std::to_string(b);
          const Rational p = a * prev.p + 1;
          if (cur.p != p) return mismatch(where + " P", cur.p, p);
          const Rational q = prev.q + Rational(Integer(m) * power(a, m - 1) * b) + prev.p;
          if (cur.q != q) return mismatch(where + " Q", cur.q, q);
        }
    return std::nullopt;
  }));
  out.push_back(run_check(suite, "surface-degree-vs-ambient", "n=3..10 a=0..5 b=0..5", []() -> std::optional<std::string> {
    for (int n = 3; n <= 10; ++n) {
      const AmbientDegree amb(Ambient::product_n1, n);
      for (int a = 0; a <= 5; ++a)
        for (int b = 0; b <= 5; ++b) {
          const SurfaceDegreeTable tbl(n, a, b);
          const auto uv = ChowPoly::linear(amb.h_top(), 1, a, b) * ChowPoly::linear(amb.h_top(), 1, 1, 1);
          for (int j = 0; j <= std::min(2, n - 2); ++j) {
            const int i = n - 2 - j;
            const auto lhs = surface_degree(tbl, i, j);
            const auto rhs = integrate(amb, ChowPoly::monomial(amb.h_top(), 1, i, j) * uv);
            if (lhs != rhs)
              return mismatch("n=" + std::to_string(n) + " a=" + std::to_string(a) + " b=" + std::to_string(b) +
                                  " i=" + std::to_string(i) + " j=" + std::to_string(j),
                              lhs, rhs);
          }
        }
    }
    return std::nullopt;
  }));
  out.push_back(run_check(suite, "curve-segre-sign", "n=3..12", []() -> std::optional<std::string> {
    for (int n = 3; n <= 12; ++n) {
      // O^{n-2} + O(-1) and O(-1)^{n-1} on P^1.
      if (curve_s1({Integer(-1), 0}) != -1) return "s_1(N*) != -1 for O^{n-2}+O(-1)";
      const Integer c1 = -(n - 1);
      if (curve_s1({c1, 0}) != c1) return "s_1(N*) != -(n-1) for O(-1)^{n-1}, n=" + std::to_string(n);
      const auto G = curve_center(n, 1, {Integer(-1), 0});
      if (mixed_term(G, n) != sign_power(n + 1)) return "G^n != (-1)^{n+1} at n=" + std::to_string(n);
    }
    return std::nullopt;
  }));
  return out;
}

// The nine cone presentations: the five branches of D(a,b), P^{n-2} x P^2 and
// the three P^n examples.
inline std::vector<Scenario> duality_scenarios() {
  return {Scenario::main(4, 0, 1), Scenario::main(4, 1, 0), Scenario::main(4, 1, 3),
          Scenario::main(4, 2, 0), Scenario::main(4, 3, 2), Scenario::p2(4, 2),
          Scenario::pn(Family::pn_ex1, 4), Scenario::pn(Family::pn_ex2, 4),
          Scenario::pn(Family::pn_ex3, 4)};
}

inline std::vector<CheckResult> duality_checks() {
  std::vector<CheckResult> out;
  for (const auto& s : duality_scenarios()) {
    out.push_back(detail::run_check("duality", "kronecker", describe(s), [s]() -> std::optional<std::string> {
      const auto cp = cone_presentation(s);
      if (!cp.verified) return "pairing matrix of generators is not the identity";
      return std::nullopt;
    }));
  }
  return out;
}

inline std::vector<std::pair<int, int>> oracle_parameter_pairs() {
  std::vector<std::pair<int, int>> out{{0, 1}};
  for (int a = 1; a <= 8; ++a)
    for (int b = 0; b <= 8; ++b) out.emplace_back(a, b);
  return out;
}

inline std::vector<CheckResult> oracle_checks() {
  using detail::mismatch;
  using detail::run_check;
  std::vector<CheckResult> out;
  const std::string suite = "oracle";
  out.push_back(run_check(suite, "closed-vs-pipeline", "n=3..12 (a,b) in {(0,1)} + [1,8]x[0,8]",
                          []() -> std::optional<std::string> {
                            for (int n = 3; n <= 12; ++n)
                              for (auto [a, b] : oracle_parameter_pairs()) {
                                const auto closed = kx_selfint_closed(n, a, b);
                                const auto pipe = kx_selfint_pipeline(Scenario::main(n, a, b));
                                if (closed != pipe)
                                  return mismatch("n=" + std::to_string(n) + " a=" + std::to_string(a) +
                                                      " b=" + std::to_string(b),
                                                  closed, pipe);
                              }
                            return std::nullopt;
                          }));
  out.push_back(run_check(suite, "sums-closed-vs-direct", "n=2..14 a=1..6 b=0..6", []() -> std::optional<std::string> {
    for (int n = 2; n <= 14; ++n)
      for (int a = 1; a <= 6; ++a)
        for (int b = 0; b <= 6; ++b) {
          const auto c = sums_closed(n, a, b);
          const auto d = sums_direct(n, a, b);
          const std::string where = "n=" + std::to_string(n) + " a=" + std::to_string(a) + " b=" + std::to_string(b);
          if (c.I != d.I) return mismatch(where + " I", c.I, d.I);
          if (c.Iprime != d.Iprime) return mismatch(where + " I'", c.Iprime, d.Iprime);
          if (c.J != d.J) return mismatch(where + " J", c.J, d.J);
        }
    return std::nullopt;
  }));
  out.push_back(run_check(suite, "case01-specialization", "n=3..12", []() -> std::optional<std::string> {
    for (int n = 3; n <= 12; ++n) {
      const auto x = kx_selfint_closed(n, 0, 1);
      const auto y = kx_selfint_case01(n);
      if (x != y) return mismatch("n=" + std::to_string(n), x, y);
    }
    return std::nullopt;
  }));
  out.push_back(run_check(suite, "p2family-closed-vs-pipeline", "n=3..10 d=1..5", []() -> std::optional<std::string> {
    for (int n = 3; n <= 10; ++n)
      for (int d = 1; d <= 5; ++d) {
        const auto x = kx_selfint_p2family(n, d);
        const auto y = kx_selfint_pipeline(Scenario::p2(n, d));
        if (x != y) return mismatch("n=" + std::to_string(n) + " d=" + std::to_string(d), x, y);
      }
    return std::nullopt;
  }));
  out.push_back(run_check(suite, "surface-table-vs-ambient-ring", "n=3..9 a=0..4 b=0..4 k=2..n",
                          []() -> std::optional<std::string> {
                            for (int n = 3; n <= 9; ++n)
                              for (int a = 0; a <= 4; ++a)
                                for (int b = 0; b <= 4; ++b) {
                                  if (a == 0 && b != 1) continue;
                                  const auto s = Scenario::main(n, a, b);
                                  const auto table = main_surface_center(n, a, b);
                                  const auto ring = ci_surface_center(ambient_center(s));
                                  for (int k = 2; k <= n; ++k) {
                                    const auto x = table.restricted_power(k);
                                    const auto y = ring.restricted_power(k);
                                    if (x != y) return mismatch(describe(s) + " k=" + std::to_string(k), x, y);
                                  }
                                }
                            return std::nullopt;
                          }));
  return out;
}

inline std::vector<CheckResult> run_suite(Suite suite) {
  std::vector<CheckResult> out;
  const auto append = [&out](std::vector<CheckResult> v) {
    for (auto& r : v) out.push_back(std::move(r));
  };
  if (suite == Suite::identities || suite == Suite::all) append(identity_checks());
  if (suite == Suite::duality || suite == Suite::all) append(duality_checks());
  if (suite == Suite::oracle || suite == Suite::all) append(oracle_checks());
  return out;
}

}  // namespace wfano
