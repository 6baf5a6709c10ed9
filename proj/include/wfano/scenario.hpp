#pragma once

// Parameter sets fixing a double blow-up X~ -> X -> Y: first along a curve C,
// then along the strict transform of a codimension-two centre S.

#include <wfano/arith.hpp>
#include <wfano/chow.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace wfano {

enum class Family {
  pp_n1,   // Y = P^{n-1} x P^1, C a fibre of the first projection, S = (a,b).(1,1)
  pp_n2,   // Y = P^{n-2} x P^2, C a plane curve of degree d, S a fibre of the second projection
  pn_ex1,  // Y = P^n, C a line, S an (n-2)-plane
  pn_ex2,  // Y = P^n, C a line, S = hyperplane . hyperquadric
  pn_ex3,  // Y = P^n, C a conic, S an (n-2)-plane meeting C twice
};

inline constexpr Family all_families[] = {Family::pp_n1, Family::pp_n2, Family::pn_ex1,
                                          Family::pn_ex2, Family::pn_ex3};

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::pp_n1: return "pp-n1";
    case Family::pp_n2: return "pp-n2";
    case Family::pn_ex1: return "pn-ex1";
    case Family::pn_ex2: return "pn-ex2";
    case Family::pn_ex3: return "pn-ex3";
  }
  return "?";
}

inline std::optional<Family> parse_family(std::string_view name) {
  for (auto f : all_families)
    if (family_name(f) == name) return f;
  return std::nullopt;
}

inline bool is_projective_family(Family f) {
  return f == Family::pn_ex1 || f == Family::pn_ex2 || f == Family::pn_ex3;
}

inline Ambient ambient_of(Family f) {
  switch (f) {
    case Family::pp_n1: return Ambient::product_n1;
    case Family::pp_n2: return Ambient::product_n2;
    default: return Ambient::projective;
  }
}

// Rank of N^1(X~): two pullback classes plus E~ and F, or one plus E~ and F.
inline int picard_number(Family f) { return is_projective_family(f) ? 3 : 4; }

struct Scenario {
  Family family = Family::pp_n1;
  int n = 3;
  int a = 0;  // pp-n1 only
  int b = 0;  // pp-n1 only
  int d = 0;  // pp-n2 only
  int t = 1;  // number of transversal points of C and S

  static Scenario main(int n, int a, int b) { return {Family::pp_n1, n, a, b, 0, 1}; }
  static Scenario p2(int n, int d) { return {Family::pp_n2, n, 0, 0, d, 1}; }
  static Scenario pn(Family f, int n, int t = 0) {
    if (t == 0) t = (f == Family::pn_ex3) ? 2 : 1;
    return {f, n, 0, 0, 0, t};
  }

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

// Human-readable reason the scenario is outside the modelled domain, if any.
inline std::optional<std::string> domain_violation(const Scenario& s) {
  using std::to_string;
  switch (s.family) {
    case Family::pp_n1:
      if (s.n < 3) return "n=" + to_string(s.n) + " below 3";
      if (s.a < 0 || s.b < 0) return "bidegree must be non-negative";
      // An irreducible S with a = 0 forces b = 1.
      if (s.a == 0 && s.b != 1) return "a=0 requires b=1";
      if (s.t != 1) return "pp-n1 has exactly one point in C.S";
      return std::nullopt;
    case Family::pp_n2:
      if (s.n < 3) return "n=" + to_string(s.n) + " below 3";
      if (s.d < 1) return "plane curve degree d must be >= 1";
      if (s.t != 1) return "pp-n2 has exactly one point in C.S";
      return std::nullopt;
    case Family::pn_ex1:
    case Family::pn_ex3:
      if (s.n < 4) return "n=" + to_string(s.n) + " below 4";
      if (s.family == Family::pn_ex1 && s.t != 1) return "pn-ex1 has exactly one point in C.S";
      if (s.family == Family::pn_ex3 && s.t != 2) return "pn-ex3 has exactly two points in C.S";
      return std::nullopt;
    case Family::pn_ex2:
      if (s.n < 4) return "n=" + to_string(s.n) + " below 4";
      if (s.t != 1 && s.t != 2) return "pn-ex2 allows one or two points in C.S";
      return std::nullopt;
  }
  return "unknown family";
}

inline void validate(const Scenario& s) {
  if (auto why = domain_violation(s)) throw DomainError(std::string(family_name(s.family)) + ": " + *why);
}

inline std::string describe(const Scenario& s) {
  std::string out = "family=" + std::string(family_name(s.family)) + " n=" + std::to_string(s.n);
  switch (s.family) {
    case Family::pp_n1: out += " a=" + std::to_string(s.a) + " b=" + std::to_string(s.b); break;
    case Family::pp_n2: out += " d=" + std::to_string(s.d); break;
    default: out += " t=" + std::to_string(s.t); break;
  }
  return out;
}

}  // namespace wfano
