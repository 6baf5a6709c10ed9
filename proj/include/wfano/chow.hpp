#pragma once

// Degree maps on the ambient products of projective spaces and on the
// codimension-two centre S, plus a small truncated polynomial ring in the
// hyperplane classes used for Chern/Segre series manipulation.

#include <wfano/arith.hpp>

#include <cassert>
#include <string>
#include <vector>

namespace wfano {

// Ambient spaces that appear: P^{n-1} x P^1, P^{n-2} x P^2 and P^n.
enum class Ambient { product_n1, product_n2, projective };

class AmbientDegree {
 public:
  AmbientDegree(Ambient kind, int n) : kind_(kind), n_(n) {
    const int min_n = kind == Ambient::projective ? 4 : 3;
    if (n < min_n)
      throw DomainError("ambient dimension n=" + std::to_string(n) + " below minimum " +
                        std::to_string(min_n));
  }

  Ambient kind() const noexcept { return kind_; }
  int n() const noexcept { return n_; }

  // Largest nonvanishing exponents of H and L.
  int h_top() const noexcept {
    switch (kind_) {
      case Ambient::product_n1: return n_ - 1;
      case Ambient::product_n2: return n_ - 2;
      case Ambient::projective: return n_;
    }
    return 0;
  }
  int l_top() const noexcept {
    switch (kind_) {
      case Ambient::product_n1: return 1;
      case Ambient::product_n2: return 2;
      case Ambient::projective: return 0;
    }
    return 0;
  }

 private:
  Ambient kind_;
  int n_;
};

// deg(H^i L^j) on the ambient space. Only the top monomial H^{h_top} L^{l_top}
// has degree 1; everything else integrates to zero.
inline Rational ambient_degree(const AmbientDegree& amb, int i, int j) {
  if (i < 0 || j < 0) throw DomainError("negative exponent in ambient_degree");
  if (amb.kind() == Ambient::projective && j != 0)
    throw DomainError("P^n carries no L class; got L-exponent " + std::to_string(j));
  return (i == amb.h_top() && j == amb.l_top()) ? Rational(1) : Rational(0);
}

// Top-degree intersection numbers on S = U.V with U ~ aH+bL, V ~ H+L inside
// P^{n-1} x P^1, written in h = H|_S and l = L|_S.
class SurfaceDegreeTable {
 public:
  SurfaceDegreeTable(int n, int a, int b) : n_(n), a_(a), b_(b) {
    if (n < 3) throw DomainError("surface table needs n >= 3");
    if (a < 0 || b < 0) throw DomainError("bidegree (a,b) must be non-negative");
  }

  int n() const noexcept { return n_; }
  int a() const noexcept { return a_; }
  int b() const noexcept { return b_; }
  int dim() const noexcept { return n_ - 2; }

 private:
  int n_, a_, b_;
};

inline Rational surface_degree(const SurfaceDegreeTable& tbl, int i, int j) {
  if (i < 0 || j < 0) throw DomainError("negative exponent in surface_degree");
  if (i + j != tbl.dim())
    throw DomainError("monomial degree " + std::to_string(i + j) + " differs from dim S = " +
                      std::to_string(tbl.dim()));
  if (j == 0) return Rational(tbl.a() + tbl.b());
  if (j == 1) return Rational(tbl.a());
  return Rational(0);
}

// Polynomials in h, l truncated at h^{h_top+1} = 0 and l^{l_top+1} = 0.
class ChowPoly {
 public:
  ChowPoly(int h_top, int l_top)
      : h_top_(h_top), l_top_(l_top),
        coeffs_(static_cast<std::size_t>((h_top + 1) * (l_top + 1))) {
    assert(h_top >= 0 && l_top >= 0);
  }

  static ChowPoly constant(int h_top, int l_top, const Rational& c) {
    ChowPoly p(h_top, l_top);
    p.at(0, 0) = c;
    return p;
  }

  // c * h^i * l^j, or zero when the monomial is truncated away.
  static ChowPoly monomial(int h_top, int l_top, int i, int j, const Rational& c = 1) {
    ChowPoly p(h_top, l_top);
    if (i <= h_top && j <= l_top) p.at(i, j) = c;
    return p;
  }

  // x*h + y*l
  static ChowPoly linear(int h_top, int l_top, const Rational& x, const Rational& y) {
    return monomial(h_top, l_top, 1, 0, x) + monomial(h_top, l_top, 0, 1, y);
  }

  int h_top() const noexcept { return h_top_; }
  int l_top() const noexcept { return l_top_; }
  int max_degree() const noexcept { return h_top_ + l_top_; }

  Rational& at(int i, int j) {
    assert(i >= 0 && j >= 0 && i <= h_top_ && j <= l_top_);
    return coeffs_[index(i, j)];
  }
  Rational coeff(int i, int j) const {
    if (i < 0 || j < 0 || i > h_top_ || j > l_top_) return 0;
    return coeffs_[index(i, j)];
  }

  ChowPoly homogeneous(int d) const {
    ChowPoly out(h_top_, l_top_);
    for (int j = 0; j <= l_top_; ++j) {
      const int i = d - j;
      if (i >= 0 && i <= h_top_) out.at(i, j) = coeff(i, j);
    }
    return out;
  }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  ChowPoly& operator+=(const ChowPoly& o) {
    check_same_ring(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }
  ChowPoly& operator-=(const ChowPoly& o) {
    check_same_ring(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
  }
  ChowPoly& operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend ChowPoly operator+(ChowPoly a, const ChowPoly& b) { return a += b; }
  friend ChowPoly operator-(ChowPoly a, const ChowPoly& b) { return a -= b; }
  friend ChowPoly operator-(ChowPoly a) { return a *= Rational(-1); }
  friend ChowPoly operator*(ChowPoly a, const Rational& s) { return a *= s; }
  friend ChowPoly operator*(const Rational& s, ChowPoly a) { return a *= s; }

  friend ChowPoly operator*(const ChowPoly& a, const ChowPoly& b) {
    a.check_same_ring(b);
    ChowPoly out(a.h_top_, a.l_top_);
    for (int i1 = 0; i1 <= a.h_top_; ++i1)
      for (int j1 = 0; j1 <= a.l_top_; ++j1) {
        const auto& x = a.coeffs_[a.index(i1, j1)];
        if (x == 0) continue;
        for (int i2 = 0; i1 + i2 <= a.h_top_; ++i2)
          for (int j2 = 0; j1 + j2 <= a.l_top_; ++j2) {
            const auto& y = b.coeffs_[b.index(i2, j2)];
            if (y != 0) out.at(i1 + i2, j1 + j2) += x * y;
          }
      }
    return out;
  }

  friend bool operator==(const ChowPoly& a, const ChowPoly& b) {
    return a.h_top_ == b.h_top_ && a.l_top_ == b.l_top_ && a.coeffs_ == b.coeffs_;
  }

  ChowPoly pow(unsigned e) const {
    ChowPoly out = constant(h_top_, l_top_, 1);
    for (unsigned k = 0; k < e; ++k) out = out * *this;
    return out;
  }

  // Multiplicative inverse, solved degree by degree from c*s = 1.
  // Requires a nonzero constant term.
  ChowPoly inverse() const {
    const Rational c0 = coeff(0, 0);
    if (c0 == 0) throw DomainError("series with zero constant term is not invertible");
    std::vector<ChowPoly> parts;
    for (int d = 0; d <= max_degree(); ++d) parts.push_back(homogeneous(d));
    const Rational inv_c0 = Rational(1) / c0;
    std::vector<ChowPoly> inv{constant(h_top_, l_top_, inv_c0)};
    for (int d = 1; d <= max_degree(); ++d) {
      ChowPoly acc(h_top_, l_top_);
      for (int j = 1; j <= d; ++j) acc += parts[j] * inv[d - j];
      inv.push_back(acc * Rational(-inv_c0));
    }
    ChowPoly out(h_top_, l_top_);
    for (const auto& p : inv) out += p;
    return out;
  }

  // Sum of coefficient * degree(i, j) over every stored monomial.
  template <class Degree>
  Rational integrate(Degree&& degree) const {
    Rational total = 0;
    for (int i = 0; i <= h_top_; ++i)
      for (int j = 0; j <= l_top_; ++j) {
        const auto& c = coeffs_[index(i, j)];
        if (c != 0) total += c * degree(i, j);
      }
    return total;
  }

 private:
  std::size_t index(int i, int j) const noexcept {
    return static_cast<std::size_t>(i * (l_top_ + 1) + j);
  }
  void check_same_ring(const ChowPoly& o) const {
    if (h_top_ != o.h_top_ || l_top_ != o.l_top_)
      throw std::logic_error("ChowPoly operands live in different truncated rings");
  }

  int h_top_;
  int l_top_;
  std::vector<Rational> coeffs_;
};

// Ring of the ambient space, with H and L as generators.
inline ChowPoly ambient_zero(const AmbientDegree& amb) { return ChowPoly(amb.h_top(), amb.l_top()); }

inline Rational integrate(const AmbientDegree& amb, const ChowPoly& p) {
  return p.integrate([&](int i, int j) { return ambient_degree(amb, i, j); });
}

// Top-degree part of p integrated over the surface table (monomials of the
// wrong degree are ignored rather than rejected).
inline Rational integrate(const SurfaceDegreeTable& tbl, const ChowPoly& p) {
  return p.integrate([&](int i, int j) {
    return (i + j == tbl.dim()) ? surface_degree(tbl, i, j) : Rational(0);
  });
}

}  // namespace wfano
