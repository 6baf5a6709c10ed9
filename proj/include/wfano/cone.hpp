#pragma once

// Numerical classes on X~, the intersection pairing N^1 x N_1 -> Q, the nef
// cone generators and their dual extremal curves, and the Kronecker test that
// certifies a simplicial cone presentation.
//
// Bases (rank 4 / rank 3):
//   divisors  (H~, L~, E~, F)   /  (H~, E~, F)
//   curves    (l~, h~, e0~, f)  /  (l~, e0~, f)
// with pairing
//          H~  L~  E~  F
//   l~      1   0   0   0
//   h~      0   1   0   0
//   e0~     0   0  -1   1
//   f       0   0   0  -1
// and the rank-3 table obtained by deleting the L~ column and h~ row.

#include <wfano/arith.hpp>
#include <wfano/scenario.hpp>

#include <array>
#include <initializer_list>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

namespace wfano {

template <class Tag>
class ClassVector {
 public:
  ClassVector() = default;
  explicit ClassVector(std::vector<Rational> coords) : coords_(std::move(coords)) {
    if (coords_.size() != 3 && coords_.size() != 4)
      throw DomainError("class vectors have rank 3 or 4");
  }
  ClassVector(std::initializer_list<long> coords) {
    for (long c : coords) coords_.emplace_back(c);
    if (coords_.size() != 3 && coords_.size() != 4)
      throw DomainError("class vectors have rank 3 or 4");
  }

  std::size_t rank() const noexcept { return coords_.size(); }
  const std::vector<Rational>& coords() const noexcept { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_.at(i); }

  ClassVector& operator+=(const ClassVector& o) {
    check_rank(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  friend ClassVector operator+(ClassVector a, const ClassVector& b) { return a += b; }
  friend ClassVector operator*(const Rational& s, ClassVector a) {
    for (auto& c : a.coords_) c *= s;
    return a;
  }
  friend bool operator==(const ClassVector&, const ClassVector&) = default;

  void check_rank(const ClassVector& o) const {
    if (o.rank() != rank()) throw DomainError("class vectors from different lattices");
  }

 private:
  std::vector<Rational> coords_;
};

struct DivisorTag {};
struct CurveTag {};
using DivisorClass = ClassVector<DivisorTag>;
using CurveClass = ClassVector<CurveTag>;

// Rows = curve basis, columns = divisor basis.
using PairingTable = std::vector<std::vector<int>>;

inline PairingTable pairing_table(int rank) {
  if (rank == 4) return {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 1}, {0, 0, 0, -1}};
  if (rank == 3) return {{1, 0, 0}, {0, -1, 1}, {0, 0, -1}};
  throw DomainError("no pairing table for rank " + std::to_string(rank));
}

inline Rational pairing(const DivisorClass& D, const CurveClass& C) {
  if (D.rank() != C.rank()) throw DomainError("divisor and curve come from different families");
  static const PairingTable table4 = pairing_table(4);
  static const PairingTable table3 = pairing_table(3);
  const auto& table = D.rank() == 4 ? table4 : table3;
  Rational total = 0;
  for (std::size_t row = 0; row < C.rank(); ++row) {
    if (C[row] == 0) continue;
    for (std::size_t col = 0; col < D.rank(); ++col)
      if (table[row][col] != 0) total += C[row] * D[col] * table[row][col];
  }
  return total;
}

// Intersection numbers of the divisor against the whole curve basis.
inline std::vector<Rational> degrees(const DivisorClass& D) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < D.rank(); ++i) {
    std::vector<Rational> e(D.rank(), Rational(0));
    e[i] = 1;
    out.push_back(pairing(D, CurveClass(e)));
  }
  return out;
}

// The divisor D(a,b) spanning the fourth nef ray of the pp-n1 family.
inline DivisorClass main_boundary_divisor(int a, int b) {
  if (a == 0 && b == 1) return {1, 1, -1, -1};
  if (a == 1 && b == 0) return {2, 1, -1, -1};
  if (a == 1) return {2, b, -1, -1};
  if (a >= 2 && b == 0) return {a, 1, -1, -1};
  if (a >= 2) return {a, b, -1, -1};
  throw DomainError("no boundary divisor for (a,b)=(" + std::to_string(a) + "," +
                    std::to_string(b) + ")");
}

inline std::vector<DivisorClass> nef_generators(const Scenario& s) {
  validate(s);
  switch (s.family) {
    case Family::pp_n1:
      return {{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 0, -1, 0}, main_boundary_divisor(s.a, s.b)};
    case Family::pp_n2:
      return {{1, 0, 0, 0}, {0, 1, 0, 0}, {1, s.d, -1, 0}, {1, s.d, -1, -1}};
    case Family::pn_ex1:
    case Family::pn_ex2:
      return {{1, 0, 0}, {1, -1, 0}, {2, -1, -1}};
    case Family::pn_ex3:
      return {{1, 0, 0}, {2, -1, 0}, {3, -1, -1}};
  }
  return {};
}

// Extremal curves l(a), h(b), e0~, f (and the analogues for the other
// families), ordered so that curve j is dual to nef generator j.
inline std::vector<CurveClass> curve_generators(const Scenario& s) {
  validate(s);
  switch (s.family) {
    case Family::pp_n1: {
      const long a = s.a;
      const long b = s.b;
      const CurveClass l_a = a == 0 ? CurveClass{1, 0, -1, -1}
                             : a == 1 ? CurveClass{1, 0, -1, -2}
                                      : CurveClass{1, 0, -1, -a};
      const CurveClass h_b = b == 0 ? CurveClass{0, 1, 0, -1} : CurveClass{0, 1, 0, -b};
      return {l_a, h_b, {0, 0, 1, 0}, {0, 0, 0, 1}};
    }
    case Family::pp_n2:
      return {{1, 0, -1, -1}, {0, 1, -s.d, -s.d}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    case Family::pn_ex1:
    case Family::pn_ex2:
      return {{1, -1, -2}, {0, 1, 0}, {0, 0, 1}};
    case Family::pn_ex3:
      return {{1, -2, -3}, {0, 1, 0}, {0, 0, 1}};
  }
  return {};
}

inline DivisorClass anticanonical_class(const Scenario& s) {
  validate(s);
  const long n = s.n;
  switch (s.family) {
    case Family::pp_n1: return {n, 2, -(n - 2), -1};
    case Family::pp_n2: return {n - 1, 3, -(n - 2), -1};
    default: return {n + 1, -(n - 2), -1};
  }
}

struct ConePresentation {
  std::vector<DivisorClass> div_gens;
  std::vector<CurveClass> curve_gens;
  bool verified = false;
};

inline std::vector<std::vector<Rational>> pairing_matrix(const std::vector<DivisorClass>& divs,
                                                         const std::vector<CurveClass>& curves) {
  std::vector<std::vector<Rational>> m;
  for (const auto& C : curves) {
    auto& row = m.emplace_back();
    for (const auto& D : divs) row.push_back(pairing(D, C));
  }
  return m;
}

// True iff D_i . C_j = delta_ij, which certifies both cones as simplicial
// with exactly these generators.
inline bool kronecker_check(const ConePresentation& cp) {
  if (cp.div_gens.empty() || cp.div_gens.size() != cp.curve_gens.size()) return false;
  const auto rho = cp.div_gens.size();
  for (const auto& D : cp.div_gens)
    if (D.rank() != rho) return false;
  for (const auto& C : cp.curve_gens)
    if (C.rank() != rho) return false;
  for (std::size_t i = 0; i < rho; ++i)
    for (std::size_t j = 0; j < rho; ++j)
      if (pairing(cp.div_gens[i], cp.curve_gens[j]) != (i == j ? 1 : 0)) return false;
  return true;
}

inline ConePresentation cone_presentation(const Scenario& s) {
  ConePresentation cp{nef_generators(s), curve_generators(s), false};
  cp.verified = kronecker_check(cp);
  return cp;
}

// Coefficients c with D = sum c_i gens_i, by exact Gauss-Jordan elimination.
inline std::vector<Rational> decompose(const DivisorClass& D, const std::vector<DivisorClass>& gens) {
  const std::size_t rho = D.rank();
  if (gens.size() != rho) throw DomainError("need exactly rho generators to decompose");
  for (const auto& g : gens) D.check_rank(g);
  // Columns are generators; augmented with D.
  std::vector<std::vector<Rational>> m(rho, std::vector<Rational>(rho + 1));
  for (std::size_t r = 0; r < rho; ++r) {
    for (std::size_t c = 0; c < rho; ++c) m[r][c] = gens[c][r];
    m[r][rho] = D[r];
  }
  for (std::size_t col = 0; col < rho; ++col) {
    std::size_t pivot = col;
    while (pivot < rho && m[pivot][col] == 0) ++pivot;
    if (pivot == rho) throw DomainError("generator matrix is singular");
    std::swap(m[pivot], m[col]);
    const Rational inv = Rational(1) / m[col][col];
    for (auto& x : m[col]) x *= inv;
    for (std::size_t r = 0; r < rho; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational factor = m[r][col];
      for (std::size_t c = col; c <= rho; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  std::vector<Rational> out;
  for (std::size_t r = 0; r < rho; ++r) out.push_back(m[r][rho]);
  return out;
}

inline DivisorClass reassemble(const std::vector<Rational>& coeffs, const std::vector<DivisorClass>& gens) {
  if (coeffs.size() != gens.size() || gens.empty()) throw DomainError("coefficient count mismatch");
  DivisorClass out(std::vector<Rational>(gens.front().rank(), Rational(0)));
  for (std::size_t i = 0; i < gens.size(); ++i) out += coeffs[i] * gens[i];
  return out;
}

enum class NefStatus { not_nef, boundary, interior };

inline std::string_view nef_status_name(NefStatus s) {
  switch (s) {
    case NefStatus::not_nef: return "NotNef";
    case NefStatus::boundary: return "Boundary";
    case NefStatus::interior: return "Interior";
  }
  return "?";
}

// Coefficients must be coordinates in a Kronecker-verified nef basis.
inline NefStatus nef_status(const std::vector<Rational>& coeffs) {
  bool all_positive = true;
  for (const auto& c : coeffs) {
    if (c < 0) return NefStatus::not_nef;
    if (c == 0) all_positive = false;
  }
  return all_positive ? NefStatus::interior : NefStatus::boundary;
}

// "2H~+L~-E~-F" style rendering for reports.
template <class Tag>
std::string format_class(const ClassVector<Tag>& v) {
  static constexpr std::array<const char*, 4> div4{"H~", "L~", "E~", "F"};
  static constexpr std::array<const char*, 3> div3{"H~", "E~", "F"};
  static constexpr std::array<const char*, 4> cur4{"l~", "h~", "e0~", "f"};
  static constexpr std::array<const char*, 3> cur3{"l~", "e0~", "f"};
  constexpr bool is_div = std::is_same_v<Tag, DivisorTag>;
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.rank(); ++i) {
    const Rational& c = v[i];
    if (c == 0) continue;
    const char* name = v.rank() == 4 ? (is_div ? div4[i] : cur4[i]) : (is_div ? div3[i] : cur3[i]);
    if (c < 0) os << '-';
    else if (!first) os << '+';
    const Rational mag = abs(c);
    if (mag != 1) os << to_string(mag);
    os << name;
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace wfano
