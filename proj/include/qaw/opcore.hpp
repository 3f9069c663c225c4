#pragma once

// Polynomials in x = (z + z^-1)/2 over the scalar field, and the
// Askey-Wilson divided-difference operator D_q acting on them exactly.
//
// The operator is computed in the symmetric Laurent picture: a polynomial
// p(x) corresponds to a z <-> z^-1 symmetric Laurent polynomial; shifting
// z -> q^(1/2) z multiplies the coefficient of z^k by s^(2k); the difference
// of the two shifts is antisymmetric and exactly divisible by (z - z^-1).

#include <cstddef>
#include <string>
#include <vector>

#include "qaw/scalar.hpp"

namespace qaw {

// Dense polynomial in x; position k holds the coefficient of x^k.
// Zero polynomial <=> empty coefficient vector (degree() == -1).
class PolyX {
 public:
  PolyX() = default;  // zero
  explicit PolyX(const QScalar& constant);
  static PolyX one() { return PolyX(QScalar(1)); }
  static PolyX x() { return monomial(QScalar(1), 1); }
  static PolyX monomial(const QScalar& c, std::size_t k);
  static PolyX from_coeffs(std::vector<QScalar> coeffs);

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  QScalar coeff(std::size_t k) const;
  const QScalar& leading() const;  // throws Error on zero polynomial
  const std::vector<QScalar>& coeffs() const { return c_; }

  PolyX operator-() const;
  friend PolyX operator+(const PolyX& a, const PolyX& b);
  friend PolyX operator-(const PolyX& a, const PolyX& b);
  friend PolyX operator*(const PolyX& a, const PolyX& b);
  PolyX& operator+=(const PolyX& b) { return *this = *this + b; }
  PolyX& operator-=(const PolyX& b) { return *this = *this - b; }
  PolyX& operator*=(const PolyX& b) { return *this = *this * b; }
  PolyX scaled(const QScalar& c) const;

  bool operator==(const PolyX& o) const { return c_ == o.c_; }
  bool operator!=(const PolyX& o) const { return !(*this == o); }

  // Substitute a scalar for x.
  QScalar eval(const QScalar& x_val) const;
  // Substitute rational values for s and x simultaneously; propagates the
  // pole/zero diagnostics of QScalar::eval_exact.
  Rat eval_exact(const Rat& s_val, const Rat& x_val) const;

  // "c0 + c1*x + c2*x^2 + ..." with every position printed, each
  // coefficient in QScalar form; the zero polynomial prints as "(0)/(1)".
  std::string str() const;

 private:
  void trim();
  std::vector<QScalar> c_;
};

PolyX operator*(const QScalar& c, const PolyX& p);

// 2x * p, the doubling step used by the three-term recurrences.
PolyX mul_2x(const PolyX& p);

// Symmetric Laurent function c[0] + sum_{k>=1} c[k] (z^k + z^-k).
struct SymLaurent {
  std::vector<QScalar> c;

  long top() const { return static_cast<long>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  QScalar coeff(std::size_t k) const { return k < c.size() ? c[k] : QScalar(); }
  bool operator==(const SymLaurent& o) const { return c == o.c; }
};

// Antisymmetric Laurent function sum_{k>=1} d[k] (z^k - z^-k); d[0] is kept
// in the vector for aligned indexing and is always zero.
struct AntiLaurent {
  std::vector<QScalar> d;

  long top() const { return static_cast<long>(d.size()) - 1; }
  bool is_zero() const { return d.empty(); }
  QScalar coeff(std::size_t k) const { return k < d.size() ? d[k] : QScalar(); }
  bool operator==(const AntiLaurent& o) const { return d == o.d; }
};

// Change of basis: p(x) with x = (z + z^-1)/2, expanded over {1, z^k + z^-k}.
SymLaurent to_sym(const PolyX& p);

// Inverse of to_sym via z^k + z^-k = t_k(x), t_0 = 2, t_1 = 2x,
// t_k = 2x t_{k-1} - t_{k-2}.
PolyX from_sym(const SymLaurent& f);

// f(q^(1/2) z) - f(q^(-1/2) z): multiplies c[k] by s^(2k) - s^(-2k), so the
// constant term drops and the result is antisymmetric.
AntiLaurent delta_q(const SymLaurent& f);

// Exact quotient g / (z - z^-1) of an antisymmetric g; always divides.
// Throws Error if the multiply-back consistency check fails.
SymLaurent div_z_antisym(const AntiLaurent& g);

// The Askey-Wilson operator: delta_q(p) divided by delta_q(x), i.e. the
// quotient above scaled by 2/(s^2 - s^-2).  Lowers degree by exactly one.
PolyX dq(const PolyX& p);

// k-fold application of dq; k = 0 returns p unchanged.
PolyX dq_iter(PolyX p, unsigned k);

}  // namespace qaw
