#pragma once

// Dense univariate polynomials in a formal indeterminate "alpha" with
// scalar-field coefficients.  The characterization replay uses alpha for
// the free expansion coefficient a_2 (Case I) or a_1 / c^2 (Case II
// endgame); plain scalars embed as degree-0 polynomials.

#include <cstddef>
#include <string>
#include <vector>

#include "qaw/scalar.hpp"

namespace qaw {

class AlphaPoly {
 public:
  AlphaPoly() = default;  // zero
  AlphaPoly(const QScalar& constant);  // implicit: scalars embed
  AlphaPoly(int n) : AlphaPoly(QScalar(n)) {}
  static AlphaPoly alpha() { return monomial(QScalar(1), 1); }
  static AlphaPoly monomial(const QScalar& c, std::size_t k);
  static AlphaPoly from_coeffs(std::vector<QScalar> coeffs);

  bool is_zero() const { return c_.empty(); }
  bool is_scalar() const { return c_.size() <= 1; }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  QScalar coeff(std::size_t k) const;
  const QScalar& leading() const;  // throws Error on zero
  const std::vector<QScalar>& coeffs() const { return c_; }

  AlphaPoly operator-() const;
  friend AlphaPoly operator+(const AlphaPoly& a, const AlphaPoly& b);
  friend AlphaPoly operator-(const AlphaPoly& a, const AlphaPoly& b);
  friend AlphaPoly operator*(const AlphaPoly& a, const AlphaPoly& b);
  AlphaPoly& operator+=(const AlphaPoly& b) { return *this = *this + b; }
  AlphaPoly& operator-=(const AlphaPoly& b) { return *this = *this - b; }
  AlphaPoly& operator*=(const AlphaPoly& b) { return *this = *this * b; }
  AlphaPoly scaled(const QScalar& c) const;

  bool operator==(const AlphaPoly& o) const { return c_ == o.c_; }
  bool operator!=(const AlphaPoly& o) const { return !(*this == o); }

  // Substitute a scalar for alpha.
  QScalar eval(const QScalar& alpha_val) const;

  // "(c0) + (c1)*alpha + (c2)*alpha^2 + ..." with QScalar coefficient
  // serializations; zero prints as "(0)/(1)".
  std::string str() const;

 private:
  void trim();
  std::vector<QScalar> c_;
};

AlphaPoly operator*(const QScalar& c, const AlphaPoly& p);

}  // namespace qaw
