#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

/*
 * Exact coefficient field Q(s), with q = s^4.
 *
 * Every scalar in this calculus lives in the rational function field
 * Q(q^(1/4)).  Writing s = q^(1/4) turns all quarter-integer powers of q
 * into Laurent monomials in s, so factors such as
 *
 *     q^(1/2) = s^2,    q^(-1/2) = s^-2,    q^(n(n-1)/4) = s^(n(n-1))
 *
 * stay exact.  LaurentPoly is a dense Laurent polynomial in s over Q.
 * QScalar is a quotient num/den of two LaurentPolys kept in a canonical
 * reduced form, so identity checks reduce to structural equality.
 */

namespace qaw {

using Rat = mpq_class;
using Int = mpz_class;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Violated precondition or arithmetic domain error (division by zero,
// pole at an evaluation point, fractional exponent outside (1/4)Z, ...).
struct DomainError : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

/*
 * Laurent polynomial sum_{e >= lo} c[e - lo] * s^e with rational
 * coefficients.  Canonical form: zero <=> coeffs empty; otherwise the
 * first and last stored coefficients are nonzero.
 */
class LaurentPoly {
 public:
  LaurentPoly() = default;  // zero
  explicit LaurentPoly(const Rat& constant);
  static LaurentPoly monomial(const Rat& c, long e);
  static LaurentPoly from_coeffs(long lo, std::vector<Rat> coeffs);
  static LaurentPoly one() { return LaurentPoly(Rat(1)); }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return c_.size() == 1; }
  // Exponent range of the nonzero terms; only meaningful when nonzero.
  long lo() const { return lo_; }
  long hi() const { return lo_ + static_cast<long>(c_.size()) - 1; }
  Rat coeff(long e) const;
  const Rat& leading() const;   // coefficient of s^hi
  const Rat& trailing() const;  // coefficient of s^lo
  const std::vector<Rat>& coeffs() const { return c_; }

  LaurentPoly operator-() const;
  LaurentPoly shifted(long e) const;  // * s^e
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }
  LaurentPoly& operator-=(const LaurentPoly& b) { return *this = *this - b; }
  LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }
  LaurentPoly scaled(const Rat& c) const;

  bool operator==(const LaurentPoly& o) const {
    return (is_zero() && o.is_zero()) || (lo_ == o.lo_ && c_ == o.c_);
  }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // Substitute a rational value for s.  Needs s_val != 0 when lo() < 0.
  Rat eval(const Rat& s_val) const;
  // True when every exponent is divisible by 4, i.e. the polynomial is a
  // Laurent polynomial in q = s^4 itself.
  bool is_q_laurent() const;
  // Substitute a rational value for q = s^4 (pre: is_q_laurent(), and
  // q_val != 0 when lo() < 0).
  Rat eval_q(const Rat& q_val) const;

  std::string str() const;  // "1 - s^4", "3/4*s^2 + s^3", "0", ...

 private:
  // Trims without canonicalizing coefficients; for internal results whose
  // coefficients already come out of GMP arithmetic in reduced form.
  static LaurentPoly raw(long lo, std::vector<Rat> coeffs);
  void trim();
  long lo_ = 0;
  std::vector<Rat> c_;
};

// Gcd over Q[s] of the polynomial parts (powers of s stripped first, so the
// result g has g.lo() == 0 and g(0) != 0).  Returned primitive over Z with
// positive leading coefficient; gcd(0, b) = normalized b.
LaurentPoly gcd_poly(const LaurentPoly& a, const LaurentPoly& b);
// Exact division; throws Error when the division leaves a remainder.
LaurentPoly divexact_poly(const LaurentPoly& a, const LaurentPoly& b);

/*
 * Element of Q(s), stored as num/den with
 *   - gcd(num, den) = 1 after stripping powers of s,
 *   - den.lo() == 0, den primitive over Z with positive leading coefficient
 *     (all s-powers and rational content are carried by num).
 * The representation of a value is unique, so operator== is structural.
 */
class QScalar {
 public:
  QScalar() : num_(), den_(LaurentPoly::one()) {}  // zero
  QScalar(const Rat& r) : num_(LaurentPoly(r)), den_(LaurentPoly::one()) {}
  QScalar(int n) : QScalar(Rat(n)) {}
  explicit QScalar(const LaurentPoly& p) : num_(p), den_(LaurentPoly::one()) {}
  QScalar(const LaurentPoly& num, const LaurentPoly& den);  // reduces

  static QScalar monomial(const Rat& c, long e) {
    return QScalar(LaurentPoly::monomial(c, e));
  }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_rational() const { return den_.is_one() && (num_.is_zero() || (num_.is_monomial() && num_.lo() == 0)); }

  QScalar operator-() const;
  QScalar inv() const;  // throws DomainError on zero
  friend QScalar operator+(const QScalar& a, const QScalar& b);
  friend QScalar operator-(const QScalar& a, const QScalar& b);
  friend QScalar operator*(const QScalar& a, const QScalar& b);
  friend QScalar operator/(const QScalar& a, const QScalar& b);
  QScalar& operator+=(const QScalar& b) { return *this = *this + b; }
  QScalar& operator-=(const QScalar& b) { return *this = *this - b; }
  QScalar& operator*=(const QScalar& b) { return *this = *this * b; }
  QScalar& operator/=(const QScalar& b) { return *this = *this / b; }
  QScalar pow(long e) const;  // negative e via inv()

  bool operator==(const QScalar& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const QScalar& o) const { return !(*this == o); }

  // Substitute a rational s; throws DomainError on a pole (the diagnostic
  // names the offending denominator) and on s_val = 0 with negative powers.
  Rat eval_exact(const Rat& s_val) const;
  // True when the value lies in Q(q), i.e. both num and den use only
  // exponents divisible by 4 — then it can be evaluated at rational q
  // without a rational fourth root of q existing.
  bool is_q_rational() const;
  Rat eval_exact_q(const Rat& q_val) const;  // pre: is_q_rational()

  std::string str() const;                       // "(1 - s^4)/(s^2)"
  static QScalar parse(const std::string& text);  // inverse of str()

 private:
  struct reduced_tag {};
  QScalar(LaurentPoly num, LaurentPoly den, reduced_tag);
  // Normalizes s-powers / content assuming num, den already coprime.
  static QScalar make_reduced(LaurentPoly num, LaurentPoly den);

  LaurentPoly num_, den_;
};

// s^(4r); the exponent 4r must be an integer (quarter-integer powers of q).
QScalar qpow(const Rat& r);
inline QScalar q_scalar() { return qpow(Rat(1)); }        // q = s^4
inline QScalar s_scalar() { return qpow(Rat(1, 4)); }     // s
QScalar qscalar_one_minus_qpow(const Rat& r);             // 1 - q^r, 4r in Z

// Floating evaluation at s = q_val^(1/4), computed with MPFR at prec_bits
// bits of working precision (relative error ~2^(1-prec_bits) per operation,
// so ~(#ops)*2^(1-prec_bits) overall).  Pre: 0 < q_val < 1.
double eval_float(const QScalar& a, double q_val, long prec_bits = 128);

std::string rat_str(const Rat& r);
Rat parse_rat(const std::string& text);

}  // namespace qaw
