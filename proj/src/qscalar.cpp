#include "qaw/scalar.hpp"

#include <mpfr.h>

#include <cctype>
#include <utility>

namespace qaw {

/* ---------------- canonical form ---------------- */

namespace {

// Rational content gcd(numerators)/lcm(denominators), signed so that
// dividing by it leaves a primitive integer polynomial with positive
// leading coefficient.
Rat signed_content(const LaurentPoly& p) {
  Int num_gcd(0), den_lcm(1);
  for (const Rat& c : p.coeffs()) {
    if (c == 0) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rat content(num_gcd, den_lcm);
  content.canonicalize();
  return p.leading() < 0 ? Rat(-content) : content;
}

}  // namespace

QScalar::QScalar(LaurentPoly num, LaurentPoly den, reduced_tag)
    : num_(std::move(num)), den_(std::move(den)) {}

QScalar QScalar::make_reduced(LaurentPoly num, LaurentPoly den) {
  if (den.is_zero()) throw DomainError("division by zero");
  if (num.is_zero()) return QScalar();
  long shift = den.lo();
  if (shift != 0) {
    den = den.shifted(-shift);
    num = num.shifted(-shift);
  }
  Rat c = signed_content(den);
  if (c != 1) {
    Rat ic = 1 / c;
    den = den.scaled(ic);
    num = num.scaled(ic);
  }
  return QScalar(std::move(num), std::move(den), reduced_tag{});
}

QScalar::QScalar(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw DomainError("division by zero");
  if (num.is_zero()) {
    *this = QScalar();
    return;
  }
  if (den.is_monomial()) {
    *this = make_reduced(num, den);
    return;
  }
  LaurentPoly g = gcd_poly(num, den);
  if (g.is_one()) {
    *this = make_reduced(num, den);
  } else {
    *this = make_reduced(divexact_poly(num, g), divexact_poly(den, g));
  }
}

QScalar QScalar::operator-() const {
  return QScalar(-num_, den_, reduced_tag{});
}

QScalar QScalar::inv() const {
  if (is_zero()) throw DomainError("division by zero");
  return make_reduced(den_, num_);
}

QScalar operator*(const QScalar& a, const QScalar& b) {
  if (a.is_zero() || b.is_zero()) return QScalar();
  if (a.den_.is_one() && b.den_.is_one())
    return QScalar(a.num_ * b.num_, LaurentPoly::one(), QScalar::reduced_tag{});
  // Cross-reduce first so the product is born coprime.
  LaurentPoly g1 = gcd_poly(a.num_, b.den_);
  LaurentPoly g2 = gcd_poly(b.num_, a.den_);
  const LaurentPoly n1 = g1.is_one() ? a.num_ : divexact_poly(a.num_, g1);
  const LaurentPoly n2 = g2.is_one() ? b.num_ : divexact_poly(b.num_, g2);
  const LaurentPoly d1 = g2.is_one() ? a.den_ : divexact_poly(a.den_, g2);
  const LaurentPoly d2 = g1.is_one() ? b.den_ : divexact_poly(b.den_, g1);
  return QScalar::make_reduced(n1 * n2, d1 * d2);
}

QScalar operator/(const QScalar& a, const QScalar& b) {
  return a * b.inv();
}

QScalar operator+(const QScalar& a, const QScalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    LaurentPoly n = a.num_ + b.num_;
    if (a.den_.is_one()) return QScalar(std::move(n), LaurentPoly::one(), QScalar::reduced_tag{});
    return QScalar(n, a.den_);
  }
  LaurentPoly g = gcd_poly(a.den_, b.den_);
  if (g.is_one()) {
    // Denominators coprime: numerator is automatically coprime to them.
    return QScalar::make_reduced(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  LaurentPoly da = divexact_poly(a.den_, g);
  LaurentPoly db = divexact_poly(b.den_, g);
  LaurentPoly n = a.num_ * db + b.num_ * da;
  // Any leftover common factor hides inside g only.
  LaurentPoly t = gcd_poly(n, g);
  if (!t.is_one()) {
    n = divexact_poly(n, t);
    g = divexact_poly(g, t);
  }
  return QScalar::make_reduced(std::move(n), da * db * g);
}

QScalar operator-(const QScalar& a, const QScalar& b) {
  return a + (-b);
}

QScalar QScalar::pow(long e) const {
  if (e == 0) return QScalar(Rat(1));
  if (e < 0) return inv().pow(-e);
  QScalar base = *this, acc(Rat(1));
  unsigned long u = static_cast<unsigned long>(e);
  while (u > 0) {
    if (u & 1) acc *= base;
    base = (u >>= 1) ? base * base : base;
  }
  return acc;
}

/* ---------------- evaluation ---------------- */

Rat QScalar::eval_exact(const Rat& s_val) const {
  Rat d = den_.eval(s_val);
  if (d == 0)
    throw DomainError("pole at s = " + rat_str(s_val) + ": denominator " + den_.str() + " vanishes");
  return num_.eval(s_val) / d;
}

bool QScalar::is_q_rational() const {
  return num_.is_q_laurent() && den_.is_q_laurent();
}

Rat QScalar::eval_exact_q(const Rat& q_val) const {
  if (!is_q_rational())
    throw DomainError("scalar is not a rational function of q alone: " + str());
  Rat d = den_.eval_q(q_val);
  if (d == 0)
    throw DomainError("pole at q = " + rat_str(q_val) + ": denominator " + den_.str() + " vanishes");
  return num_.eval_q(q_val) / d;
}

namespace {

void eval_laurent_mpfr(const LaurentPoly& p, const mpfr_t s, mpfr_t out, mpfr_prec_t prec) {
  mpfr_set_zero(out, 1);
  if (p.is_zero()) return;
  mpfr_t c;
  mpfr_init2(c, prec);
  for (long e = p.hi(); e >= p.lo(); --e) {
    mpfr_mul(out, out, s, MPFR_RNDN);
    mpfr_set_q(c, p.coeff(e).get_mpq_t(), MPFR_RNDN);
    mpfr_add(out, out, c, MPFR_RNDN);
  }
  if (p.lo() != 0) {
    mpfr_pow_si(c, s, p.lo(), MPFR_RNDN);
    mpfr_mul(out, out, c, MPFR_RNDN);
  }
  mpfr_clear(c);
}

}  // namespace

double eval_float(const QScalar& a, double q_val, long prec_bits) {
  if (!(q_val > 0.0 && q_val < 1.0))
    throw DomainError("floating evaluation requires 0 < q < 1");
  if (prec_bits < 16) throw DomainError("precision too small");
  mpfr_prec_t prec = static_cast<mpfr_prec_t>(prec_bits);
  mpfr_t s, n, d;
  mpfr_init2(s, prec);
  mpfr_init2(n, prec);
  mpfr_init2(d, prec);
  mpfr_set_d(s, q_val, MPFR_RNDN);
  mpfr_rootn_ui(s, s, 4, MPFR_RNDN);
  eval_laurent_mpfr(a.num(), s, n, prec);
  eval_laurent_mpfr(a.den(), s, d, prec);
  if (mpfr_zero_p(d)) {
    mpfr_clear(s); mpfr_clear(n); mpfr_clear(d);
    throw DomainError("pole at q = " + std::to_string(q_val));
  }
  mpfr_div(n, n, d, MPFR_RNDN);
  double out = mpfr_get_d(n, MPFR_RNDN);
  mpfr_clear(s);
  mpfr_clear(n);
  mpfr_clear(d);
  return out;
}

/* ---------------- q-powers ---------------- */

QScalar qpow(const Rat& r) {
  Rat e4 = r;
  e4.canonicalize();  // tolerate unreduced input such as Rat(2, 8)
  e4 *= 4;
  if (e4.get_den() != 1)
    throw DomainError("q^(" + rat_str(r) + ") is not a Laurent monomial in s = q^(1/4)");
  if (!e4.get_num().fits_slong_p()) throw DomainError("exponent overflow in qpow");
  return QScalar::monomial(Rat(1), e4.get_num().get_si());
}

QScalar qscalar_one_minus_qpow(const Rat& r) {
  return QScalar(Rat(1)) - qpow(r);
}

/* ---------------- text form ---------------- */

std::string QScalar::str() const {
  // Keep printed exponents nonnegative: shift any s^-m in num over to den.
  long shift = (!num_.is_zero() && num_.lo() < 0) ? -num_.lo() : 0;
  return "(" + num_.shifted(shift).str() + ")/(" + den_.shifted(shift).str() + ")";
}

namespace {

struct Scanner {
  const std::string& text;
  size_t pos = 0;
  explicit Scanner(const std::string& t) : text(t) {}
  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what + " at position " + std::to_string(pos) + " in \"" + text + "\"");
  }
  std::string integer() {
    skip_ws();
    std::string out;
    if (pos < text.size() && text[pos] == '-') {
      out += '-';
      ++pos;
    }
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) out += text[pos++];
    if (out.empty() || out == "-") fail("expected integer");
    return out;
  }
};

Rat scan_rat(Scanner& sc) {
  std::string num = sc.integer();
  std::string den = "1";
  size_t save = sc.pos;
  if (sc.eat('/')) {
    if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
      den = sc.integer();
    } else {
      sc.pos = save;  // the '/' belonged to the (num)/(den) separator
    }
  }
  Rat r(num + "/" + den);
  r.canonicalize();
  return r;
}

long scan_exponent(Scanner& sc) {
  if (!sc.eat('s')) sc.fail("expected s");
  if (sc.eat('^')) return std::stol(sc.integer());
  return 1;
}

LaurentPoly scan_poly(Scanner& sc) {
  LaurentPoly acc;
  bool first = true;
  while (true) {
    sc.skip_ws();
    int sign = 1;
    if (sc.eat('+')) {
      if (first) sc.fail("unexpected +");
    } else if (sc.eat('-')) {
      sign = -1;
    } else if (!first) {
      break;
    }
    Rat coeff(sign);
    long expo = 0;
    char c = sc.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      coeff *= scan_rat(sc);
      size_t save = sc.pos;
      bool star = sc.eat('*');
      if (sc.peek() == 's') {
        expo = scan_exponent(sc);
      } else if (star) {
        sc.pos = save;
        sc.fail("expected s after *");
      }
    } else if (c == 's') {
      expo = scan_exponent(sc);
    } else {
      sc.fail("expected term");
    }
    acc += LaurentPoly::monomial(coeff, expo);
    first = false;
  }
  if (first) sc.fail("empty polynomial");
  return acc;
}

}  // namespace

QScalar QScalar::parse(const std::string& text) {
  Scanner sc(text);
  if (!sc.eat('(')) sc.fail("expected (");
  LaurentPoly num = scan_poly(sc);
  if (!sc.eat(')')) sc.fail("expected )");
  if (!sc.eat('/')) sc.fail("expected /");
  if (!sc.eat('(')) sc.fail("expected (");
  LaurentPoly den = scan_poly(sc);
  if (!sc.eat(')')) sc.fail("expected )");
  sc.skip_ws();
  if (sc.pos != text.size()) sc.fail("trailing characters");
  return QScalar(num, den);
}

Rat parse_rat(const std::string& text) {
  try {
    Rat r(text);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw ParseError("not a rational number: \"" + text + "\"");
  }
}

}  // namespace qaw
