#include "qaw/scalar.hpp"

#include <algorithm>
#include <utility>

namespace qaw {

namespace {
// GMP rationals built from separate numerator/denominator (or parsed from
// "a/b" text) are not reduced automatically; every public entry point that
// accepts caller-supplied Rat values funnels them through here so the rest
// of the library can rely on canonical mpq operands.
Rat canonical_rat(const Rat& r) {
  if (r.get_den() == 1) return r;
  Rat c(r);
  c.canonicalize();
  return c;
}
}  // namespace

LaurentPoly::LaurentPoly(const Rat& constant) {
  Rat c = canonical_rat(constant);
  if (c != 0) {
    lo_ = 0;
    c_.push_back(std::move(c));
  }
}

LaurentPoly LaurentPoly::monomial(const Rat& c, long e) {
  LaurentPoly p;
  Rat cc = canonical_rat(c);
  if (cc != 0) {
    p.lo_ = e;
    p.c_.push_back(std::move(cc));
  }
  return p;
}

LaurentPoly LaurentPoly::from_coeffs(long lo, std::vector<Rat> coeffs) {
  for (Rat& c : coeffs) {
    if (c.get_den() != 1) c.canonicalize();
  }
  LaurentPoly p;
  p.lo_ = lo;
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

LaurentPoly LaurentPoly::raw(long lo, std::vector<Rat> coeffs) {
  LaurentPoly p;
  p.lo_ = lo;
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

void LaurentPoly::trim() {
  size_t drop_front = 0;
  while (drop_front < c_.size() && c_[drop_front] == 0) ++drop_front;
  if (drop_front == c_.size()) {
    c_.clear();
    lo_ = 0;
    return;
  }
  size_t last = c_.size();
  while (last > drop_front && c_[last - 1] == 0) --last;
  if (drop_front > 0 || last < c_.size()) {
    c_ = std::vector<Rat>(c_.begin() + drop_front, c_.begin() + last);
    lo_ += static_cast<long>(drop_front);
  }
}

bool LaurentPoly::is_one() const {
  return c_.size() == 1 && lo_ == 0 && c_[0] == 1;
}

Rat LaurentPoly::coeff(long e) const {
  if (is_zero() || e < lo_ || e > hi()) return Rat(0);
  return c_[static_cast<size_t>(e - lo_)];
}

const Rat& LaurentPoly::leading() const {
  if (is_zero()) throw Error("leading() of zero polynomial");
  return c_.back();
}

const Rat& LaurentPoly::trailing() const {
  if (is_zero()) throw Error("trailing() of zero polynomial");
  return c_.front();
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(*this);
  for (Rat& c : r.c_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::shifted(long e) const {
  LaurentPoly r(*this);
  if (!r.is_zero()) r.lo_ += e;
  return r;
}

LaurentPoly LaurentPoly::scaled(const Rat& c) const {
  if (c == 0) return LaurentPoly();
  LaurentPoly r(*this);
  for (Rat& x : r.c_) x *= c;
  return r;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  long lo = std::min(a.lo_, b.lo_);
  long hi = std::max(a.hi(), b.hi());
  std::vector<Rat> c(static_cast<size_t>(hi - lo + 1), Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[static_cast<size_t>(a.lo_ - lo) + i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[static_cast<size_t>(b.lo_ - lo) + i] += b.c_[i];
  return LaurentPoly::raw(lo, std::move(c));
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  return a + (-b);
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return LaurentPoly();
  std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] != 0) c[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return LaurentPoly::raw(a.lo_ + b.lo_, std::move(c));
}

Rat LaurentPoly::eval(const Rat& s_val_in) const {
  Rat s_val = canonical_rat(s_val_in);
  if (is_zero()) return Rat(0);
  if (s_val == 0) {
    if (lo_ < 0) throw DomainError("evaluation at s = 0 with negative powers of s");
    return coeff(0);
  }
  // Horner on the polynomial part, then the stray power s^lo.
  Rat acc(0);
  for (size_t i = c_.size(); i-- > 0;) {
    acc *= s_val;
    acc += c_[i];
  }
  if (lo_ != 0) {
    Rat p(1);
    Rat base = lo_ > 0 ? s_val : Rat(1 / s_val);
    long e = lo_ > 0 ? lo_ : -lo_;
    for (; e > 0; --e) p *= base;
    acc *= p;
  }
  return acc;
}

bool LaurentPoly::is_q_laurent() const {
  if (is_zero()) return true;
  for (size_t i = 0; i < c_.size(); ++i) {
    long e = lo_ + static_cast<long>(i);
    if (c_[i] != 0 && (e % 4 + 4) % 4 != 0) return false;
  }
  return true;
}

Rat LaurentPoly::eval_q(const Rat& q_val_in) const {
  Rat q_val = canonical_rat(q_val_in);
  if (!is_q_laurent()) throw DomainError("not a Laurent polynomial in q = s^4");
  if (is_zero()) return Rat(0);
  if (q_val == 0) {
    if (lo_ < 0) throw DomainError("evaluation at q = 0 with negative powers of q");
    return coeff(0);
  }
  Rat acc(0);
  long hi_e = hi();
  long top = hi_e >= 0 ? hi_e / 4 : -((-hi_e + 3) / 4);
  long bot = lo_ >= 0 ? lo_ / 4 : -((-lo_ + 3) / 4);
  for (long m = top; m >= bot; --m) {
    acc *= q_val;
    acc += coeff(4 * m);
  }
  if (bot != 0) {
    Rat p(1);
    Rat base = bot > 0 ? q_val : Rat(1 / q_val);
    for (long e = bot > 0 ? bot : -bot; e > 0; --e) p *= base;
    acc *= p;
  }
  return acc;
}

/* ---------------- formatting ---------------- */

std::string rat_str(const Rat& r) {
  return r.get_str();
}

static void append_term(std::string& out, const Rat& c, long e, bool first) {
  Rat mag = c < 0 ? Rat(-c) : c;
  if (first) {
    if (c < 0) out += "-";
  } else {
    out += c < 0 ? " - " : " + ";
  }
  if (e == 0) {
    out += rat_str(mag);
    return;
  }
  if (mag != 1) {
    out += rat_str(mag);
    out += "*";
  }
  out += "s";
  if (e != 1) {
    out += "^";
    out += std::to_string(e);
  }
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    append_term(out, c_[i], lo_ + static_cast<long>(i), first);
    first = false;
  }
  return out;
}

/* ---------------- gcd machinery over Z[s] ----------------
 *
 * QScalar canonicalization reduces num/den by their gcd over Q[s].  The
 * inputs here can reach degrees in the high hundreds (products such as
 * (q;q)_16 expand to degree 4*136 in s), where a naive rational Euclid
 * blows up.  We use the integer-packing heuristic gcd (evaluate both
 * polynomials at a large integer, take an integer gcd, read the candidate
 * back off in balanced base-xi digits, verify by exact division) with a
 * subresultant PRS as the deterministic fallback.
 */

namespace {

using ZPoly = std::vector<Int>;  // dense, index = exponent, trimmed

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

long zdeg(const ZPoly& p) { return static_cast<long>(p.size()) - 1; }

Int zcontent(const ZPoly& p) {
  Int g(0);
  for (const Int& c : p) {
    if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void zdivide_scalar(ZPoly& p, const Int& d) {
  for (Int& c : p) {
    Int r;
    mpz_fdiv_qr(c.get_mpz_t(), r.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    if (r != 0) throw Error("internal: inexact scalar division in gcd");
  }
}

void zprimitive(ZPoly& p) {
  ztrim(p);
  if (p.empty()) return;
  Int g = zcontent(p);
  if (p.back() < 0) g = -g;
  if (g != 1) zdivide_scalar(p, g);
}

Int zeval(const ZPoly& p, const Int& x) {
  Int acc(0);
  for (size_t i = p.size(); i-- > 0;) {
    acc *= x;
    acc += p[i];
  }
  return acc;
}

Int zmaxabs(const ZPoly& p) {
  Int m(0);
  for (const Int& c : p) {
    Int a = c >= 0 ? c : Int(-c);
    if (a > m) m = a;
  }
  return m;
}

// Exact division test: on success quotient is discarded, returns true.
bool zdivides(const ZPoly& num, const ZPoly& div) {
  if (div.empty()) return num.empty();
  if (num.empty()) return true;
  if (zdeg(num) < zdeg(div)) return false;
  ZPoly rem = num;
  const Int& lc = div.back();
  for (long k = zdeg(rem); k >= zdeg(div); --k) {
    Int& top = rem[static_cast<size_t>(k)];
    if (top == 0) continue;
    Int qc, r;
    mpz_fdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    if (r != 0) return false;
    for (long j = 0; j <= zdeg(div); ++j)
      rem[static_cast<size_t>(k - zdeg(div) + j)] -= qc * div[static_cast<size_t>(j)];
  }
  for (const Int& c : rem)
    if (c != 0) return false;
  return true;
}

// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b.  The full power of
// lc is required even when cancellation skips degrees, or the subresultant
// divisions downstream stop being exact.
ZPoly zprem(ZPoly a, const ZPoly& b) {
  const Int& lc = b.back();
  long db = zdeg(b);
  long needed = zdeg(a) - db + 1;  // total factors of lc to apply
  while (zdeg(a) >= db && !a.empty()) {
    Int top = a.back();
    long shift = zdeg(a) - db;
    for (Int& c : a) c *= lc;
    --needed;
    for (long j = 0; j <= db; ++j)
      a[static_cast<size_t>(shift + j)] -= top * b[static_cast<size_t>(j)];
    ztrim(a);
  }
  for (; needed > 0; --needed)
    for (Int& c : a) c *= lc;
  return a;
}

ZPoly zgcd_subresultant(ZPoly a, ZPoly b) {
  if (zdeg(a) < zdeg(b)) std::swap(a, b);
  Int g(1), h(1);
  while (true) {
    if (b.empty()) {
      zprimitive(a);
      return a;
    }
    if (zdeg(b) == 0) return ZPoly{Int(1)};
    long d = zdeg(a) - zdeg(b);
    ZPoly r = zprem(a, b);
    a = b;
    Int divisor = g;
    for (long i = 0; i < d; ++i) divisor *= h;
    b = std::move(r);
    if (!b.empty()) zdivide_scalar(b, divisor);
    g = a.back();
    if (d > 0) {
      Int gd(1);
      for (long i = 0; i < d; ++i) gd *= g;
      Int hd(1);
      for (long i = 0; i + 1 < d; ++i) hd *= h;
      Int rem;
      mpz_fdiv_qr(h.get_mpz_t(), rem.get_mpz_t(), gd.get_mpz_t(), hd.get_mpz_t());
      if (rem != 0) throw Error("internal: subresultant bookkeeping");
    }
  }
}

// libgmp-backed heuristic gcd for primitive inputs; verified, with
// deterministic fallback, so the result is always the true gcd.
ZPoly zgcd(ZPoly a, ZPoly b) {
  zprimitive(a);
  zprimitive(b);
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (zdeg(a) == 0 || zdeg(b) == 0) return ZPoly{Int(1)};
  Int xi = 2 + 2 * std::max(zmaxabs(a), zmaxabs(b));
  for (int tries = 0; tries < 5; ++tries) {
    Int va = zeval(a, xi), vb = zeval(b, xi);
    Int gamma;
    mpz_gcd(gamma.get_mpz_t(), va.get_mpz_t(), vb.get_mpz_t());
    ZPoly cand;
    Int rest = gamma;
    while (rest != 0) {
      Int digit;
      mpz_fdiv_r(digit.get_mpz_t(), rest.get_mpz_t(), xi.get_mpz_t());
      if (digit * 2 > xi) digit -= xi;
      cand.push_back(digit);
      rest = (rest - digit) / xi;
    }
    zprimitive(cand);
    if (!cand.empty() && zdivides(a, cand) && zdivides(b, cand)) return cand;
    xi = xi * 2 + 29;
  }
  return zgcd_subresultant(std::move(a), std::move(b));
}

// Shift to lo = 0 and clear rational content; returns the primitive Z part.
ZPoly to_primitive_zpoly(const LaurentPoly& p) {
  Int den_lcm(1);
  for (const Rat& c : p.coeffs())
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  ZPoly z;
  z.reserve(p.coeffs().size());
  for (const Rat& c : p.coeffs()) z.push_back(Int(c.get_num() * (den_lcm / c.get_den())));
  zprimitive(z);
  return z;
}

LaurentPoly from_zpoly(const ZPoly& z) {
  std::vector<Rat> c;
  c.reserve(z.size());
  for (const Int& x : z) c.emplace_back(x);
  return LaurentPoly::from_coeffs(0, std::move(c));
}

}  // namespace

LaurentPoly gcd_poly(const LaurentPoly& a, const LaurentPoly& b) {
  auto normalized = [](const LaurentPoly& p) {
    ZPoly z = to_primitive_zpoly(p.shifted(-p.lo()));
    return from_zpoly(z);
  };
  if (a.is_zero()) return b.is_zero() ? LaurentPoly() : normalized(b);
  if (b.is_zero()) return normalized(a);
  // Powers of s never divide the stripped parts, so gcd is s-free.
  if (a.is_monomial() || b.is_monomial()) return LaurentPoly::one();
  ZPoly za = to_primitive_zpoly(a.shifted(-a.lo()));
  ZPoly zb = to_primitive_zpoly(b.shifted(-b.lo()));
  if (za == zb) return from_zpoly(za);
  return from_zpoly(zgcd(std::move(za), std::move(zb)));
}

LaurentPoly divexact_poly(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  if (a.is_zero()) return LaurentPoly();
  if (b.is_monomial()) return a.shifted(-b.lo()).scaled(Rat(1) / b.trailing());
  long lo = a.lo() - b.lo();
  std::vector<Rat> rem(a.coeffs());
  const std::vector<Rat>& d = b.coeffs();
  long na = static_cast<long>(rem.size()), nb = static_cast<long>(d.size());
  if (na < nb) throw Error("inexact polynomial division");
  std::vector<Rat> quot(static_cast<size_t>(na - nb + 1), Rat(0));
  for (long k = na - nb; k >= 0; --k) {
    Rat qc = rem[static_cast<size_t>(k + nb - 1)] / d.back();
    quot[static_cast<size_t>(k)] = qc;
    if (qc != 0)
      for (long j = 0; j < nb; ++j) rem[static_cast<size_t>(k + j)] -= qc * d[static_cast<size_t>(j)];
  }
  for (const Rat& c : rem)
    if (c != 0) throw Error("inexact polynomial division");
  return LaurentPoly::from_coeffs(lo, std::move(quot));
}

}  // namespace qaw
