#include "qaw/opcore.hpp"

#include <utility>

namespace qaw {

/* ---------------- PolyX ---------------- */

PolyX::PolyX(const QScalar& constant) {
  if (!constant.is_zero()) c_.push_back(constant);
}

PolyX PolyX::monomial(const QScalar& c, std::size_t k) {
  PolyX p;
  if (!c.is_zero()) {
    p.c_.assign(k + 1, QScalar());
    p.c_[k] = c;
  }
  return p;
}

PolyX PolyX::from_coeffs(std::vector<QScalar> coeffs) {
  PolyX p;
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

void PolyX::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

QScalar PolyX::coeff(std::size_t k) const {
  return k < c_.size() ? c_[k] : QScalar();
}

const QScalar& PolyX::leading() const {
  if (is_zero()) throw Error("leading() of zero polynomial");
  return c_.back();
}

PolyX PolyX::operator-() const {
  PolyX r(*this);
  for (QScalar& c : r.c_) c = -c;
  return r;
}

PolyX operator+(const PolyX& a, const PolyX& b) {
  PolyX r;
  r.c_.resize(std::max(a.c_.size(), b.c_.size()), QScalar());
  for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
  r.trim();
  return r;
}

PolyX operator-(const PolyX& a, const PolyX& b) { return a + (-b); }

PolyX operator*(const PolyX& a, const PolyX& b) {
  if (a.is_zero() || b.is_zero()) return PolyX();
  PolyX r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, QScalar());
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (!b.c_[j].is_zero()) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  r.trim();
  return r;
}

PolyX PolyX::scaled(const QScalar& c) const {
  if (c.is_zero()) return PolyX();
  PolyX r(*this);
  for (QScalar& x : r.c_) x *= c;
  r.trim();
  return r;
}

PolyX operator*(const QScalar& c, const PolyX& p) { return p.scaled(c); }

PolyX mul_2x(const PolyX& p) {
  if (p.is_zero()) return PolyX();
  std::vector<QScalar> c;
  c.reserve(p.coeffs().size() + 1);
  c.push_back(QScalar());
  QScalar two(2);
  for (const QScalar& a : p.coeffs()) c.push_back(two * a);
  return PolyX::from_coeffs(std::move(c));
}

QScalar PolyX::eval(const QScalar& x_val) const {
  QScalar acc;
  for (size_t i = c_.size(); i-- > 0;) {
    acc *= x_val;
    acc += c_[i];
  }
  return acc;
}

Rat PolyX::eval_exact(const Rat& s_val, const Rat& x_val) const {
  Rat acc(0);
  for (size_t i = c_.size(); i-- > 0;) {
    acc *= x_val;
    acc += c_[i].eval_exact(s_val);
  }
  return acc;
}

std::string PolyX::str() const {
  if (is_zero()) return QScalar().str();
  std::string out;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (k > 0) out += " + ";
    out += c_[k].str();
    if (k == 1) out += "*x";
    if (k >= 2) out += "*x^" + std::to_string(k);
  }
  return out;
}

/* ---------------- symmetric Laurent picture ---------------- */

namespace {

void sym_trim(SymLaurent& f) {
  while (!f.c.empty() && f.c.back().is_zero()) f.c.pop_back();
}

void anti_trim(AntiLaurent& g) {
  while (!g.d.empty() && g.d.back().is_zero()) g.d.pop_back();
  if (g.d.size() == 1) g.d.clear();  // only the unused k = 0 slot left
}

// f := x * f, using
//   x * 1            = (z + z^-1)/2,
//   x * (z + z^-1)   = (z^2 + z^-2)/2 + 1,
//   x * (z^k + z^-k) = (z^(k+1) + z^-(k+1))/2 + (z^(k-1) + z^-(k-1))/2.
SymLaurent sym_mul_x(const SymLaurent& f) {
  SymLaurent r;
  if (f.is_zero()) return r;
  r.c.assign(f.c.size() + 1, QScalar());
  const QScalar half(Rat(1, 2));
  for (size_t k = 0; k < f.c.size(); ++k) {
    if (f.c[k].is_zero()) continue;
    QScalar h = half * f.c[k];
    if (k == 0) {
      r.c[1] += h;
    } else if (k == 1) {
      r.c[2] += h;
      r.c[0] += f.c[1];  // (z^0 + z^0)/2 = 1
    } else {
      r.c[k + 1] += h;
      r.c[k - 1] += h;
    }
  }
  sym_trim(r);
  return r;
}

}  // namespace

SymLaurent to_sym(const PolyX& p) {
  SymLaurent acc;
  for (size_t i = p.coeffs().size(); i-- > 0;) {
    acc = sym_mul_x(acc);
    if (!p.coeffs()[i].is_zero()) {
      if (acc.c.empty()) acc.c.assign(1, QScalar());
      acc.c[0] += p.coeffs()[i];
      sym_trim(acc);
    }
  }
  return acc;
}

PolyX from_sym(const SymLaurent& f) {
  PolyX acc(f.coeff(0));
  if (f.top() < 1) return acc;
  PolyX t_prev(QScalar(2));  // t_0 = z^0 + z^0
  PolyX t_cur = mul_2x(PolyX::one());
  for (long k = 1; k <= f.top(); ++k) {
    if (k > 1) {
      PolyX t_next = mul_2x(t_cur) - t_prev;
      t_prev = std::move(t_cur);
      t_cur = std::move(t_next);
    }
    const QScalar& ck = f.c[static_cast<size_t>(k)];
    if (!ck.is_zero()) acc += ck * t_cur;
  }
  return acc;
}

AntiLaurent delta_q(const SymLaurent& f) {
  AntiLaurent g;
  if (f.top() < 1) return g;
  g.d.assign(f.c.size(), QScalar());
  for (long k = 1; k <= f.top(); ++k) {
    const QScalar& ck = f.c[static_cast<size_t>(k)];
    if (ck.is_zero()) continue;
    QScalar factor = QScalar::monomial(Rat(1), 2 * k) - QScalar::monomial(Rat(1), -2 * k);
    g.d[static_cast<size_t>(k)] = factor * ck;
  }
  anti_trim(g);
  return g;
}

SymLaurent div_z_antisym(const AntiLaurent& g) {
  SymLaurent e;
  if (g.is_zero()) return e;
  long top = g.top();  // >= 1 after trimming
  e.c.assign(static_cast<size_t>(top), QScalar());
  // (z - z^-1) * (z^j + z^-j) = (z^(j+1) - z^-(j+1)) - (z^(j-1) - z^-(j-1)),
  // so d_k = e_{k-1} - e_{k+1}; solve downward from k = top.
  for (long k = top; k >= 1; --k) {
    QScalar above = (k + 1 < static_cast<long>(e.c.size())) ? e.c[static_cast<size_t>(k + 1)]
                                                            : QScalar();
    e.c[static_cast<size_t>(k - 1)] = g.coeff(static_cast<size_t>(k)) + above;
  }
  sym_trim(e);
  // Multiply back; any mismatch means the representation invariants broke.
  for (long k = 1; k <= top + 1; ++k) {
    QScalar prod = e.coeff(static_cast<size_t>(k - 1)) - e.coeff(static_cast<size_t>(k + 1));
    if (prod != g.coeff(static_cast<size_t>(k)))
      throw Error("internal: division by (z - z^-1) left a remainder");
  }
  return e;
}

PolyX dq(const PolyX& p) {
  if (p.degree() < 1) return PolyX();
  AntiLaurent g = delta_q(to_sym(p));
  SymLaurent e = div_z_antisym(g);
  // delta_q(x) = (s^2 - s^-2)(z - z^-1)/2, so divide by (s^2 - s^-2)/2.
  QScalar factor =
      QScalar(2) / (QScalar::monomial(Rat(1), 2) - QScalar::monomial(Rat(1), -2));
  return from_sym(e).scaled(factor);
}

PolyX dq_iter(PolyX p, unsigned k) {
  for (; k > 0 && !p.is_zero(); --k) p = dq(p);
  return p;
}

}  // namespace qaw
