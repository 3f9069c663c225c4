#include "qaw/alphapoly.hpp"

#include <algorithm>
#include <utility>

namespace qaw {

AlphaPoly::AlphaPoly(const QScalar& constant) {
  if (!constant.is_zero()) c_.push_back(constant);
}

AlphaPoly AlphaPoly::monomial(const QScalar& c, std::size_t k) {
  AlphaPoly p;
  if (!c.is_zero()) {
    p.c_.assign(k + 1, QScalar());
    p.c_[k] = c;
  }
  return p;
}

AlphaPoly AlphaPoly::from_coeffs(std::vector<QScalar> coeffs) {
  AlphaPoly p;
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

void AlphaPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

QScalar AlphaPoly::coeff(std::size_t k) const {
  return k < c_.size() ? c_[k] : QScalar();
}

const QScalar& AlphaPoly::leading() const {
  if (is_zero()) throw Error("leading() of zero polynomial");
  return c_.back();
}

AlphaPoly AlphaPoly::operator-() const {
  AlphaPoly r(*this);
  for (QScalar& c : r.c_) c = -c;
  return r;
}

AlphaPoly operator+(const AlphaPoly& a, const AlphaPoly& b) {
  AlphaPoly r;
  r.c_.resize(std::max(a.c_.size(), b.c_.size()), QScalar());
  for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
  r.trim();
  return r;
}

AlphaPoly operator-(const AlphaPoly& a, const AlphaPoly& b) { return a + (-b); }

AlphaPoly operator*(const AlphaPoly& a, const AlphaPoly& b) {
  if (a.is_zero() || b.is_zero()) return AlphaPoly();
  AlphaPoly r;
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

AlphaPoly AlphaPoly::scaled(const QScalar& c) const {
  if (c.is_zero()) return AlphaPoly();
  AlphaPoly r(*this);
  for (QScalar& x : r.c_) x *= c;
  r.trim();
  return r;
}

AlphaPoly operator*(const QScalar& c, const AlphaPoly& p) { return p.scaled(c); }

QScalar AlphaPoly::eval(const QScalar& alpha_val) const {
  QScalar acc;
  for (size_t i = c_.size(); i-- > 0;) {
    acc *= alpha_val;
    acc += c_[i];
  }
  return acc;
}

std::string AlphaPoly::str() const {
  if (is_zero()) return QScalar().str();
  std::string out;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (k > 0) out += " + ";
    out += c_[k].str();
    if (k == 1) out += "*alpha";
    if (k >= 2) out += "*alpha^" + std::to_string(k);
  }
  return out;
}

}  // namespace qaw
