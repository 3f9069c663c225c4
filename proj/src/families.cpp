#include "qaw/families.hpp"

#include <mutex>
#include <string>
#include <utility>

namespace qaw {

/* ---------------- SeriesT ---------------- */

SeriesT::SeriesT(long order) {
  if (order < 0) throw DomainError("series order must be nonnegative");
  c_.assign(static_cast<size_t>(order) + 1, PolyX());
}

SeriesT SeriesT::one(long order) {
  SeriesT s(order);
  s.c_[0] = PolyX::one();
  return s;
}

const PolyX& SeriesT::coeff(std::size_t n) const {
  if (n >= c_.size()) throw Error("series coefficient index beyond truncation order");
  return c_[n];
}

void SeriesT::set_coeff(std::size_t n, PolyX p) {
  if (n >= c_.size()) throw Error("series coefficient index beyond truncation order");
  c_[n] = std::move(p);
}

namespace {
void require_same_order(const SeriesT& a, const SeriesT& b) {
  if (a.order() != b.order())
    throw Error("series truncation orders differ: " + std::to_string(a.order()) + " vs " +
                std::to_string(b.order()));
}
}  // namespace

SeriesT operator+(const SeriesT& a, const SeriesT& b) {
  require_same_order(a, b);
  SeriesT r(a.order());
  for (size_t n = 0; n < r.c_.size(); ++n) r.c_[n] = a.c_[n] + b.c_[n];
  return r;
}

SeriesT operator-(const SeriesT& a, const SeriesT& b) {
  require_same_order(a, b);
  SeriesT r(a.order());
  for (size_t n = 0; n < r.c_.size(); ++n) r.c_[n] = a.c_[n] - b.c_[n];
  return r;
}

SeriesT operator*(const SeriesT& a, const SeriesT& b) {
  require_same_order(a, b);
  SeriesT r(a.order());
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; i + j < r.c_.size(); ++j) {
      if (!b.c_[j].is_zero()) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return r;
}

SeriesT SeriesT::scaled(const QScalar& c) const {
  SeriesT r(order());
  for (size_t n = 0; n < c_.size(); ++n) r.c_[n] = c_[n].scaled(c);
  return r;
}

SeriesT SeriesT::scale_t(const QScalar& c) const {
  SeriesT r(order());
  QScalar p(1);
  for (size_t n = 0; n < c_.size(); ++n) {
    r.c_[n] = c_[n].scaled(p);
    p *= c;
  }
  return r;
}

SeriesT SeriesT::shift_t() const {
  SeriesT r(order());
  for (size_t n = 1; n < c_.size(); ++n) r.c_[n] = c_[n - 1];
  return r;
}

/* ---------------- basic scalars ---------------- */

QScalar qpoch(const QScalar& a, const QScalar& base, unsigned n) {
  QScalar prod(1);
  QScalar term = a;
  for (unsigned j = 0; j < n; ++j) {
    prod *= QScalar(1) - term;
    if (j + 1 < n) term *= base;
  }
  return prod;
}

QScalar c_coeff(unsigned k) {
  long kl = static_cast<long>(k);
  QScalar num = (QScalar(1) - q_scalar()).pow(kl) *
                QScalar::monomial(Rat(1), kl * (kl - 1));  // q^(k(k-1)/4) = s^(k(k-1))
  QScalar den = QScalar(Rat(Int(1) << k)) * qpoch(q_scalar(), q_scalar(), k);
  return num / den;
}

/* ---------------- polynomial families ---------------- */

PolyX psi(unsigned n) {
  static std::mutex mu;
  static std::vector<PolyX> cache;
  std::scoped_lock lock(mu);
  if (cache.empty()) {
    cache.push_back(PolyX::one());
    cache.push_back(mul_2x(PolyX::one()));
  }
  while (cache.size() <= n) {
    unsigned m = static_cast<unsigned>(cache.size()) - 2;  // recurrence at index m
    long e = static_cast<long>(m) + 1;
    QScalar factor = (QScalar(1) - qpow(Rat(e))) * (QScalar(1) - qpow(Rat(-e)));
    cache.push_back(mul_2x(mul_2x(cache[m])) - factor * cache[m]);
  }
  return cache[n];
}

PolyX hermite(unsigned n) {
  static std::mutex mu;
  static std::vector<PolyX> cache;
  std::scoped_lock lock(mu);
  if (cache.empty()) {
    cache.push_back(PolyX::one());
    cache.push_back(mul_2x(PolyX::one()));
  }
  while (cache.size() <= n) {
    unsigned m = static_cast<unsigned>(cache.size()) - 1;  // H_{m+1} from H_m, H_{m-1}
    QScalar gap = QScalar(1) - qpow(Rat(static_cast<long>(m)));
    cache.push_back(mul_2x(cache[m]) - gap * cache[m - 1]);
  }
  return cache[n];
}

PolyX h_small(unsigned n) { return c_coeff(n) * hermite(n); }

SeriesT big_e_series(unsigned order) {
  SeriesT s(static_cast<long>(order));
  for (unsigned n = 0; n <= order; ++n) s.set_coeff(n, c_coeff(n) * psi(n));
  return s;
}

SeriesT qexp_trunc(const QScalar& arg_scale, const QScalar& base, QExpVariant variant,
                   unsigned order) {
  SeriesT s(static_cast<long>(order));
  QScalar arg_pow(1);
  for (unsigned k = 0; k <= order; ++k) {
    QScalar term = arg_pow / qpoch(base, base, k);
    if (variant == QExpVariant::reciprocal) {
      long kl = static_cast<long>(k);
      term *= base.pow(kl * (kl - 1) / 2);
      if (k % 2 == 1) term = -term;
    }
    s.set_coeff(k, PolyX(term));
    arg_pow *= arg_scale;
  }
  return s;
}

SeriesT a_series_closed(unsigned order) {
  SeriesT s(static_cast<long>(order));
  QScalar q2 = q_scalar() * q_scalar();
  for (unsigned j = 0; 2 * j <= order; ++j) {
    long jl = static_cast<long>(j);
    QScalar a = (QScalar(1) - q_scalar()).pow(2 * jl) *
                QScalar::monomial(Rat(1), 4 * jl * jl - 6 * jl) /  // q^(j(j-3/2))
                (QScalar(Rat(Int(1) << (2 * j))) * qpoch(q2, q2, j));
    if (j % 2 == 1) a = -a;
    s.set_coeff(2 * j, PolyX(a));
  }
  return s;
}

namespace {

// The three-term constraint system tying the a-coefficients to the doubled
// h-recurrence; zero for all n >= 0, 0 <= k <= n+2 at the true solution.
QScalar a_system_residual(const std::vector<QScalar>& a, long n, long k) {
  auto at = [&](long i) { return i >= 0 ? a[static_cast<size_t>(i)] : QScalar(); };
  QScalar one(1);
  QScalar q = q_scalar();
  QScalar lead = QScalar(4) / (one - q).pow(2) * qpow(Rat(-2 * n - 1, 2)) *
                 (one - qpow(Rat(n - k + 2))) * (one - qpow(Rat(n + k + 1)));
  QScalar mid = qpow(Rat(-k - 1)) *
                (one + qpow(Rat(2 * k + 2)) - qpow(Rat(n + k + 1)) - qpow(Rat(n + k + 2)));
  QScalar tail = (one - q).pow(2) * QScalar(Rat(1, 4)) * qpow(Rat(2 * n - 3, 2));
  return lead * at(n + 2 - k) + mid * at(n - k) + tail * at(n - 2 - k);
}

}  // namespace

SeriesT a_series_recurrence(unsigned order) {
  std::vector<QScalar> a(order + 1);
  a[0] = QScalar(1);
  QScalar one(1);
  for (unsigned m = 1; m <= order; ++m) {
    if (m == 1) {
      // the (n, k) = (0, 1) equation reduces to coeff * a_1 = 0
      a[1] = QScalar();
      continue;
    }
    long n = static_cast<long>(m) - 2;
    QScalar lead = QScalar(4) / (one - q_scalar()).pow(2) * qpow(Rat(-2 * n - 1, 2)) *
                   (one - qpow(Rat(n + 2))) * (one - qpow(Rat(n + 1)));
    QScalar mid = qpow(Rat(-1)) * (one + qpow(Rat(2)) - qpow(Rat(n + 1)) - qpow(Rat(n + 2)));
    QScalar tail = (one - q_scalar()).pow(2) * QScalar(Rat(1, 4)) * qpow(Rat(2 * n - 3, 2));
    QScalar rhs = mid * a[m - 2];
    if (m >= 4) rhs += tail * a[m - 4];
    a[m] = -(rhs / lead);
  }
  // Re-check the full over-determined system on the computed prefix.
  for (long n = 0; n + 2 <= static_cast<long>(order); ++n) {
    for (long k = 0; k <= n + 2; ++k) {
      QScalar r = a_system_residual(a, n, k);
      if (!r.is_zero())
        throw Error("a-coefficient system inconsistent at (n=" + std::to_string(n) +
                    ", k=" + std::to_string(k) + "): residual " + r.str());
    }
  }
  SeriesT s(static_cast<long>(order));
  for (unsigned m = 0; m <= order; ++m) s.set_coeff(m, PolyX(a[m]));
  return s;
}

/* ---------------- basis conversions ---------------- */

ConversionRow psi_to_hermite(unsigned n) {
  ConversionRow row;
  row.n = static_cast<long>(n);
  QScalar qq_n = qpoch(q_scalar(), q_scalar(), n);
  QScalar q2 = q_scalar() * q_scalar();
  for (long k = 0; 2 * k <= row.n; ++k) {
    QScalar w = qq_n * qpow(Rat(k * (k - row.n))) /
                (qpoch(q2, q2, static_cast<unsigned>(k)) *
                 qpoch(q_scalar(), q_scalar(), static_cast<unsigned>(row.n - 2 * k)));
    row.weights.emplace_back(k, w);
  }
  return row;
}

ConversionRow hermite_to_psi(unsigned n) {
  ConversionRow row;
  row.n = static_cast<long>(n);
  QScalar qq_n = qpoch(q_scalar(), q_scalar(), n);
  QScalar q2 = q_scalar() * q_scalar();
  for (long k = 0; 2 * k <= row.n; ++k) {
    QScalar v = qq_n * qpow(Rat(k * (2 * k - row.n - 1))) /
                (qpoch(q2, q2, static_cast<unsigned>(k)) *
                 qpoch(q_scalar(), q_scalar(), static_cast<unsigned>(row.n - 2 * k)));
    if (k % 2 == 1) v = -v;
    row.weights.emplace_back(k, v);
  }
  return row;
}

/* ---------------- heat analog and generating function ---------------- */

PolyX heat_apply(unsigned n) {
  QScalar one(1);
  QScalar q2 = q_scalar() * q_scalar();
  // operator argument (1-q)^2 q^(-1/2) / 4 acting through dq^2
  QScalar lambda = (one - q_scalar()).pow(2) * QScalar(Rat(1, 4)) * qpow(Rat(-1, 2));
  PolyX sum;
  PolyX iter = psi(n);  // dq^(2k) Psi_n
  QScalar lambda_pow(1);
  for (unsigned k = 0; 2 * k <= n; ++k) {
    long kl = static_cast<long>(k);
    QScalar coeff = lambda_pow * q2.pow(kl * (kl - 1) / 2) / qpoch(q2, q2, k);
    if (k % 2 == 1) coeff = -coeff;
    sum += coeff * iter;
    if (2 * (k + 1) <= n) {
      iter = dq(dq(iter));
      lambda_pow *= lambda;
    }
  }
  return sum;
}

SeriesT genfun_hermite_lhs(unsigned order) {
  SeriesT s(static_cast<long>(order));
  for (unsigned n = 0; n <= order; ++n) {
    long nl = static_cast<long>(n);
    QScalar w = QScalar::monomial(Rat(1), nl * (nl - 1)) / qpoch(q_scalar(), q_scalar(), n);
    s.set_coeff(n, w * hermite(n));
  }
  return s;
}

}  // namespace qaw
