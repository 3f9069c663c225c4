#pragma once

// The concrete polynomial families of the q-Hermite operator calculus:
// q-Pochhammer symbols, truncated q-exponentials, the Psi ladder basis,
// the Rogers q-Hermite polynomials H_n and their Appell normalization h_n,
// the eigen-series E(x; t) of the Askey-Wilson operator, the A(t)
// generating-series coefficients, basis conversions, and the q-analog of
// the Hermite heat-operator formula.

#include <cstddef>
#include <utility>
#include <vector>

#include "qaw/opcore.hpp"
#include "qaw/scalar.hpp"

namespace qaw {

// Truncated formal power series in t with PolyX coefficients (scalar series
// simply carry constant polynomials).  All arithmetic truncates at the
// common order; combining different orders is an error.
class SeriesT {
 public:
  explicit SeriesT(long order);  // zero series of the given order
  static SeriesT one(long order);

  long order() const { return static_cast<long>(c_.size()) - 1; }
  const PolyX& coeff(std::size_t n) const;
  void set_coeff(std::size_t n, PolyX p);
  const std::vector<PolyX>& coeffs() const { return c_; }

  friend SeriesT operator+(const SeriesT& a, const SeriesT& b);
  friend SeriesT operator-(const SeriesT& a, const SeriesT& b);
  friend SeriesT operator*(const SeriesT& a, const SeriesT& b);  // truncated
  SeriesT scaled(const QScalar& c) const;
  // Substitute t -> c * t, i.e. multiply the t^n coefficient by c^n.
  SeriesT scale_t(const QScalar& c) const;
  // Multiply by t, dropping the coefficient that falls off the truncation.
  SeriesT shift_t() const;

  bool operator==(const SeriesT& o) const { return c_ == o.c_; }
  bool operator!=(const SeriesT& o) const { return !(*this == o); }

 private:
  std::vector<PolyX> c_;  // size = order + 1
};

// One row of a triangular basis-conversion matrix: the expansion of the
// n-th polynomial of one family over the other, indexed by k with
// 0 <= 2k <= n (the weight of the (n-2k)-th target polynomial).
struct ConversionRow {
  long n = 0;
  std::vector<std::pair<long, QScalar>> weights;
};

// (a; base)_n = product_{j=0}^{n-1} (1 - a * base^j); empty product is 1.
QScalar qpoch(const QScalar& a, const QScalar& base, unsigned n);

// Psi ladder polynomial, defined by the recurrence
//   Psi_{n+2} = [4x^2 - (1 - q^(n+1))(1 - q^(-n-1))] Psi_n,
// from Psi_0 = 1, Psi_1 = 2x.  Degree n, leading coefficient 2^n.
PolyX psi(unsigned n);

// Rogers q-Hermite polynomial H_n(x|q) from
//   H_{n+1} = 2x H_n - (1 - q^n) H_{n-1},  H_0 = 1, H_{-1} = 0.
PolyX hermite(unsigned n);

// c_k = (1-q)^k q^(k(k-1)/4) / (2^k (q;q)_k), the E-series weight.
QScalar c_coeff(unsigned k);

// h_n = c_n * H_n, the Appell-normalized q-Hermite polynomial:
// dq(h_n) = h_{n-1}.
PolyX h_small(unsigned n);

// E(x; t) truncated at t^order: coefficient of t^n is c_n * Psi_n.
SeriesT big_e_series(unsigned order);

enum class QExpVariant {
  e_q,        // e_base(u) = sum u^k / (base;base)_k
  reciprocal  // 1/e_base(u) = sum (-1)^k base^(k(k-1)/2) u^k / (base;base)_k
};

// Truncated q-exponential in t with u = arg_scale * t; scalar coefficients.
SeriesT qexp_trunc(const QScalar& arg_scale, const QScalar& base, QExpVariant variant,
                   unsigned order);

// A(t) with A(t) E(x; t) = sum h_n t^n, in closed form:
//   a_{2j} = (-1)^j (1-q)^(2j) q^(j(j-3/2)) / (2^(2j) (q^2;q^2)_j),
// odd coefficients zero.
SeriesT a_series_closed(unsigned order);

// The same coefficients computed forward from the three-term constraint
// system obtained by doubling the h-recurrence; after solving, the full
// over-determined system is re-checked and any nonzero residual throws
// Error with the offending (n, k) — it would signal an implementation bug.
SeriesT a_series_recurrence(unsigned order);

// Row of Psi_n = sum_k w_k H_{n-2k} with
// w_k = (q;q)_n q^(k(k-n)) / ((q^2;q^2)_k (q;q)_{n-2k}).
ConversionRow psi_to_hermite(unsigned n);

// Row of H_n = sum_k v_k Psi_{n-2k} with
// v_k = (-1)^k (q;q)_n q^(k(2k-n-1)) / ((q^2;q^2)_k (q;q)_{n-2k}).
ConversionRow hermite_to_psi(unsigned n);

// The heat-operator analog: applies 1/e_{q^2}( (1-q)^2 q^(-1/2)/4 * dq^2 )
// to Psi_n (the operator series terminates at k = floor(n/2)); equals
// hermite(n).
PolyX heat_apply(unsigned n);

// Left-hand side of the q-Hermite generating function:
// sum_n q^(n(n-1)/4) / (q;q)_n * H_n(x|q) t^n, truncated at t^order.
SeriesT genfun_hermite_lhs(unsigned order);

}  // namespace qaw
