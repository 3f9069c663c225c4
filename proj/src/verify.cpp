#include "qaw/verify.hpp"

#include <chrono>
#include <map>
#include <sstream>

#include "qaw/families.hpp"
#include "qaw/opcore.hpp"
#include "qaw/scalar.hpp"

namespace qaw {
namespace {

QScalar one() { return QScalar(1); }
QScalar q() { return q_scalar(); }

unsigned u(long n) { return static_cast<unsigned>(n); }

std::string param_n(long n) {
  std::ostringstream os;
  os << "n = " << n;
  return os.str();
}

std::string param_nk(long n, long k) {
  std::ostringstream os;
  os << "n = " << n << ", k = " << k;
  return os.str();
}

std::string param_slot(long j) {
  std::ostringstream os;
  os << "t-slot = " << j;
  return os.str();
}

void check_poly(SuiteResult& res, const char* id, std::string params,
                const PolyX& lhs, const PolyX& rhs) {
  if (!(lhs == rhs)) {
    res.failures.push_back({id, std::move(params), (lhs - rhs).str()});
  }
}

void check_scalar(SuiteResult& res, const char* id, std::string params,
                  const QScalar& lhs, const QScalar& rhs) {
  if (!(lhs == rhs)) {
    res.failures.push_back({id, std::move(params), (lhs - rhs).str()});
  }
}

// The iterated-operator block is the expensive part of the dq-psi suite;
// capping it keeps the default invocation fast while the single-step ladder
// identities still run through max_n.
constexpr long kIterCap = 16;

void suite_dq_psi(SuiteResult& res, long max_n, long /*t_order*/) {
  for (long n = 1; n <= max_n; ++n) {
    ++res.cases_run;
    QScalar lower = QScalar(2) * qpow(Rat(1 - n, 2)) * (one() - qpow(Rat(n))) / (one() - q());
    check_poly(res, "dq-psi/lower", param_n(n), dq(psi(u(n))), lower * psi(u(n - 1)));

    QScalar xfac = (qpow(Rat(1 + n, 2)) - qpow(Rat(-(n + 1), 2))) /
                   (qpow(Rat(1, 2)) - qpow(Rat(-1, 2)));
    check_poly(res, "dq-psi/x-ladder", param_n(n), dq(PolyX::x() * psi(u(n))),
               xfac * mul_2x(psi(u(n - 1))));

    if (n <= kIterCap) {
      for (long k = 0; k <= n; ++k) {
        QScalar factor = QScalar(Rat(Int(1) << k)) *
                         qpow(Rat(k * (k + 1) - 2 * n * k, 4)) *
                         qpoch(q(), q(), u(n)) /
                         (qpoch(q(), q(), u(n - k)) * (one() - q()).pow(k));
        check_poly(res, "dq-psi/iterated", param_nk(n, k),
                   dq_iter(psi(u(n)), u(k)), factor * psi(u(n - k)));
      }
    }
  }
}

void suite_dq_h(SuiteResult& res, long max_n, long /*t_order*/) {
  for (long n = 1; n <= max_n; ++n) {
    ++res.cases_run;
    check_poly(res, "dq-h/appell", param_n(n), dq(h_small(u(n))), h_small(u(n - 1)));
  }
}

void suite_recurrences(SuiteResult& res, long max_n, long /*t_order*/) {
  for (long n = 1; n <= max_n; ++n) {
    ++res.cases_run;
    PolyX lhs3 = (one() - qpow(Rat(n + 1))) * h_small(u(n + 1));
    PolyX rhs3 = ((one() - q()) * qpow(Rat(n, 2))) * (PolyX::x() * h_small(u(n))) -
                 ((one() - q()).pow(2) * QScalar(Rat(1, 4)) * qpow(Rat(2 * n - 1, 2))) *
                     h_small(u(n - 1));
    check_poly(res, "recurrences/h-three-term", param_n(n), lhs3, rhs3);

    if (n >= 2) {
      PolyX lhs2 = mul_2x(mul_2x(h_small(u(n))));
      QScalar c_up = QScalar(4) / (one() - q()).pow(2) *
                     (one() - qpow(Rat(n + 1))) * (one() - qpow(Rat(n + 2))) *
                     qpow(Rat(-2 * n - 1, 2));
      QScalar c_mid = QScalar(2) - qpow(Rat(n)) - qpow(Rat(n + 1));
      QScalar c_down = (one() - q()).pow(2) * QScalar(Rat(1, 4)) * qpow(Rat(2 * n - 3, 2));
      PolyX rhs2 = c_up * h_small(u(n + 2)) + c_mid * h_small(u(n)) +
                   c_down * h_small(u(n - 2));
      check_poly(res, "recurrences/h-doubled", param_n(n), lhs2, rhs2);
    }
  }
}

void suite_genfun(SuiteResult& res, long /*max_n*/, long t_order) {
  SeriesT product = a_series_closed(u(t_order)) * big_e_series(u(t_order));
  SeriesT rescaled = product.scale_t(QScalar(2) / (one() - q()));
  SeriesT target = genfun_hermite_lhs(u(t_order));
  for (long j = 0; j <= t_order; ++j) {
    ++res.cases_run;
    check_poly(res, "genfun/h-series", param_slot(j), product.coeff(u(j)), h_small(u(j)));
    check_poly(res, "genfun/rescaled", param_slot(j), rescaled.coeff(u(j)),
               target.coeff(u(j)));
  }
}

void suite_inverse(SuiteResult& res, long max_n, long /*t_order*/) {
  for (long n = 0; n <= max_n; ++n) {
    ++res.cases_run;
    PolyX sum_h;
    for (const auto& [k, w] : psi_to_hermite(u(n)).weights) {
      sum_h += w * hermite(u(n - 2 * k));
    }
    check_poly(res, "inverse/psi-row", param_n(n), sum_h, psi(u(n)));

    PolyX sum_p;
    for (const auto& [k, v] : hermite_to_psi(u(n)).weights) {
      sum_p += v * psi(u(n - 2 * k));
    }
    check_poly(res, "inverse/h-row", param_n(n), sum_p, hermite(u(n)));

    // Row n of each matrix product must be the delta row at n.
    std::map<long, QScalar> fwd, bwd;
    for (const auto& [k, w] : psi_to_hermite(u(n)).weights) {
      for (const auto& [l, v] : hermite_to_psi(u(n - 2 * k)).weights) {
        fwd[n - 2 * k - 2 * l] += w * v;
      }
    }
    for (const auto& [k, v] : hermite_to_psi(u(n)).weights) {
      for (const auto& [l, w] : psi_to_hermite(u(n - 2 * k)).weights) {
        bwd[n - 2 * k - 2 * l] += v * w;
      }
    }
    for (const auto& [m, val] : fwd) {
      check_scalar(res, "inverse/compose-forward", param_nk(n, m), val,
                   m == n ? one() : QScalar());
    }
    for (const auto& [m, val] : bwd) {
      check_scalar(res, "inverse/compose-backward", param_nk(n, m), val,
                   m == n ? one() : QScalar());
    }
  }
}

void suite_heat(SuiteResult& res, long max_n, long /*t_order*/) {
  for (long n = 0; n <= max_n; ++n) {
    ++res.cases_run;
    check_poly(res, "heat/hermite", param_n(n), heat_apply(u(n)), hermite(u(n)));
  }
}

void suite_big_e(SuiteResult& res, long /*max_n*/, long t_order) {
  SeriesT e = big_e_series(u(t_order));
  for (long j = 0; j <= t_order; ++j) {
    ++res.cases_run;
    PolyX shifted = j == 0 ? PolyX() : e.coeff(u(j - 1));
    check_poly(res, "big-e/eigen", param_slot(j), dq(e.coeff(u(j))), shifted);
  }
}

void suite_a_coeffs(SuiteResult& res, long /*max_n*/, long t_order) {
  SeriesT closed = a_series_closed(u(t_order));
  bool have_rec = false;
  SeriesT rec(t_order);
  try {
    rec = a_series_recurrence(u(t_order));
    have_rec = true;
  } catch (const Error& e) {
    res.failures.push_back({"a-coeffs/recurrence", "order = " + std::to_string(t_order),
                            e.what()});
  }
  QScalar q2 = q() * q();
  QScalar arg = (one() - q()).pow(2) * qpow(Rat(-1, 2)) * QScalar(Rat(1, 4));
  SeriesT product = qexp_trunc(arg, q2, QExpVariant::reciprocal, u(t_order / 2));
  for (long j = 0; j <= t_order; ++j) {
    ++res.cases_run;
    if (have_rec) {
      check_poly(res, "a-coeffs/recurrence", param_slot(j), rec.coeff(u(j)),
                 closed.coeff(u(j)));
    }
    if (j % 2 == 1) {
      check_poly(res, "a-coeffs/odd-vanish", param_slot(j), closed.coeff(u(j)), PolyX());
    } else {
      check_poly(res, "a-coeffs/q2-product", param_slot(j), closed.coeff(u(j)),
                 product.coeff(u(j / 2)));
    }
  }
}

using SuiteFn = void (*)(SuiteResult&, long, long);

struct SuiteEntry {
  const char* name;
  SuiteFn fn;
};

constexpr SuiteEntry kSuites[] = {
    {"dq-psi", suite_dq_psi},       {"dq-h", suite_dq_h},
    {"recurrences", suite_recurrences}, {"genfun", suite_genfun},
    {"inverse", suite_inverse},     {"heat", suite_heat},
    {"big-e", suite_big_e},         {"a-coeffs", suite_a_coeffs},
};

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& entry : kSuites) v.emplace_back(entry.name);
    return v;
  }();
  return names;
}

SuiteResult run_suite(const std::string& suite, long max_n, long t_order) {
  if (max_n < 1) throw DomainError("run_suite: max_n must be >= 1");
  if (t_order < 1) throw DomainError("run_suite: t_order must be >= 1");
  for (const auto& entry : kSuites) {
    if (suite == entry.name) {
      SuiteResult res;
      res.suite = suite;
      auto start = std::chrono::steady_clock::now();
      entry.fn(res, max_n, t_order);
      auto stop = std::chrono::steady_clock::now();
      res.wall_seconds = std::chrono::duration<double>(stop - start).count();
      return res;
    }
  }
  std::string msg = "run_suite: unknown suite '" + suite + "'; known suites:";
  for (const auto& name : suite_names()) msg += " " + name;
  throw Error(msg);
}

}  // namespace qaw
