#include "qaw/characterize.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qaw/families.hpp"

namespace qaw {

namespace {

QScalar qh(long m) { return QScalar::monomial(Rat(1), 2 * m); }   // q^(m/2)
QScalar qint(long n) { return QScalar::monomial(Rat(1), 4 * n); }  // q^n

// (1-q)^2 q^(m/2) / 4
QScalar quarter_sq(long m) {
  QScalar d = QScalar(1) - qint(1);
  return QScalar(Rat(1, 4)) * d * d * qh(m);
}

Rat rat_pow(Rat base, long e) {
  base.canonicalize();
  if (e < 0) {
    if (base == 0) throw DomainError("rat_pow: zero base with negative exponent");
    base = Rat(1) / base;
    e = -e;
  }
  Int n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rat(n, d);
}

// Sample point used to certify that symbolically nonzero scalars do not
// hide an accidental zero: evaluation at s = 1/2 (q = 1/16).
const Rat kCertSample(1, 2);

void certify_nonzero(const QScalar& v, const char* what) {
  if (v.is_zero() || v.eval_exact(kCertSample) == 0)
    throw Error(std::string("internal: ") + what + " vanished");
}

}  // namespace

const char* outcome_name(Outcome o) {
  return o == Outcome::ForcedHermite ? "ForcedHermite" : "ContradictionWitness";
}

AlphaPoly constraint_residual(long n, long k, const AppellExpansion& ap,
                              const OpsCandidate& cand) {
  if (n < 0 || k < 0 || k > n + 1)
    throw Error("constraint_residual: cell needs n >= 0 and 0 <= k <= n+1");
  if (static_cast<long>(ap.a.size()) < n + 2)
    throw Error("constraint_residual: expansion index out of range at n = " +
                std::to_string(n));
  if (static_cast<long>(cand.beta.size()) < n + 1)
    throw Error("constraint_residual: beta index out of range at n = " +
                std::to_string(n));
  static const AlphaPoly kZero;
  auto a = [&](long j) -> const AlphaPoly& {
    return j < 0 ? kZero : ap.a[static_cast<std::size_t>(j)];
  };
  const QScalar one(1);
  AlphaPoly r = ((one - qh(n - k + 1)) * (one + qh(n + 1 + k))) * a(n + 1 - k);
  r -= cand.beta[static_cast<std::size_t>(n)] * a(n - k);
  if (n - k - 1 >= 0) {
    if (static_cast<long>(cand.gamma.size()) < n + 1)
      throw Error("constraint_residual: gamma index out of range at n = " +
                  std::to_string(n));
    r += (cand.gamma[static_cast<std::size_t>(n)] - AlphaPoly(quarter_sq(n + k))) *
         a(n - k - 1);
  }
  return r;
}

ReplayReport check_system(const AppellExpansion& ap, const OpsCandidate& cand,
                          long N) {
  if (N < 0) throw Error("check_system: N >= 0 required");
  if (static_cast<long>(ap.a.size()) < N + 2 ||
      static_cast<long>(cand.beta.size()) < N + 1 ||
      (N >= 1 && static_cast<long>(cand.gamma.size()) < N + 1))
    throw Error("check_system: sequences too short for N");
  ReplayReport rep;
  rep.beta.assign(cand.beta.begin(), cand.beta.begin() + (N + 1));
  rep.gamma.assign(N + 1, AlphaPoly());
  for (long n = 1; n <= N; ++n)
    rep.gamma[static_cast<std::size_t>(n)] = cand.gamma[static_cast<std::size_t>(n)];
  for (long n = 0; n <= N; ++n) {
    for (long k = 0; k <= n + 1; ++k) {
      AlphaPoly r = constraint_residual(n, k, ap, cand);
      if (!r.is_zero()) {
        rep.outcome = Outcome::ContradictionWitness;
        rep.witness = Witness{n, k, std::move(r)};
        rep.notes = "first nonzero constraint residual at (n, k) = (" +
                    std::to_string(n) + ", " + std::to_string(k) + ")";
        return rep;
      }
    }
  }
  rep.outcome = Outcome::ForcedHermite;
  rep.notes = "all " + std::to_string((N + 1) * (N + 4) / 2) +
              " constraint cells vanish for n <= " + std::to_string(N);
  return rep;
}

AlphaPoly derive_beta(long n, const AlphaPoly& a1) {
  if (n < 0) throw Error("derive_beta: n >= 0 required");
  const QScalar one(1);
  return ((one - qh(1)) * (one + qh(2 * n + 1))) * a1;
}

OpsCandidate hermite_candidate(long N) {
  if (N < 0) throw Error("hermite_candidate: N >= 0 required");
  OpsCandidate cand;
  cand.max_n = N;
  cand.beta.assign(static_cast<std::size_t>(N) + 1, AlphaPoly());
  cand.gamma.assign(static_cast<std::size_t>(N) + 1, AlphaPoly());
  for (long n = 1; n <= N; ++n)
    cand.gamma[static_cast<std::size_t>(n)] = AlphaPoly(quarter_sq(2 * n - 1));
  return cand;
}

AppellExpansion hermite_expansion(long N) {
  if (N < 0) throw Error("hermite_expansion: N >= 0 required");
  AppellExpansion ap;
  ap.a.assign(static_cast<std::size_t>(N) + 2, AlphaPoly());
  ap.a[0] = AlphaPoly(QScalar(1));
  return ap;
}

ReplayReport replay_case1(long N) {
  if (N < 4) throw DomainError("replay_case1: N >= 4 required");
  const QScalar one(1);
  const QScalar q = qint(1);
  const AlphaPoly alpha = AlphaPoly::alpha();
  const QScalar alpha_star = QScalar(Rat(1, 4)) * (one - q) * qh(-1);

  // a_1 = 0 (this case is beta_0 = 0, and beta_0 = a_1), a_2 = alpha.
  // Odd indices: the cell (m-1, 0) reads
  //   (1 - q^(m/2))(1 + q^(m/2)) a_m + [gamma - ...] a_{m-2} = 0,
  // so with a_{m-2} = 0 inductively from a_1 = 0, a unit pivot forces
  // a_m = 0 whatever gamma is.
  const long size = N + 2;
  std::vector<AlphaPoly> a(static_cast<std::size_t>(size));
  a[0] = AlphaPoly(one);
  for (long m = 3; m < size; m += 2)
    certify_nonzero((one - qh(m)) * (one + qh(m)), "odd-index elimination pivot");
  // Even indices: the exact solution of the large-n limit recurrence
  // (1 - q^k) a_{2k} = (1-q) alpha a_{2k-2}.
  for (long k = 1; 2 * k < size; ++k)
    a[static_cast<std::size_t>(2 * k)] = AlphaPoly::monomial(
        (one - q).pow(k) / qpoch(q, q, static_cast<unsigned>(k)),
        static_cast<std::size_t>(k));

  // gamma_n solved from the a_2 cell (n, n-1):
  //   (1-q)(1+q^n) a_2 + [gamma_n - (1-q)^2 q^(n-1/2)/4] a_0 = 0.
  OpsCandidate cand;
  cand.max_n = N;
  cand.beta.assign(static_cast<std::size_t>(N) + 1, AlphaPoly());
  cand.gamma.assign(static_cast<std::size_t>(N) + 1, AlphaPoly());
  for (long n = 1; n <= N; ++n)
    cand.gamma[static_cast<std::size_t>(n)] =
        AlphaPoly(quarter_sq(2 * n - 1)) - ((one - q) * (one + qint(n))) * alpha;

  AppellExpansion ap{a};

  // The cells that defined beta and gamma must vanish identically.
  for (long n = 0; n <= N; ++n)
    if (!constraint_residual(n, n, ap, cand).is_zero())
      throw Error("internal: case I beta cell nonzero");
  for (long n = 1; n <= N; ++n)
    if (!constraint_residual(n, n - 1, ap, cand).is_zero())
      throw Error("internal: case I gamma cell nonzero");

  // Remaining even-index cells (n, n+1-2k): the closed form leaves
  //   R(n, k) = (1-q)^k (1 - q^(1-k)) q^n / (q;q)_{k-1}
  //             * alpha^(k-1) (alpha* - alpha),
  // a degree-k polynomial in alpha with nonzero leading coefficient for
  // every k >= 2, so no alpha outside {0, alpha*} can satisfy the system.
  const long k_max = std::min<long>(5, (size - 1) / 2);
  for (long k = 2; k <= k_max; ++k) {
    const QScalar rho = (one - q).pow(k) * (one - qint(1 - k)) /
                        qpoch(q, q, static_cast<unsigned>(k - 1));
    certify_nonzero(rho, "case I residual factor rho");
    for (long n = 2 * k - 1; n <= N; ++n) {
      AlphaPoly r = constraint_residual(n, n + 1 - 2 * k, ap, cand);
      AlphaPoly expect = (rho * qint(n)) *
                         (AlphaPoly::monomial(one, static_cast<std::size_t>(k - 1)) *
                          (AlphaPoly(alpha_star) - alpha));
      if (r != expect)
        throw Error("internal: case I even-cell residual mismatch at n = " +
                    std::to_string(n) + ", k = " + std::to_string(k));
      if (r.degree() != k)
        throw Error("internal: case I residual degree mismatch");
      certify_nonzero(r.leading(), "case I residual leading coefficient");
    }
  }

  // alpha = alpha* satisfies the recurrence cells but forces
  // gamma_n = -(1-q)^2 q^(-1/2)/4 < 0 for 0 < q < 1: not orthogonal data.
  const QScalar gamma_at_star = -quarter_sq(-1);
  for (long n = 1; n <= N; ++n)
    if (cand.gamma[static_cast<std::size_t>(n)].eval(alpha_star) != gamma_at_star)
      throw Error("internal: case I alpha* gamma value mismatch");

  // alpha = 0 collapses to the q-Hermite data.
  AppellExpansion ap0;
  ap0.a.reserve(a.size());
  for (const AlphaPoly& p : a) ap0.a.emplace_back(p.eval(QScalar()));
  OpsCandidate cand0;
  cand0.max_n = N;
  for (const AlphaPoly& p : cand.beta) cand0.beta.emplace_back(p.eval(QScalar()));
  for (const AlphaPoly& p : cand.gamma) cand0.gamma.emplace_back(p.eval(QScalar()));
  const OpsCandidate hc = hermite_candidate(N);
  const AppellExpansion he = hermite_expansion(N);
  if (cand0.beta != hc.beta || cand0.gamma != hc.gamma || ap0.a != he.a)
    throw Error("internal: case I alpha = 0 data is not the q-Hermite data");
  ReplayReport sub = check_system(ap0, cand0, N);
  if (sub.outcome != Outcome::ForcedHermite)
    throw Error("internal: case I alpha = 0 specialization fails the system");

  ReplayReport rep;
  rep.outcome = Outcome::ForcedHermite;
  rep.beta = cand.beta;
  rep.gamma = cand.gamma;
  rep.notes =
      "case I (beta_0 = 0, so a_1 = 0; a_2 = alpha formal): "
      "odd coefficients vanish by forward elimination (unit pivots certified at "
      "s = 1/2); gamma_n = (1-q)^2 q^(n-1/2)/4 - alpha (1-q)(1+q^n); the "
      "even-index closed form leaves residual (1-q)^k (1-q^(1-k)) q^n / "
      "(q;q)_{k-1} * alpha^(k-1) (alpha* - alpha) with alpha* = (1-q) "
      "q^(-1/2)/4, verified structurally for k <= " +
      std::to_string(k_max) +
      " and certified nonzero at s = 1/2, so every alpha outside {0, alpha*} "
      "contradicts the system; alpha = alpha* forces gamma_n = -(1-q)^2 "
      "q^(-1/2)/4 < 0, which no orthogonal set allows; alpha = 0 is exactly "
      "the q-Hermite data (system re-checked: ForcedHermite).";
  return rep;
}

namespace {

// Symbolic replay of the closing algebra of Case II, over Q(s) with one
// formal indeterminate at a time.  Throws on any failed identity.
//
// The candidate shape is a_k = c^k (b q^(1/2); q^(1/2))_k / (q^(1/2); q^(1/2))_k,
// the general solution of the eliminated n-free relation.  Substituting it
// into the n-free subsystem, dividing by c^2 a_{k-1} and multiplying by
// (1 - q^(k/2)), the residual becomes a polynomial in u = q^(k/2) and b:
//
//   P(b, u) = (1 - b q^(1/2) u)(1 - b u) - (1 - b q^(1/2))(1 - b u)
//             + Dt(b) (1 - u),
//   Dt(b)   = (1 - b q^(1/2)) [(1 - b q^(1/2)) - (1 - b q)] / (1 - q^(1/2)),
//
// and must vanish for all u; the check below confirms
//   P(b, u) = b^2 [ q - (q + q^(1/2)) u + q^(1/2) u^2 ],
// whose u-coefficients are nonzero multiples of b^2, forcing b = 0.
void endgame_force_b_zero() {
  const QScalar one(1);
  const QScalar sq = qh(1);  // q^(1/2)
  const QScalar q = qint(1);
  const AlphaPoly b = AlphaPoly::alpha();  // indeterminate is b here
  const AlphaPoly one_p(one);
  const QScalar inv_omsq = (one - sq).inv();

  const AlphaPoly dt =
      inv_omsq * ((one_p - sq * b) * ((one_p - sq * b) - (one_p - q * b)));

  // u-coefficient slots of the three pieces.
  std::vector<AlphaPoly> lhs(3);
  // (1 - b q^(1/2) u)(1 - b u) = 1 - b(1 + q^(1/2)) u + q^(1/2) b^2 u^2
  lhs[0] = one_p;
  lhs[1] = -((one + sq) * b);
  lhs[2] = sq * (b * b);
  // - (1 - b q^(1/2))(1 - b u)
  lhs[0] -= one_p - sq * b;
  lhs[1] += b * (one_p - sq * b);
  // + Dt (1 - u)
  lhs[0] += dt;
  lhs[1] -= dt;

  const AlphaPoly b2 = b * b;
  std::vector<AlphaPoly> expect = {q * b2, -((q + sq) * b2), sq * b2};
  for (int j = 0; j < 3; ++j) {
    if (lhs[static_cast<std::size_t>(j)] != expect[static_cast<std::size_t>(j)])
      throw Error("internal: case II b-elimination identity failed at u^" +
                  std::to_string(j));
  }
  certify_nonzero(q, "b-elimination u^0 factor");
  certify_nonzero(q + sq, "b-elimination u^1 factor");
  certify_nonzero(sq, "b-elimination u^2 factor");
}

// With b = 0 the shape is a_k = c^k / (q^(1/2); q^(1/2))_k; substituting it
// into the companion subsystem, multiplying by (1 - q^(k/2)) / a_{k-1} and
// writing u = q^(k/2), w = c^2, the residual must equal
//   (1 - u)(1 - q^(-1/2) u)(w - v0),   v0 = (1-q)^2 q^(-1/2) / 4,
// which vanishes for all u only at w = v0: the shape constant is forced.
void endgame_force_c_squared() {
  const QScalar one(1);
  const QScalar sq = qh(1);
  const QScalar q = qint(1);
  const QScalar v0 = quarter_sq(-1);
  const AlphaPoly w = AlphaPoly::alpha();  // indeterminate is w = c^2 here
  const QScalar inv_omsq = (one - sq).inv();

  std::vector<AlphaPoly> lhs(3);
  // (1 - q^((k+1)/2)) a_{k+1} (1 - u) / a_{k-1}  =  w
  lhs[0] = w;
  // -(1 - q^(1/2)) q^(k/2) a_1 a_k (1 - u) / a_{k-1}  =  -w u
  lhs[1] = -w;
  // braces * (1 - u), braces = v0 (q^(-1/2) u - 1)
  //                            + u (1 - q^(1/2)) a_1^2 - (1-q) q^((k-1)/2) a_2
  AlphaPoly br0 = AlphaPoly(-v0);
  AlphaPoly br1 = AlphaPoly(v0 * qh(-1));
  br1 += (one - sq) * (inv_omsq * inv_omsq) * w;                  // a_1^2 term
  br1 -= (one - q) * qh(-1) * (inv_omsq * (one - q).inv()) * w;   // a_2 term
  lhs[0] += br0;
  lhs[1] += br1 - br0;
  lhs[2] = -br1;

  // (1 - u)(1 - q^(-1/2) u)(w - v0)
  const AlphaPoly w_m_v0 = w - AlphaPoly(v0);
  std::vector<AlphaPoly> expect = {w_m_v0, -((one + qh(-1)) * w_m_v0),
                                   qh(-1) * w_m_v0};
  for (int j = 0; j < 3; ++j) {
    if (lhs[static_cast<std::size_t>(j)] != expect[static_cast<std::size_t>(j)])
      throw Error("internal: case II c^2 identity failed at u^" +
                  std::to_string(j));
  }
}

// Finally, w = v0 makes the derived gamma_n identically zero: with
// a_1^2 = w / (1 - q^(1/2))^2 and a_2 = w / ((1 - q^(1/2))(1 - q)),
//   gamma_n(w) = (1-q)^2 q^(n-1/2)/4
//                + (1 - q^(1/2))(1 + q^(n+1/2)) a_1^2
//                - (1-q)(1 + q^n) a_2
// evaluates to zero at w = v0 for every n — the contradiction: an
// orthogonal set cannot have vanishing gamma_n.
void endgame_gamma_degenerates(long N) {
  const QScalar one(1);
  const QScalar sq = qh(1);
  const QScalar q = qint(1);
  const QScalar v0 = quarter_sq(-1);
  const AlphaPoly w = AlphaPoly::alpha();
  const QScalar inv_omsq = (one - sq).inv();
  for (long n = 1; n <= N; ++n) {
    AlphaPoly gam = AlphaPoly(quarter_sq(2 * n - 1));
    gam += (one - sq) * (one + qh(2 * n + 1)) * (inv_omsq * inv_omsq) * w;
    gam -= (one - q) * (one + qint(n)) * (inv_omsq * (one - q).inv()) * w;
    if (!gam.eval(v0).is_zero())
      throw Error("internal: case II gamma(v0) nonzero at n = " +
                  std::to_string(n));
  }
}

void case2_endgame_checks(long N) {
  endgame_force_b_zero();
  endgame_force_c_squared();
  endgame_gamma_degenerates(N < 8 ? 8 : N);
}

}  // namespace

ReplayReport replay_case2(long N, const Rat& a1_sample, const Rat& a2_sample,
                          const Rat& s_sample) {
  Rat a1(a1_sample), a2(a2_sample), s(s_sample);
  a1.canonicalize();
  a2.canonicalize();
  s.canonicalize();
  if (N < 1) throw DomainError("replay_case2: N >= 1 required");
  if (a1 == 0) throw DomainError("replay_case2: a1 must be nonzero");
  if (!(s > 0 && s < 1)) throw DomainError("replay_case2: s must lie in (0, 1)");

  const Rat s2 = s * s;
  auto qhn = [&](long m) { return rat_pow(s2, m); };  // q^(m/2) at the sample
  const Rat q = qhn(2);
  const Rat om_q = 1 - q;
  const Rat om_sq = 1 - s2;
  const Rat v0 = om_q * om_q * qhn(-1) / 4;

  // Forced recurrence data.
  std::vector<Rat> beta(static_cast<std::size_t>(N) + 1);
  std::vector<Rat> gam(static_cast<std::size_t>(N) + 1);
  for (long n = 0; n <= N; ++n)
    beta[static_cast<std::size_t>(n)] = om_sq * (1 + qhn(2 * n + 1)) * a1;
  for (long n = 1; n <= N; ++n)
    gam[static_cast<std::size_t>(n)] = om_q * om_q * qhn(2 * n - 1) / 4 +
                                       om_sq * (1 + qhn(2 * n + 1)) * a1 * a1 -
                                       om_q * (1 + qhn(2 * n)) * a2;

  // a_3, a_4, ... from the n-free subsystem
  //   (1 - q^((k+1)/2)) a_{k+1} = (1 - q^(1/2)) a_1 a_k - D a_{k-1},
  //   D = (1 - q^(1/2)) a_1^2 - (1-q) a_2.
  std::vector<Rat> a(static_cast<std::size_t>(N) + 2);
  a[0] = 1;
  a[1] = a1;
  if (N >= 1) a[2] = a2;
  const Rat D = om_sq * a1 * a1 - om_q * a2;
  for (long k = 2; k <= N; ++k)
    a[static_cast<std::size_t>(k) + 1] =
        (om_sq * a1 * a[static_cast<std::size_t>(k)] -
         D * a[static_cast<std::size_t>(k) - 1]) /
        (1 - qhn(k + 1));

  // Companion subsystem and the eliminated n-free relation: record where
  // each first fails (diagnostic; the formal witness comes from the full
  // system below).
  long first_comp = -1, first_elim = -1;
  for (long k = 2; k <= N; ++k) {
    const Rat& ak1 = a[static_cast<std::size_t>(k) + 1];
    const Rat& ak = a[static_cast<std::size_t>(k)];
    const Rat& akm = a[static_cast<std::size_t>(k) - 1];
    Rat comp = (1 - qhn(k + 1)) * ak1 - om_sq * qhn(k) * a1 * ak +
               (v0 * (qhn(k - 1) - 1) + qhn(k) * om_sq * a1 * a1 -
                om_q * qhn(k - 1) * a2) *
                   akm;
    if (first_comp < 0 && comp != 0) first_comp = k;
    Rat elim = om_sq * (1 - qhn(k)) * a1 * ak +
               (om_q * a2 * (1 - qhn(k - 1)) - om_sq * (1 - qhn(k)) * a1 * a1 -
                v0 * (1 - qhn(k - 1))) *
                   akm;
    if (first_elim < 0 && elim != 0) first_elim = k;
  }

  // Full-system scan in ascending (n, k) order.
  auto cell = [&](long n, long k) -> Rat {
    auto av = [&](long j) -> Rat {
      return j < 0 ? Rat(0) : a[static_cast<std::size_t>(j)];
    };
    Rat r = (1 - qhn(n - k + 1)) * (1 + qhn(n + 1 + k)) * av(n + 1 - k) -
            beta[static_cast<std::size_t>(n)] * av(n - k);
    if (n - k - 1 >= 0)
      r += (gam[static_cast<std::size_t>(n)] - om_q * om_q * qhn(n + k) / 4) *
           av(n - k - 1);
    return r;
  };

  case2_endgame_checks(N);

  ReplayReport rep;
  for (long n = 0; n <= N; ++n)
    rep.beta.emplace_back(QScalar(beta[static_cast<std::size_t>(n)]));
  rep.gamma.emplace_back();
  for (long n = 1; n <= N; ++n)
    rep.gamma.emplace_back(QScalar(gam[static_cast<std::size_t>(n)]));

  const std::string sample_txt = "sample a1 = " + rat_str(a1) +
                                 ", a2 = " + rat_str(a2) + ", s = " + rat_str(s) +
                                 " (q = " + rat_str(q) + ")";
  const std::string endgame_txt =
      "closing algebra re-verified symbolically: the general shape of the "
      "n-free relation forces b = 0, the companion subsystem then forces "
      "c^2 = (1-q)^2 q^(-1/2)/4, and that value makes gamma_n identically 0";

  for (long n = 0; n <= N; ++n) {
    for (long k = 0; k <= n + 1; ++k) {
      Rat r = cell(n, k);
      if (r != 0) {
        rep.outcome = Outcome::ContradictionWitness;
        rep.witness = Witness{n, k, AlphaPoly(QScalar(r))};
        rep.notes = sample_txt + ": first nonzero constraint residual " +
                    rat_str(r) + " at (n, k) = (" + std::to_string(n) + ", " +
                    std::to_string(k) + ")";
        if (first_comp > 0)
          rep.notes += "; companion subsystem first fails at k = " +
                       std::to_string(first_comp);
        if (first_elim > 0)
          rep.notes += "; eliminated relation first fails at k = " +
                       std::to_string(first_elim);
        rep.notes += "; " + endgame_txt;
        return rep;
      }
    }
  }

  // The system is consistent: the sample sits on the b = 0,
  // c^2 = (1-q)^2 q^(-1/2)/4 solution shape, whose gamma_n vanish — no
  // orthogonal set has gamma_n = 0, so this is still a contradiction.
  for (long n = 1; n <= N; ++n) {
    if (gam[static_cast<std::size_t>(n)] == 0) {
      rep.outcome = Outcome::ContradictionWitness;
      rep.witness = Witness{n, -1, AlphaPoly(QScalar(gam[static_cast<std::size_t>(n)]))};
      rep.notes = sample_txt +
                  ": every constraint cell vanishes, but gamma_" +
                  std::to_string(n) +
                  " = 0 — degenerate three-term data, impossible for an "
                  "orthogonal set (k = -1 flags a gamma witness); " +
                  endgame_txt;
      return rep;
    }
  }
  throw Error(
      "internal: case II sample satisfies the system with nondegenerate "
      "gamma — uniqueness would be violated");
}

std::vector<Case2Sample> default_sample_grid() {
  std::vector<Case2Sample> grid;
  const Rat a1s[] = {Rat(1), Rat(-1), Rat(1, 3)};
  const Rat a2s[] = {Rat(0), Rat(1, 7)};
  const Rat ss[] = {Rat(1, 2), Rat(2, 3)};
  for (const Rat& a1 : a1s)
    for (const Rat& a2 : a2s)
      for (const Rat& s : ss) grid.push_back(Case2Sample{a1, a2, s});
  return grid;
}

ReplayReport uniqueness_report(long N, const std::vector<Case2Sample>& samples) {
  if (N < 4) throw DomainError("uniqueness_report: N >= 4 required");
  ReplayReport c1 = replay_case1(N);
  bool forced = (c1.outcome == Outcome::ForcedHermite);

  std::string notes = "uniqueness replay, N = " + std::to_string(N) + ". " +
                      c1.notes;
  if (samples.empty()) {
    notes +=
        " No a_1 != 0 samples were run: coverage incomplete (case II "
        "unchecked).";
  }
  long idx = 0;
  for (const Case2Sample& sm : samples) {
    ReplayReport r2 = replay_case2(N, sm.a1, sm.a2, sm.s);
    ++idx;
    if (r2.outcome != Outcome::ContradictionWitness) {
      forced = false;
      notes += " Sample " + std::to_string(idx) + " produced no witness!";
      continue;
    }
    const Witness& w = *r2.witness;
    notes += " Sample " + std::to_string(idx) + " (a1 = " + rat_str(sm.a1) +
             ", a2 = " + rat_str(sm.a2) + ", s = " + rat_str(sm.s) + "): " +
             (w.k >= 0 ? "residual witness at (n, k) = (" + std::to_string(w.n) +
                             ", " + std::to_string(w.k) + ")"
                       : "gamma-degeneracy witness at n = " + std::to_string(w.n)) +
             ".";
  }

  ReplayReport rep;
  rep.outcome = forced ? Outcome::ForcedHermite : Outcome::ContradictionWitness;
  if (forced) {
    // The forced solution: the q-Hermite data.
    OpsCandidate hc = hermite_candidate(N);
    rep.beta = std::move(hc.beta);
    rep.gamma = std::move(hc.gamma);
    notes +=
        " Aggregate: every admissible candidate collapses to the q-Hermite "
        "data (beta_n = 0, gamma_n = (1-q)^2 q^(n-1/2)/4).";
  } else {
    rep.beta = c1.beta;
    rep.gamma = c1.gamma;
    notes += " Aggregate: replay incomplete or inconsistent.";
  }
  rep.notes = std::move(notes);
  return rep;
}

}  // namespace qaw
