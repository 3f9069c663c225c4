#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "qaw/characterize.hpp"
#include "qaw/families.hpp"

using namespace qaw;

namespace {

QScalar one() { return QScalar(1); }
QScalar q() { return q_scalar(); }
QScalar qh(long m) { return QScalar::monomial(Rat(1), 2 * m); }  // q^(m/2)

// (1-q)^2 q^(m/2) / 4
QScalar quarter_sq(long m) {
  QScalar d = one() - q();
  return QScalar(Rat(1, 4)) * d * d * qh(m);
}

AlphaPoly ap_const(const QScalar& c) { return AlphaPoly(c); }

// Candidate with a_1 = alpha and everything else Hermite-like.
AppellExpansion alpha_a1_expansion(long N) {
  AppellExpansion e = hermite_expansion(N);
  e.a[1] = AlphaPoly::alpha();
  return e;
}

}  // namespace

TEST_CASE("alpha polynomial ring basics") {
  const AlphaPoly zero;
  const AlphaPoly al = AlphaPoly::alpha();
  CHECK(zero.is_zero());
  CHECK(zero.degree() == -1);
  CHECK(al.degree() == 1);
  CHECK(al.coeff(1) == one());
  CHECK(al.coeff(0).is_zero());
  CHECK(al.coeff(7).is_zero());
  CHECK_THROWS_AS(zero.leading(), const Error&);

  const AlphaPoly p = AlphaPoly::from_coeffs({QScalar(1), QScalar(), QScalar(Rat(3, 4))});
  CHECK(p.degree() == 2);
  CHECK(p.str() == "(1)/(1) + (0)/(1)*alpha + (3/4)/(1)*alpha^2");
  CHECK(zero.str() == "(0)/(1)");
  CHECK(al.str() == "(0)/(1) + (1)/(1)*alpha");

  // trimming
  CHECK(AlphaPoly::from_coeffs({QScalar(), QScalar()}).is_zero());
  CHECK(AlphaPoly::monomial(QScalar(), 5).is_zero());
  CHECK((al - al).is_zero());

  // ring identities on a few fixed elements
  const AlphaPoly r = AlphaPoly::from_coeffs({qh(-1), QScalar(2)});
  const AlphaPoly t = AlphaPoly::from_coeffs({QScalar(Rat(1, 3)), one() - q(), qh(2)});
  CHECK((p + r) + t == p + (r + t));
  CHECK((p * r) * t == p * (r * t));
  CHECK(p * (r + t) == p * r + p * t);
  CHECK(p * r == r * p);
  CHECK(p - p == zero);
  CHECK((p * AlphaPoly(one())) == p);
  CHECK((p * zero).is_zero());
  CHECK(-(-p) == p);
  CHECK(p.scaled(QScalar(2)) == AlphaPoly(QScalar(2)) * p);

  // evaluation
  CHECK(p.eval(QScalar()) == QScalar(1));
  CHECK(p.eval(QScalar(2)) == QScalar(1) + QScalar(Rat(3, 4)) * QScalar(4));
  CHECK((r * t).eval(qh(1)) == r.eval(qh(1)) * t.eval(qh(1)));
}

TEST_CASE("constraint residual vanishes on the exact q-Hermite data") {
  const long N = 12;
  const AppellExpansion e = hermite_expansion(N);
  const OpsCandidate cand = hermite_candidate(N);
  for (long n = 0; n <= N; ++n)
    for (long k = 0; k <= n + 1; ++k)
      CHECK(constraint_residual(n, k, e, cand).is_zero());
  const ReplayReport rep = check_system(e, cand, N);
  CHECK(rep.outcome == Outcome::ForcedHermite);
  CHECK(!rep.witness.has_value());
  CHECK(std::string(outcome_name(rep.outcome)) == "ForcedHermite");
}

TEST_CASE("the k = n cell is the beta-forcing relation") {
  const long N = 8;
  const AppellExpansion e = alpha_a1_expansion(N);
  OpsCandidate cand = hermite_candidate(N);  // beta = 0
  const AlphaPoly al = AlphaPoly::alpha();
  for (long n = 0; n <= N; ++n) {
    const AlphaPoly r = constraint_residual(n, n, e, cand);
    CHECK(r == ((one() - qh(1)) * (one() + qh(2 * n + 1))) * al);
    CHECK(r == derive_beta(n, al));
  }
  // n = 0: beta_0 = (1-q) a_1, so the monic-form constant of Q_1 is a_1.
  CHECK(derive_beta(0, al) == (one() - q()) * al);
  CHECK(derive_beta(0, al).scaled((one() - q()).inv()) == al);
  CHECK(h_small(1) == PolyX::monomial(one(), 1));  // h_1 = x
  // a_1 = 0 forces every beta_n = 0.
  for (long n = 0; n <= N; ++n) CHECK(derive_beta(n, AlphaPoly()).is_zero());
  CHECK_THROWS_AS(derive_beta(-1, al), const Error&);
}

TEST_CASE("degenerate cells vanish trivially") {
  // n = 0, k = 1 touches only a_0 (with a zero scalar factor), a_-1, a_-2.
  const AppellExpansion e = hermite_expansion(4);
  const OpsCandidate cand = hermite_candidate(4);
  CHECK(constraint_residual(0, 1, e, cand).is_zero());
  // and with every a_k = 0 for k >= 1 plus arbitrary candidate entries:
  OpsCandidate wild = cand;
  wild.beta[0] = AlphaPoly::alpha();
  CHECK(constraint_residual(0, 1, e, wild).is_zero());
}

TEST_CASE("index preconditions throw") {
  const AppellExpansion e = hermite_expansion(4);
  const OpsCandidate cand = hermite_candidate(4);
  CHECK_THROWS_AS(constraint_residual(-1, 0, e, cand), const Error&);
  CHECK_THROWS_AS(constraint_residual(2, -1, e, cand), const Error&);
  CHECK_THROWS_AS(constraint_residual(2, 4, e, cand), const Error&);
  CHECK_THROWS_AS(constraint_residual(5, 0, e, cand), const Error&);  // too short
  CHECK_THROWS_AS(check_system(e, cand, 5), const Error&);
  CHECK_NOTHROW(check_system(e, cand, 4));
}

TEST_CASE("check_system reports the first perturbed cell") {
  const long N = 12;
  const AppellExpansion e = hermite_expansion(N);

  SUBCASE("beta_0 perturbed to 1") {
    OpsCandidate cand = hermite_candidate(N);
    cand.beta[0] = AlphaPoly(one());
    const ReplayReport rep = check_system(e, cand, N);
    REQUIRE(rep.outcome == Outcome::ContradictionWitness);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->n == 0);
    CHECK(rep.witness->k == 0);
    CHECK(rep.witness->residual == ap_const(QScalar(-1)));
    CHECK(!rep.witness->residual.is_zero());
    CHECK(std::string(outcome_name(rep.outcome)) == "ContradictionWitness");
  }

  SUBCASE("gamma_1 perturbed by +1") {
    OpsCandidate cand = hermite_candidate(N);
    cand.gamma[1] += AlphaPoly(one());
    const ReplayReport rep = check_system(e, cand, N);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->n == 1);
    CHECK(rep.witness->k == 0);
    CHECK(rep.witness->residual == ap_const(QScalar(1)));
  }

  SUBCASE("perturbation sensitivity across n and scalars") {
    const QScalar deltas[] = {QScalar(Rat(2, 3)), -qh(1), qh(-2), QScalar(5)};
    for (long n = 0; n <= 8; ++n) {
      const QScalar& d = deltas[static_cast<unsigned long>(n) % 4];
      {
        OpsCandidate cand = hermite_candidate(N);
        cand.beta[static_cast<std::size_t>(n)] += AlphaPoly(d);
        const ReplayReport rep = check_system(e, cand, N);
        REQUIRE(rep.witness.has_value());
        CHECK(rep.witness->n == n);
        CHECK(rep.witness->k == n);  // beta_n only touches the a_0 cell there
        CHECK(rep.witness->residual == ap_const(-d));
      }
      if (n >= 1) {
        OpsCandidate cand = hermite_candidate(N);
        cand.gamma[static_cast<std::size_t>(n)] += AlphaPoly(d);
        const ReplayReport rep = check_system(e, cand, N);
        REQUIRE(rep.witness.has_value());
        CHECK(rep.witness->n == n);
        CHECK(rep.witness->k == n - 1);
        CHECK(rep.witness->residual == ap_const(d));
      }
    }
  }
}

TEST_CASE("recurrence defect expanded over the h-basis matches the residuals") {
  // Independent soundness anchor: build Q_n = sum a_{n-k} h_k with explicit
  // scalar data, form the three-term defect
  //   (1-q^(n+1)) Q_{n+1} - (1-q) q^(n/2) x Q_n - beta_n Q_n + gamma_n Q_{n-1}
  // as a polynomial in x, re-expand it over the h-basis, and compare each
  // h_k coefficient with constraint_residual(n, k).
  const std::vector<QScalar> av = {one(),
                                   one() + qh(1),
                                   QScalar(Rat(3, 7)),
                                   QScalar(Rat(-1, 2)) * qh(-1),
                                   QScalar(2),
                                   QScalar(Rat(1, 3)),
                                   qh(3),
                                   QScalar(Rat(5, 11))};
  const std::vector<QScalar> bv = {QScalar(Rat(-3, 5)), qh(1),
                                   QScalar(Rat(2, 3)),  QScalar(),
                                   QScalar(Rat(1, 4)) * qh(-1), QScalar(Rat(7, 2))};
  const std::vector<QScalar> gv = {QScalar(),           QScalar(Rat(1, 2)),
                                   qh(2),               QScalar(Rat(-2, 9)),
                                   QScalar(Rat(5, 8)) * qh(1), QScalar(-1)};

  AppellExpansion e;
  OpsCandidate cand;
  cand.max_n = 5;
  for (const QScalar& c : av) e.a.emplace_back(c);
  for (const QScalar& c : bv) cand.beta.emplace_back(c);
  for (const QScalar& c : gv) cand.gamma.emplace_back(c);

  // Q_0 .. Q_6
  std::vector<PolyX> Q;
  for (unsigned m = 0; m <= 6; ++m) {
    PolyX acc;
    for (unsigned k = 0; k <= m; ++k) acc += av[m - k] * h_small(k);
    Q.push_back(acc);
  }

  const PolyX x = PolyX::monomial(one(), 1);
  for (long n = 0; n <= 5; ++n) {
    PolyX defect = (one() - qpow(Rat(n + 1))) * Q[static_cast<std::size_t>(n) + 1] -
                   ((one() - q()) * qh(n)) * (x * Q[static_cast<std::size_t>(n)]) -
                   bv[static_cast<std::size_t>(n)] * Q[static_cast<std::size_t>(n)];
    if (n >= 1)
      defect += gv[static_cast<std::size_t>(n)] * Q[static_cast<std::size_t>(n) - 1];

    // peel h-coefficients from the top
    std::vector<QScalar> d(static_cast<std::size_t>(n) + 2);
    PolyX rem = defect;
    for (long j = n + 1; j >= 0; --j) {
      const PolyX hj = h_small(static_cast<unsigned>(j));
      QScalar dj = rem.coeff(static_cast<std::size_t>(j)) /
                   hj.coeff(static_cast<std::size_t>(j));
      d[static_cast<std::size_t>(j)] = dj;
      if (!dj.is_zero()) rem -= dj * hj;
    }
    CHECK(rem.is_zero());
    for (long k = 0; k <= n + 1; ++k) {
      const AlphaPoly r = constraint_residual(n, k, e, cand);
      CHECK(r.degree() <= 0);
      CHECK(r == ap_const(d[static_cast<std::size_t>(k)]));
    }
  }
}

TEST_CASE("case I replay") {
  CHECK_THROWS_AS(replay_case1(3), const DomainError&);

  const long N = 10;
  const ReplayReport rep = replay_case1(N);
  CHECK(rep.outcome == Outcome::ForcedHermite);
  CHECK(!rep.witness.has_value());
  REQUIRE(rep.beta.size() == static_cast<std::size_t>(N) + 1);
  REQUIRE(rep.gamma.size() == static_cast<std::size_t>(N) + 1);
  for (const AlphaPoly& b : rep.beta) CHECK(b.is_zero());
  // gamma_n = (1-q)^2 q^(n-1/2)/4 - alpha (1-q)(1+q^n)
  const AlphaPoly al = AlphaPoly::alpha();
  for (long n = 1; n <= N; ++n) {
    const AlphaPoly expect =
        AlphaPoly(quarter_sq(2 * n - 1)) -
        ((one() - q()) * (one() + qpow(Rat(n)))) * al;
    CHECK(rep.gamma[static_cast<std::size_t>(n)] == expect);
  }
  CHECK(rep.notes.find("alpha") != std::string::npos);
}

TEST_CASE("case I data: closed form, limit recurrence, residual factorization") {
  const long N = 10;
  const AlphaPoly al = AlphaPoly::alpha();
  const QScalar alpha_star = QScalar(Rat(1, 4)) * (one() - q()) * qh(-1);

  // Rebuild the case I candidate independently of replay_case1.
  AppellExpansion e;
  e.a.assign(static_cast<std::size_t>(N) + 2, AlphaPoly());
  e.a[0] = AlphaPoly(one());
  for (long k = 1; 2 * k <= N + 1; ++k)
    e.a[static_cast<std::size_t>(2 * k)] = AlphaPoly::monomial(
        (one() - q()).pow(k) / qpoch(q(), q(), static_cast<unsigned>(k)),
        static_cast<std::size_t>(k));
  OpsCandidate cand;
  cand.max_n = N;
  cand.beta.assign(static_cast<std::size_t>(N) + 1, AlphaPoly());
  cand.gamma.assign(static_cast<std::size_t>(N) + 1, AlphaPoly());
  for (long n = 1; n <= N; ++n)
    cand.gamma[static_cast<std::size_t>(n)] =
        AlphaPoly(quarter_sq(2 * n - 1)) -
        ((one() - q()) * (one() + qpow(Rat(n)))) * al;

  // The closed form satisfies the limit recurrence exactly:
  // (1 - q^k) a_{2k} = (1-q) alpha a_{2k-2}.
  for (long k = 1; 2 * k <= N + 1; ++k) {
    const AlphaPoly lhs =
        (one() - qpow(Rat(k))) * e.a[static_cast<std::size_t>(2 * k)];
    const AlphaPoly rhs =
        ((one() - q()) * al) * e.a[static_cast<std::size_t>(2 * k - 2)];
    CHECK(lhs == rhs);
  }

  // The cells that defined gamma and beta hold identically in alpha.
  for (long n = 1; n <= N; ++n)
    CHECK(constraint_residual(n, n - 1, e, cand).is_zero());
  for (long n = 0; n <= N; ++n)
    CHECK(constraint_residual(n, n, e, cand).is_zero());

  // Even cells leave the factored residual.
  for (long k = 2; k <= 5; ++k) {
    const QScalar rho = (one() - q()).pow(k) * (one() - qpow(Rat(1 - k))) /
                        qpoch(q(), q(), static_cast<unsigned>(k - 1));
    for (long n = 2 * k - 1; n <= N; ++n) {
      const AlphaPoly r = constraint_residual(n, n + 1 - 2 * k, e, cand);
      const AlphaPoly expect =
          (rho * qpow(Rat(n))) *
          (AlphaPoly::monomial(one(), static_cast<std::size_t>(k - 1)) *
           (AlphaPoly(alpha_star) - al));
      CHECK(r == expect);
      CHECK(r.degree() == k);
      CHECK(!r.leading().is_zero());
      CHECK(r.leading().eval_exact(Rat(1, 2)) != 0);
      // alpha = 0 and alpha = alpha* are the only roots.
      CHECK(r.eval(QScalar()).is_zero());
      CHECK(r.eval(alpha_star).is_zero());
      CHECK(!r.eval(QScalar(1)).is_zero());
    }
  }

  // Frozen oracle: n = 3, even cell k = 2, alpha = 1 at s = 1/2.
  const AlphaPoly r32 = constraint_residual(3, 0, e, cand);
  CHECK(r32.eval(QScalar(1)).eval_exact(Rat(1, 2)) == Rat(225, 1048576));

  // alpha = alpha* makes every gamma_n the same negative constant.
  for (long n = 1; n <= N; ++n)
    CHECK(cand.gamma[static_cast<std::size_t>(n)].eval(alpha_star) ==
          -quarter_sq(-1));
}

TEST_CASE("case II replay on a generic sample") {
  CHECK_THROWS_AS(replay_case2(10, Rat(0), Rat(0), Rat(1, 2)), const DomainError&);
  CHECK_THROWS_AS(replay_case2(10, Rat(1), Rat(0), Rat(0)), const DomainError&);
  CHECK_THROWS_AS(replay_case2(10, Rat(1), Rat(0), Rat(1)), const DomainError&);
  CHECK_THROWS_AS(replay_case2(10, Rat(1), Rat(0), Rat(3, 2)), const DomainError&);

  const ReplayReport rep = replay_case2(10, Rat(1), Rat(0), Rat(1, 2));
  REQUIRE(rep.outcome == Outcome::ContradictionWitness);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->n == 2);
  CHECK(rep.witness->k == 0);
  CHECK(rep.witness->residual == ap_const(QScalar(Rat(-1395, 65536))));
  CHECK(!rep.witness->residual.is_zero());

  // Forced data recorded at the sample: beta_0 = (1 - q^(1/2))(1 + q^(1/2)) a_1.
  REQUIRE(rep.beta.size() == 11);
  CHECK(rep.beta[0] == ap_const(QScalar(Rat(15, 16))));

  // Forward build: a_3 = -16/21 for this sample (derived by hand from the
  // n-free relation with a_1 = 1, a_2 = 0, q = 1/16).
  {
    const Rat s2(1, 4);
    const Rat qv = s2 * s2;
    const Rat D = (1 - s2) * 1 * 1 - (1 - qv) * 0;
    const Rat a3 = ((1 - s2) * 1 * 0 - D * 1) / (1 - s2 * s2 * s2);
    CHECK(a3 == Rat(-16, 21));
  }

  const ReplayReport rep2 = replay_case2(10, Rat(1, 3), Rat(1, 7), Rat(2, 3));
  REQUIRE(rep2.outcome == Outcome::ContradictionWitness);
  REQUIRE(rep2.witness.has_value());
  CHECK(rep2.witness->k >= 0);
  CHECK(!rep2.witness->residual.is_zero());
  CHECK(rep2.witness->residual.degree() == 0);  // exact rational value
}

TEST_CASE("case II replay detects the gamma-degenerate conspiracy point") {
  // a_1 = a_2 = 5/4 at s = 1/2 sits exactly on the b = 0,
  // c^2 = (1-q)^2 q^(-1/2)/4 solution shape: every system cell vanishes and
  // every gamma_n is zero.
  const ReplayReport rep = replay_case2(10, Rat(5, 4), Rat(5, 4), Rat(1, 2));
  REQUIRE(rep.outcome == Outcome::ContradictionWitness);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->k == -1);
  CHECK(rep.witness->n == 1);
  CHECK(rep.witness->residual.is_zero());  // the offending gamma value itself
  for (std::size_t n = 1; n < rep.gamma.size(); ++n)
    CHECK(rep.gamma[n].is_zero());
  CHECK(rep.notes.find("gamma") != std::string::npos);

  // A nudge off the conspiracy point restores a residual witness.
  const ReplayReport off = replay_case2(10, Rat(5, 4), Rat(5, 4) + Rat(1, 100), Rat(1, 2));
  REQUIRE(off.witness.has_value());
  CHECK(off.witness->k >= 0);
  CHECK(!off.witness->residual.is_zero());
}

TEST_CASE("uniqueness aggregate") {
  CHECK_THROWS_AS(uniqueness_report(3, {}), const DomainError&);

  const std::vector<Case2Sample> grid = default_sample_grid();
  REQUIRE(grid.size() == 12);
  // No default grid point is gamma-degenerate: each yields a residual witness.
  for (const Case2Sample& sm : grid) {
    const ReplayReport r = replay_case2(10, sm.a1, sm.a2, sm.s);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->k >= 0);
    CHECK(!r.witness->residual.is_zero());
  }

  const ReplayReport rep = uniqueness_report(10, grid);
  CHECK(rep.outcome == Outcome::ForcedHermite);
  CHECK(!rep.witness.has_value());
  // Aggregate carries the forced q-Hermite data.
  const OpsCandidate hc = hermite_candidate(10);
  CHECK(rep.beta == hc.beta);
  CHECK(rep.gamma == hc.gamma);
  CHECK(rep.notes.find("Sample 12") != std::string::npos);

  // Minimal N.
  const ReplayReport small = uniqueness_report(4, grid);
  CHECK(small.outcome == Outcome::ForcedHermite);

  // Empty sample list: case I only, flagged incomplete.
  const ReplayReport solo = uniqueness_report(10, {});
  CHECK(solo.outcome == Outcome::ForcedHermite);
  CHECK(solo.notes.find("incomplete") != std::string::npos);
}
