#pragma once

// Machine replay of the uniqueness theorem for orthogonal polynomial sets
// that are Appell with respect to the Askey-Wilson divided-difference
// operator: the continuous q-Hermite family is the only one.
//
// A candidate set {Q_n} is encoded by its three-term recurrence data
// (beta_n, gamma_n) in the h-normalized convention
//
//   (1 - q^(n+1)) Q_{n+1}(x) = ((1-q) q^(n/2) x + beta_n) Q_n(x)
//                               - gamma_n Q_{n-1}(x),
//
// and by its Appell expansion Q_n = sum_k a_{n-k} h_k (a_0 = 1), which is
// what "dq(Q_n) = Q_{n-1}" forces.  Matching coefficients of h_k turns the
// recurrence into the constraint system
//
//   (1 - q^((n-k+1)/2)) (1 + q^((n+1+k)/2)) a_{n+1-k}
//       - beta_n a_{n-k}
//       + [gamma_n - (1-q)^2 q^((n+k)/2) / 4] a_{n-k-1}  =  0
//
// for 0 <= k <= n+1 (a_{-1} = a_{-2} = 0).  The replay derives the forced
// solution and exhibits an explicit contradiction for every perturbation:
// Case I (a_1 = 0, a_2 = alpha formal) symbolically over Q(s)[alpha], and
// Case II (a_1 != 0) by exact rational sampling.

#include <optional>
#include <string>
#include <vector>

#include "qaw/alphapoly.hpp"
#include "qaw/scalar.hpp"

namespace qaw {

// Recurrence data of a candidate orthogonal set.  Entries are AlphaPoly so
// one code path serves both the symbolic replays (coefficients carrying the
// formal alpha) and plain scalar candidates (degree-0 entries).
struct OpsCandidate {
  long max_n = -1;
  std::vector<AlphaPoly> beta;   // beta[n] for n = 0..max_n
  std::vector<AlphaPoly> gamma;  // gamma[n] for n = 1..max_n; slot 0 unused
};

// Appell expansion coefficients a_0, a_1, ..., with a_0 = 1; indices below
// zero read as zero.
struct AppellExpansion {
  std::vector<AlphaPoly> a;
};

enum class Outcome { ForcedHermite, ContradictionWitness };

// A contradiction certificate.  k >= 0: the constraint-system cell (n, k)
// has the recorded nonzero residual.  k = -1: the system itself is
// consistent but gamma_n = 0, which no orthogonal set allows (the
// three-term data of an orthogonal family needs gamma_n > 0), so the
// residual field records that offending gamma value instead.
struct Witness {
  long n = 0;
  long k = 0;
  AlphaPoly residual;
};

struct ReplayReport {
  Outcome outcome = Outcome::ForcedHermite;
  std::optional<Witness> witness;
  std::vector<AlphaPoly> beta;   // derived beta_0..beta_N
  std::vector<AlphaPoly> gamma;  // derived gamma_1..gamma_N; slot 0 zero
  std::string notes;
};

const char* outcome_name(Outcome o);

// Residual of the constraint-system cell (n, k); zero iff the cell holds.
// Pre: 0 <= k <= n+1, exp.a has at least n+2 entries, cand covers n.
// Throws Error on an out-of-range index.
AlphaPoly constraint_residual(long n, long k, const AppellExpansion& exp,
                              const OpsCandidate& cand);

// Evaluates every cell with 0 <= n <= N, 0 <= k <= n+1 in ascending (n, k)
// order.  ForcedHermite iff all residuals vanish; otherwise the first
// nonzero residual becomes the witness.
ReplayReport check_system(const AppellExpansion& exp, const OpsCandidate& cand,
                          long N);

// beta_n forced by the k = n cell: beta_n = (1 - q^(1/2))(1 + q^(n+1/2)) a_1.
AlphaPoly derive_beta(long n, const AlphaPoly& a1);

// The q-Hermite solution itself: beta_n = 0, gamma_n = (1-q)^2 q^(n-1/2)/4,
// a = (1, 0, 0, ...).  Candidate covers n <= N; expansion holds N+2 entries.
OpsCandidate hermite_candidate(long N);
AppellExpansion hermite_expansion(long N);

// Case I (beta_0 = 0, hence a_1 = 0; a_2 = alpha formal), symbolically over
// Q(s)[alpha]:
//   - forward elimination forces every odd a to vanish,
//   - gamma_n = (1-q)^2 q^(n-1/2)/4 - alpha (1-q)(1+q^n) is solved from the
//     a_2 cells,
//   - the even-index closed form a_{2k} = (1-q)^k alpha^k / (q;q)_k (the
//     exact solution of the large-n limit recurrence) substituted into the
//     remaining even cells leaves the residual
//       (1-q)^k (1 - q^(1-k)) q^n / (q;q)_{k-1} * alpha^(k-1) (alpha* - alpha),
//     alpha* = (1-q) q^(-1/2)/4, verified structurally and certified nonzero
//     at a rational sample — so every alpha outside {0, alpha*} is
//     contradicted, and alpha* itself forces gamma_n < 0 (not orthogonal),
//   - alpha = 0 collapses to the q-Hermite data: ForcedHermite.
// Pre: N >= 4.  Internal verification failures throw Error.
ReplayReport replay_case1(long N);

// Case II (a_1 != 0) at the exact rational point q = s_sample^4: derives
// gamma_n and beta_n from a_1, a_2, builds a_3.. forward from the n-free
// part of the system, then scans the full system for its first failing
// cell.  When the sample conspires to satisfy the system exactly (the
// b = 0, c^2 = (1-q)^2 q^(-1/2)/4 solution shape), the contradiction is
// gamma_n = 0 instead, reported as a k = -1 witness.  Also re-verifies the
// closing algebra symbolically: the solution shape forces b = 0, then
// c^2 = (1-q)^2 q^(-1/2)/4, and that value makes gamma_n identically zero.
// Pre: a1_sample != 0, 0 < s_sample < 1.
ReplayReport replay_case2(long N, const Rat& a1_sample, const Rat& a2_sample,
                          const Rat& s_sample);

struct Case2Sample {
  Rat a1, a2, s;
};

// a1 in {1, -1, 1/3} x a2 in {0, 1/7} x s in {1/2, 2/3}.
std::vector<Case2Sample> default_sample_grid();

// Full replay: Case I symbolically, Case II on every sample.  Aggregate is
// ForcedHermite iff Case I collapses to the q-Hermite data and every sample
// yields a contradiction witness; the derived beta/gamma are then the forced
// q-Hermite values.  An empty sample list is flagged incomplete in notes.
// Pre: N >= 4.
ReplayReport uniqueness_report(long N, const std::vector<Case2Sample>& samples);

}  // namespace qaw
