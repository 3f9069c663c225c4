#pragma once

// Named invariant suites over the operator core and the polynomial families.
//
// Each suite replays a bundle of exact identities over a parameter range and
// reports every violated instance together with the exact (symbolic) residual.
// Nothing here is numeric: a suite passes only when every residual is the
// zero element of Q(s)[x].
//
// Suites:
//   dq-psi       ladder identities for the divided difference on Psi_n:
//                the lowering rule, the x-weighted rule, and the iterated
//                closed form (the iterated block is capped at n <= 16).
//   dq-h         the Appell property dq(h_n) = h_{n-1}.
//   recurrences  the h three-term recurrence and the doubled (two-step)
//                recurrence obtained by applying 2x twice.
//   genfun       the generating-function chain: the a-series times the
//                eigenseries equals sum h_n t^n, and the rescaling
//                t -> 2t/(1-q) reproduces the continuous q-Hermite
//                generating function, coefficient by coefficient.
//   inverse      the psi->H and H->psi conversion rows expand exactly and
//                the two conversion matrices are mutual inverses (checked
//                row by row in both orders).
//   heat         the discrete heat propagator applied to (2x)^n reproduces
//                H_n(x|q).
//   big-e        the eigenrelation: applying dq to the eigenseries shifts
//                coefficients down by one slot (D_q E = t E).
//   a-coeffs     the a-series: closed form vs. recurrence, vanishing of odd
//                coefficients, and the reciprocal q^2-exponential product
//                expansion of the even part.

#include <string>
#include <vector>

namespace qaw {

struct VerifyFailure {
  std::string identity;  // e.g. "dq-psi/lower"
  std::string params;    // e.g. "n = 7" or "n = 7, k = 3"
  std::string residual;  // exact residual, serialized
};

struct SuiteResult {
  std::string suite;
  long cases_run = 0;
  std::vector<VerifyFailure> failures;
  double wall_seconds = 0.0;

  bool ok() const { return failures.empty(); }
};

// The canonical list of suite names accepted by run_suite.
const std::vector<std::string>& suite_names();

// Runs one named suite.  A "case" is one parameter point (one n, or one
// t-coefficient slot); a case may bundle several identities, and each violated
// identity instance contributes one entry to failures.
//
// max_n bounds the polynomial-degree ranges, t_order the series truncation
// order where a suite uses t-series.  Throws DomainError when max_n < 1 or
// t_order < 1, and Error for an unknown suite name.
SuiteResult run_suite(const std::string& suite, long max_n = 20, long t_order = 16);

}  // namespace qaw
