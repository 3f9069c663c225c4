#pragma once

// Rendering helpers shared by the command-line tool and its tests.  Every
// function returns the complete output string (trailing newline included)
// so that identical inputs always produce byte-identical bytes on disk;
// JSON objects emit their keys in a fixed documented order.

#include <string>

#include "qaw/characterize.hpp"
#include "qaw/opcore.hpp"
#include "qaw/verify.hpp"

namespace qaw {

// One family member as a JSON object with keys, in order:
//   "family"   the family name string,
//   "n"        the degree,
//   "coeffs_x" the dense coefficient list in the x-monomial basis
//              (index = power, each entry a scalar string).
std::string family_json(const std::string& family, long n, const PolyX& p);

// The same table as CSV with header "family,n,k,coeff" and one row per
// x-power k from 0 through the degree.
std::string family_csv(const std::string& family, long n, const PolyX& p);

// A numeric evaluation row as CSV with header "n,q,x,value".
std::string eval_csv(long n, const std::string& q, const std::string& x,
                     const std::string& value);

// A characterization replay report as JSON with keys, in order:
//   "outcome"  "ForcedHermite" or "ContradictionWitness",
//   "witness"  null, or {"n", "k", "residual"} (residual serialized as a
//              polynomial in the formal coefficient alpha; k = -1 flags a
//              degenerate-gamma witness as documented in characterize.hpp),
//   "beta"     recurrence coefficients beta_0..beta_N as strings,
//   "gamma"    recurrence coefficients gamma_1..gamma_N as strings,
//   "notes"    the free-text audit trail.
std::string replay_report_json(const ReplayReport& report);

// Human-oriented suite summary: one header line
//   "suite <name>: <cases> cases, <k> failures (<t> s)"
// followed by one machine-parsable line per failure:
//   "FAIL <identity> [<params>] residual = <residual>".
std::string suite_text(const SuiteResult& result);

}  // namespace qaw
