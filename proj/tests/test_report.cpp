#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qaw/report.hpp"

#include <string>

#include "json.hpp"
#include "qaw/characterize.hpp"
#include "qaw/families.hpp"
#include "qaw/scalar.hpp"
#include "qaw/verify.hpp"

using namespace qaw;
using nlohmann::ordered_json;

namespace {

// Asserts that each needle occurs in order of appearance.
void check_key_order(const std::string& text, const std::vector<std::string>& keys) {
  std::size_t pos = 0;
  for (const auto& key : keys) {
    std::size_t found = text.find(key, pos);
    CAPTURE(key);
    REQUIRE(found != std::string::npos);
    pos = found;
  }
}

}  // namespace

TEST_CASE("family JSON: exact bytes, fixed key order, determinism") {
  std::string j2 = family_json("hermite", 2, hermite(2));
  CHECK(j2 ==
        "{\"family\":\"hermite\",\"n\":2,\"coeffs_x\":"
        "[\"(-1 + s^4)/(1)\",\"(0)/(1)\",\"(4)/(1)\"]}\n");
  CHECK(family_json("psi", 0, psi(0)) ==
        "{\"family\":\"psi\",\"n\":0,\"coeffs_x\":[\"(1)/(1)\"]}\n");
  CHECK(family_json("hermite", 2, hermite(2)) == j2);

  ordered_json parsed = ordered_json::parse(j2);
  CHECK(parsed["family"] == "hermite");
  CHECK(parsed["n"] == 2);
  CHECK(parsed["coeffs_x"].size() == 3);
  check_key_order(j2, {"\"family\"", "\"n\"", "\"coeffs_x\""});
}

TEST_CASE("family CSV table") {
  CHECK(family_csv("hermite", 2, hermite(2)) ==
        "family,n,k,coeff\n"
        "hermite,2,0,(-1 + s^4)/(1)\n"
        "hermite,2,1,(0)/(1)\n"
        "hermite,2,2,(4)/(1)\n");
  CHECK(family_csv("psi", 0, psi(0)) == "family,n,k,coeff\npsi,0,0,(1)/(1)\n");
}

TEST_CASE("eval CSV row") {
  CHECK(eval_csv(2, "1/16", "1", "49/16") == "n,q,x,value\n2,1/16,1,49/16\n");
}

TEST_CASE("replay report JSON for the forced outcome") {
  ReplayReport rep = check_system(hermite_expansion(4), hermite_candidate(4), 4);
  REQUIRE(rep.outcome == Outcome::ForcedHermite);
  std::string j = replay_report_json(rep);
  CHECK(replay_report_json(rep) == j);  // deterministic bytes

  ordered_json parsed = ordered_json::parse(j);
  CHECK(parsed["outcome"] == "ForcedHermite");
  CHECK(parsed["witness"].is_null());
  CHECK(parsed["beta"].size() == 5);   // beta_0 .. beta_4
  CHECK(parsed["gamma"].size() == 4);  // gamma_1 .. gamma_4
  CHECK(parsed["beta"][0] == "(0)/(1)");
  // gamma_1 = (1-q)^2 q^(1/2) / 4 with q = s^4
  CHECK(parsed["gamma"][0] == "(1/4*s^2 - 1/2*s^6 + 1/4*s^10)/(1)");
  CHECK(parsed["notes"].get<std::string>().find("constraint cells vanish") !=
        std::string::npos);
  check_key_order(j, {"\"outcome\"", "\"witness\"", "\"beta\"", "\"gamma\"",
                      "\"notes\""});
}

TEST_CASE("replay report JSON for a witness outcome") {
  ReplayReport rep;
  rep.outcome = Outcome::ContradictionWitness;
  rep.witness = Witness{2, 0, AlphaPoly(QScalar(Rat(-5, 4)))};
  rep.beta = {AlphaPoly(QScalar(0))};
  rep.gamma = {AlphaPoly(), AlphaPoly(QScalar(1))};
  rep.notes = "quoted \"text\" survives\nacross lines";
  std::string j = replay_report_json(rep);

  ordered_json parsed = ordered_json::parse(j);
  CHECK(parsed["outcome"] == "ContradictionWitness");
  CHECK(parsed["witness"]["n"] == 2);
  CHECK(parsed["witness"]["k"] == 0);
  CHECK(parsed["witness"]["residual"] == "(-5/4)/(1)");
  CHECK(parsed["gamma"].size() == 1);
  CHECK(parsed["notes"] == "quoted \"text\" survives\nacross lines");
  check_key_order(j, {"\"outcome\"", "\"witness\"", "\"n\"", "\"k\"",
                      "\"residual\"", "\"beta\"", "\"gamma\"", "\"notes\""});
}

TEST_CASE("suite text rendering") {
  SuiteResult passing = run_suite("dq-h", 3, 4);
  std::string text = suite_text(passing);
  CHECK(text.rfind("suite dq-h: 3 cases, 0 failures (", 0) == 0);
  CHECK(text.find("FAIL") == std::string::npos);

  SuiteResult failing;
  failing.suite = "demo";
  failing.cases_run = 1;
  failing.failures.push_back({"demo/identity", "n = 1", "(1)/(1)"});
  failing.wall_seconds = 0.0;
  CHECK(suite_text(failing) ==
        "suite demo: 1 cases, 1 failures (0.00 s)\n"
        "FAIL demo/identity [n = 1] residual = (1)/(1)\n");
}
