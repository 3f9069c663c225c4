#include "qaw/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace qaw {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json poly_coeff_strings(const PolyX& p) {
  ordered_json arr = ordered_json::array();
  for (long k = 0; k <= p.degree(); ++k) {
    arr.push_back(p.coeff(static_cast<std::size_t>(k)).str());
  }
  return arr;
}

}  // namespace

std::string family_json(const std::string& family, long n, const PolyX& p) {
  ordered_json j;
  j["family"] = family;
  j["n"] = n;
  j["coeffs_x"] = poly_coeff_strings(p);
  return j.dump() + "\n";
}

std::string family_csv(const std::string& family, long n, const PolyX& p) {
  std::ostringstream os;
  os << "family,n,k,coeff\n";
  for (long k = 0; k <= p.degree(); ++k) {
    os << family << ',' << n << ',' << k << ','
       << p.coeff(static_cast<std::size_t>(k)).str() << '\n';
  }
  return os.str();
}

std::string eval_csv(long n, const std::string& q, const std::string& x,
                     const std::string& value) {
  std::ostringstream os;
  os << "n,q,x,value\n" << n << ',' << q << ',' << x << ',' << value << '\n';
  return os.str();
}

std::string replay_report_json(const ReplayReport& report) {
  ordered_json j;
  j["outcome"] = outcome_name(report.outcome);
  if (report.witness) {
    ordered_json w;
    w["n"] = report.witness->n;
    w["k"] = report.witness->k;
    w["residual"] = report.witness->residual.str();
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  ordered_json betas = ordered_json::array();
  for (const auto& b : report.beta) betas.push_back(b.str());
  j["beta"] = betas;
  ordered_json gammas = ordered_json::array();
  for (std::size_t i = 1; i < report.gamma.size(); ++i) {
    gammas.push_back(report.gamma[i].str());
  }
  j["gamma"] = gammas;
  j["notes"] = report.notes;
  return j.dump(2) + "\n";
}

std::string suite_text(const SuiteResult& result) {
  std::ostringstream os;
  os << "suite " << result.suite << ": " << result.cases_run << " cases, "
     << result.failures.size() << " failures (" << std::fixed
     << std::setprecision(2) << result.wall_seconds << " s)\n";
  for (const auto& f : result.failures) {
    os << "FAIL " << f.identity << " [" << f.params << "] residual = "
       << f.residual << '\n';
  }
  return os.str();
}

}  // namespace qaw
