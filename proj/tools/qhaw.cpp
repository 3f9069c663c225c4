// qhaw — command-line front end for the exact q-Hermite operator calculus.
//
// Subcommands:
//   family        coefficient table of one polynomial (text, JSON, or CSV)
//   eval          evaluate one polynomial, exactly or in floating point
//   convert       basis-conversion rows between the psi and hermite families
//   verify        run a named exact identity suite
//   characterize  replay the uniqueness argument and emit a report
//
// Exit codes: 0 success, 1 failed checks or domain errors, 2 usage errors.

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qaw/characterize.hpp"
#include "qaw/families.hpp"
#include "qaw/opcore.hpp"
#include "qaw/report.hpp"
#include "qaw/scalar.hpp"
#include "qaw/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace qaw;

int usage_error(const std::string& msg) {
  std::cerr << "usage error: " << msg << "\n";
  return 2;
}

PolyX family_poly(const std::string& name, long n) {
  unsigned un = static_cast<unsigned>(n);
  if (name == "psi") return psi(un);
  if (name == "hermite") return hermite(un);
  return h_small(un);  // flag values are restricted to the three names
}

std::string float_str(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

// Horner evaluation with one floating-point scalar evaluation per
// coefficient; q_val is the value of q itself (not of s).
double poly_eval_float(const PolyX& p, double q_val, double x_val, long prec) {
  double acc = 0.0;
  for (long k = p.degree(); k >= 0; --k) {
    acc = acc * x_val + eval_float(p.coeff(static_cast<std::size_t>(k)), q_val, prec);
  }
  return acc;
}

struct FamilyArgs {
  std::string name;
  long n = 0;
  std::string format = "text";
};

int cmd_family(const FamilyArgs& a) {
  PolyX p = family_poly(a.name, a.n);
  if (a.format == "json") {
    std::cout << family_json(a.name, a.n, p);
  } else if (a.format == "csv") {
    std::cout << family_csv(a.name, a.n, p);
  } else {
    std::cout << p.str() << "\n";
  }
  return 0;
}

struct EvalArgs {
  std::string name;
  long n = 0;
  std::string s_text;
  double q_float = 0.0;
  bool have_s = false;
  bool have_qf = false;
  std::string x_text;
  long precision = 128;
  std::string format = "text";
};

int cmd_eval(const EvalArgs& a) {
  if (a.have_s == a.have_qf) {
    return usage_error("eval requires exactly one of --s and --q-float");
  }
  if (a.precision < 2) return usage_error("--precision must be at least 2");

  Rat x_rat;
  bool x_rational = true;
  try {
    x_rat = parse_rat(a.x_text);
  } catch (const ParseError&) {
    x_rational = false;
  }

  PolyX p = family_poly(a.name, a.n);
  std::string q_col, value;
  if (a.have_s) {
    Rat s;
    try {
      s = parse_rat(a.s_text);
    } catch (const ParseError& e) {
      return usage_error(std::string("--s: ") + e.what());
    }
    if (!(s > 0 && s < 1)) return usage_error("--s must satisfy 0 < s < 1");
    Rat q_val = s * s * s * s;
    q_col = rat_str(q_val);
    if (x_rational) {
      try {
        value = rat_str(p.eval_exact(s, x_rat));
      } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
      }
    } else {
      double xd = 0.0;
      try {
        xd = std::stod(a.x_text);
      } catch (const std::exception&) {
        return usage_error("--x is neither a rational nor a float: " + a.x_text);
      }
      value = float_str(poly_eval_float(p, q_val.get_d(), xd, a.precision));
    }
  } else {
    if (!(a.q_float > 0.0 && a.q_float < 1.0)) {
      return usage_error("--q-float must satisfy 0 < q < 1");
    }
    q_col = float_str(a.q_float);
    double xd = 0.0;
    if (x_rational) {
      xd = x_rat.get_d();
    } else {
      try {
        xd = std::stod(a.x_text);
      } catch (const std::exception&) {
        return usage_error("--x is neither a rational nor a float: " + a.x_text);
      }
    }
    value = float_str(poly_eval_float(p, a.q_float, xd, a.precision));
  }

  if (a.format == "csv") {
    std::cout << eval_csv(a.n, q_col, a.x_text, value);
  } else {
    std::cout << value << "\n";
  }
  return 0;
}

struct ConvertArgs {
  std::string from;
  long n = 0;
  std::string format = "text";
};

int cmd_convert(const ConvertArgs& a) {
  bool from_psi = a.from == "psi";
  std::string to = from_psi ? "hermite" : "psi";
  ConversionRow row =
      from_psi ? psi_to_hermite(static_cast<unsigned>(a.n))
               : hermite_to_psi(static_cast<unsigned>(a.n));
  if (a.format == "json") {
    ordered_json j;
    j["from"] = a.from;
    j["to"] = to;
    j["n"] = a.n;
    ordered_json weights = ordered_json::array();
    for (const auto& [k, w] : row.weights) {
      ordered_json entry;
      entry["k"] = k;
      entry["target"] = a.n - 2 * k;
      entry["coeff"] = w.str();
      weights.push_back(entry);
    }
    j["weights"] = weights;
    std::cout << j.dump() << "\n";
  } else if (a.format == "csv") {
    std::cout << "from,to,n,k,target,coeff\n";
    for (const auto& [k, w] : row.weights) {
      std::cout << a.from << ',' << to << ',' << a.n << ',' << k << ','
                << (a.n - 2 * k) << ',' << w.str() << "\n";
    }
  } else {
    std::cout << a.from << "_" << a.n << " over " << to << ":\n";
    for (const auto& [k, w] : row.weights) {
      std::cout << "  k = " << k << ", target = " << (a.n - 2 * k)
                << ", coeff = " << w.str() << "\n";
    }
  }
  return 0;
}

struct VerifyArgs {
  std::string suite;
  long max_n = 20;
  long t_order = 16;
};

int cmd_verify(const VerifyArgs& a) {
  SuiteResult res = run_suite(a.suite, a.max_n, a.t_order);
  std::cout << suite_text(res);
  return res.ok() ? 0 : 1;
}

struct CharacterizeArgs {
  long max_n = 10;
  std::vector<std::string> a1, a2, s;
  std::string out;
};

int cmd_characterize(const CharacterizeArgs& a) {
  std::vector<Case2Sample> samples;
  if (a.a1.empty() && a.a2.empty() && a.s.empty()) {
    samples = default_sample_grid();
  } else {
    if (a.a1.size() != a.a2.size() || a.a1.size() != a.s.size()) {
      return usage_error(
          "--a1, --a2 and --s must be given once per sample, in equal numbers");
    }
    for (std::size_t i = 0; i < a.a1.size(); ++i) {
      Case2Sample sample;
      try {
        sample.a1 = parse_rat(a.a1[i]);
        sample.a2 = parse_rat(a.a2[i]);
        sample.s = parse_rat(a.s[i]);
      } catch (const ParseError& e) {
        return usage_error(std::string("bad sample value: ") + e.what());
      }
      if (sample.a1 == 0) {
        return usage_error("sample --a1 must be nonzero (the a1 = 0 branch is always replayed)");
      }
      if (!(sample.s > 0 && sample.s < 1)) {
        return usage_error("sample --s must satisfy 0 < s < 1");
      }
      samples.push_back(sample);
    }
  }

  ReplayReport report = uniqueness_report(a.max_n, samples);
  std::string json = replay_report_json(report);
  if (!a.out.empty()) {
    std::ofstream f(a.out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot open " << a.out << " for writing\n";
      return 1;
    }
    f << json;
    std::cout << "outcome: " << outcome_name(report.outcome)
              << " (report written to " << a.out << ")\n";
  } else {
    std::cout << json;
  }
  return report.outcome == Outcome::ForcedHermite ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "qhaw - exact operator calculus for the Rogers q-Hermite family\n"
      "All symbolic computation is exact over the rationals in the formal\n"
      "variable s, where q = s^4."};
  app.require_subcommand(1);

  const std::vector<std::string> family_names = {"psi", "hermite", "h"};
  const std::vector<std::string> formats3 = {"text", "json", "csv"};

  FamilyArgs fa;
  CLI::App* fam = app.add_subcommand("family", "Print one polynomial's coefficient table");
  fam->add_option("--name", fa.name, "Family: psi, hermite, or h")
      ->required()
      ->check(CLI::IsMember(family_names));
  fam->add_option("--n", fa.n, "Degree (>= 0)")
      ->required()
      ->check(CLI::NonNegativeNumber);
  fam->add_option("--format", fa.format, "Output format")
      ->check(CLI::IsMember(formats3))
      ->capture_default_str();

  EvalArgs ea;
  CLI::App* ev = app.add_subcommand("eval", "Evaluate one polynomial at a point");
  ev->add_option("--name", ea.name, "Family: psi, hermite, or h")
      ->required()
      ->check(CLI::IsMember(family_names));
  ev->add_option("--n", ea.n, "Degree (>= 0)")
      ->required()
      ->check(CLI::NonNegativeNumber);
  CLI::Option* opt_s =
      ev->add_option("--s", ea.s_text,
                     "Exact rational s with q = s^4 (enables the exact path)");
  CLI::Option* opt_qf =
      ev->add_option("--q-float", ea.q_float, "Floating-point q (float path)");
  opt_s->excludes(opt_qf);
  opt_qf->excludes(opt_s);
  ev->add_option("--x", ea.x_text, "Evaluation point (rational or float)")->required();
  ev->add_option("--precision", ea.precision,
                 "Working precision in bits for the float path")
      ->capture_default_str();
  ev->add_option("--format", ea.format, "Output format")
      ->check(CLI::IsMember(std::vector<std::string>{"text", "csv"}))
      ->capture_default_str();

  ConvertArgs ca;
  CLI::App* cv = app.add_subcommand(
      "convert", "Print a basis-conversion row between psi and hermite");
  cv->add_option("--from", ca.from, "Source family: psi or hermite")
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>{"psi", "hermite"}));
  cv->add_option("--n", ca.n, "Row index (>= 0)")
      ->required()
      ->check(CLI::NonNegativeNumber);
  cv->add_option("--format", ca.format, "Output format")
      ->check(CLI::IsMember(formats3))
      ->capture_default_str();

  VerifyArgs va;
  CLI::App* vf = app.add_subcommand("verify", "Run a named exact identity suite");
  vf->add_option("--suite", va.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  vf->add_option("--max-n", va.max_n, "Largest polynomial index")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  vf->add_option("--t-order", va.t_order, "Series truncation order")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  CharacterizeArgs ch;
  CLI::App* cz = app.add_subcommand(
      "characterize",
      "Replay the uniqueness argument; exit 0 only when the q-Hermite data is forced");
  cz->add_option("--max-n", ch.max_n, "Constraint rows to check (>= 4)")
      ->check(CLI::Range(4L, 1000000L))
      ->capture_default_str();
  cz->add_option("--a1", ch.a1,
                 "Sample a_1 (rational, nonzero); repeat once per sample, use "
                 "--a1=-1/3 for negatives")
      ->expected(1)
      ->allow_extra_args(false);
  cz->add_option("--a2", ch.a2, "Sample a_2 (rational); repeat once per sample")
      ->expected(1)
      ->allow_extra_args(false);
  cz->add_option("--s", ch.s, "Sample s in (0, 1) (rational); repeat once per sample")
      ->expected(1)
      ->allow_extra_args(false);
  cz->add_option("--out", ch.out, "Write the JSON report to this path instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help and friends
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(fam)) return cmd_family(fa);
    if (app.got_subcommand(ev)) {
      ea.have_s = opt_s->count() > 0;
      ea.have_qf = opt_qf->count() > 0;
      return cmd_eval(ea);
    }
    if (app.got_subcommand(cv)) return cmd_convert(ca);
    if (app.got_subcommand(vf)) return cmd_verify(va);
    if (app.got_subcommand(cz)) return cmd_characterize(ch);
  } catch (const ParseError& e) {
    return usage_error(e.what());
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;  // unreachable: a subcommand is required
}
