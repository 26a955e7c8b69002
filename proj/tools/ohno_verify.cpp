// ohno-verify: runs verification suites and relation datamining.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ohno/ohno.hpp"

namespace {

int emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) {
    std::cerr << "cannot open " << out << " for writing\n";
    return 2;
  }
  f << text;
  return f ? 0 : 2;
}

long default_precision() {
  if (const char* env = std::getenv("OHNO_PREC")) {
    try {
      const long v = std::stol(env);
      if (v >= 32) return v;
    } catch (const std::exception&) {
    }
    std::cerr << "ignoring invalid OHNO_PREC=" << env << '\n';
  }
  return 128;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification of Ohno-type relations among multiple zeta values"};
  app.require_subcommand(1);

  std::vector<std::string> suites;
  std::optional<int> weight, m, t_order, a_order, b_order;
  std::optional<std::string> word, tol;
  long prec = default_precision();
  std::string out, format = "text";
  unsigned threads = 1;
  bool omit_duration = false;
  bool list = false;

  auto* verify = app.add_subcommand("verify", "run one or more verification suites");
  verify->add_option("suite", suites, "suite names")->check(CLI::IsMember(ohno::suite_names()));
  verify->add_flag("--list", list, "list suite names and exit");
  verify->add_option("--weight", weight, "maximum weight or word length; total degree for hspecial, hypergeom");
  verify->add_option("--m", m, "maximum height for the ohno suite");
  verify->add_option("--word", word, "word over {x,y} or index such as 1,2");
  verify->add_option("--t-order", t_order, "truncation order in T")->check(CLI::NonNegativeNumber);
  verify->add_option("--a-order", a_order, "truncation order in A")->check(CLI::NonNegativeNumber);
  verify->add_option("--b-order", b_order, "truncation order in B")->check(CLI::NonNegativeNumber);
  verify->add_option("--prec", prec, "target precision in bits (default $OHNO_PREC or 128)")->check(CLI::Range(32L, 100000L));
  verify->add_option("--tol", tol, "tolerance for numeric checks");
  verify->add_option("--out", out, "write the report to a file");
  verify->add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  verify->add_option("--threads", threads, "worker threads")->check(CLI::Range(1u, 256u));
  verify->add_flag("--omit-duration", omit_duration, "leave duration_ms out of JSON output");

  int dm_weight = 0;
  std::optional<int> max_m;
  auto* datamine = app.add_subcommand("datamine", "relation matrix of the Ohno relations at one weight");
  datamine->add_option("--weight", dm_weight, "weight, 3 to 9")->required();
  datamine->add_option("--max-m", max_m, "maximum height")->check(CLI::NonNegativeNumber);
  datamine->add_option("--prec", prec, "precision for the numeric contraction")->check(CLI::Range(32L, 100000L));
  datamine->add_option("--out", out, "write the matrix to a file");
  datamine->add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) {
      if (list) {
        for (const auto& s : ohno::suite_names()) std::cout << s << '\n';
        return 0;
      }
      if (suites.empty()) {
        std::cerr << "verify: at least one suite is required\n";
        return 2;
      }
      ohno::SuiteOptions o;
      o.weight = weight, o.m = m, o.t_order = t_order, o.a_order = a_order, o.b_order = b_order;
      o.word = word, o.tol = tol, o.prec = ohno::Precision{prec};
      std::vector<ohno::SuitePlan> plans;
      for (const auto& s : suites) plans.push_back(ohno::plan_suite(s, o));  // validates before running
      const auto reports = ohno::run_suites(suites, o, threads);
      std::string text;
      if (format == "json")
        text = ohno::reports_json(reports, !omit_duration);
      else if (format == "csv")
        text = ohno::reports_csv(reports);
      else
        text = ohno::reports_text(reports);
      if (const int rc = emit(text, out)) return rc;
      if (!out.empty()) std::cout << ohno::reports_text(reports);
      for (const auto& r : reports)
        if (!r.pass) return 1;
      return 0;
    }
    const auto mat = ohno::datamine(dm_weight, max_m.value_or(-1));
    const ohno::Precision p{prec};
    const auto worst = ohno::max_contraction(mat, p);
    const std::string contraction = worst.is_zero() ? "0" : worst.to_string(ohno::ArbFloat::digits_for(p));
    std::string text;
    if (format == "json")
      text = ohno::to_json(mat, contraction).dump(2) + "\n";
    else if (format == "csv")
      text = ohno::matrix_csv(mat);
    else
      text = ohno::matrix_text(mat, contraction);
    if (const int rc = emit(text, out)) return rc;
    return worst < ohno::ArbFloat::from_string("1e-25", p) ? 0 : 1;
  } catch (const ohno::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
