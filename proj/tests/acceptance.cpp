// Acceptance runner: one PASS/FAIL line per criterion. Arguments select criteria (default: all).

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "ohno/ohno.hpp"

using namespace ohno;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

std::string summary(const std::vector<CheckReport>& rs) {
  std::string s;
  for (const auto& r : rs) {
    if (!s.empty()) s += "; ";
    s += r.check + " max_residual=" + r.max_residual + " tol=" + r.tolerance + (r.pass ? "" : " FAILED");
  }
  return s;
}

bool all_pass(const std::vector<CheckReport>& rs) {
  for (const auto& r : rs)
    if (!r.pass) return false;
  return !rs.empty();
}

Outcome exact(std::vector<CheckReport> rs) { return {all_pass(rs), summary(rs)}; }

Outcome suites(const std::vector<std::string>& names, SuiteOptions o, const std::string& tol) {
  o.tol = tol;
  const auto rs = run_suites(names, o, workers());
  return {all_pass(rs), summary(rs)};
}

struct Criterion {
  std::string title;
  double limit_s;
  std::function<Outcome()> run;
};

std::map<int, Criterion> criteria() {
  std::map<int, Criterion> c;
  c[1] = {"recursive and lattice-path symmetric harmonic products agree, total length <= 7", 60,
          [] { return exact({check_sym_harmonic_paths(7)}); }};
  c[2] = {"shuffle regularization reconstruction, length <= 8", 60, [] { return exact({check_reg_reconstruction(8)}); }};
  c[3] = {"f_n expression (length <= 5, n <= 4), fn_recur, fj_sum, sigmabar_fj_sigma", 0, [] {
            return exact({check_fn_harmonictilde(5, 4), check_fn_recur(), check_fj_sum(), check_sigmabar_fj_sigma()});
          }};
  c[4] = {"rho(X) through T^8 and Euler-gamma cancellation at orders <= 4", 0,
          [] { return exact({check_gamma_exact(8, 4)}); }};
  c[5] = {"|z(1,2) - z(3)| < 1e-30 at 128 bits", 1, [] {
            NumericOptions o;
            o.tol = ArbFloat::from_string("1e-30", o.prec);
            const auto r = check_euler_12(o);
            return Outcome{r.pass, summary({r})};
          }};
  c[6] = {"Ohno relation, weight <= 6, m <= 3, residual < 1e-25", 600, [] {
            SuiteOptions o;
            o.weight = 6, o.m = 3;
            return suites({"ohno"}, o, "1e-25");
          }};
  c[7] = {"regularized Ohno relation, length <= 4, T-order 3, residual < 1e-20", 900, [] {
            SuiteOptions o;
            o.weight = 4, o.t_order = 3;
            return suites({"main"}, o, "1e-20");
          }};
  c[8] = {"equivalent formulation (< 1e-18) and closed forms for w = 1 (< 1e-20)", 0, [] {
            SuiteOptions o;
            o.t_order = 3, o.a_order = 2, o.b_order = 2;
            const auto a = suites({"main-equiv"}, o, "1e-18");
            const auto b = suites({"sum-closed-forms"}, o, "1e-20");
            return Outcome{a.pass && b.pass, a.detail + "; " + b.detail};
          }};
  c[9] = {"tau_o_tau, H products, H special, Kawashima, sine form, regularization theorem, alpha_A, gamma identity",
          1200, [] {
            return suites({"taubar", "hprod", "hspecial", "kawashima", "ksine", "reg-theorem", "hypergeom"}, SuiteOptions{},
                          "1e-16");
          }};
  c[10] = {"weight-4 Ohno relation matrix has rank 3 and rows contract below 1e-25", 0, [] {
             const auto m = datamine(4);
             const auto worst = max_contraction(m, Precision{128});
             const bool small = worst < ArbFloat::from_string("1e-25", Precision{128});
             return Outcome{m.rank == 3 && small, std::to_string(m.rows.size()) + " rows over " +
                                                      std::to_string(m.basis.size()) + " indices, rank " +
                                                      std::to_string(m.rank) + " (expected 3), max contraction " +
                                                      (worst.is_zero() ? std::string("0") : worst.to_string(20))};
           }};
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  const auto all = criteria();
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    const int n = std::atoi(argv[i]);
    if (!all.count(n)) {
      std::cerr << "unknown criterion " << argv[i] << '\n';
      return 2;
    }
    selected.push_back(n);
  }
  if (selected.empty())
    for (const auto& [n, c] : all) selected.push_back(n);

  int failures = 0;
  for (int n : selected) {
    const auto& c = all.at(n);
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = c.limit_s <= 0 || s < c.limit_s;
    const bool pass = o.pass && in_time;
    failures += pass ? 0 : 1;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << n << ": " << c.title << " | " << o.detail
              << " | runtime " << s << " s";
    if (c.limit_s > 0) std::cout << " (limit " << c.limit_s << " s)";
    std::cout << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
