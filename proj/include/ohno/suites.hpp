#ifndef OHNO_SUITES_HPP
#define OHNO_SUITES_HPP

// Named verification suites. Each suite is a list of independent tasks; a bounded
// pool runs the tasks and the reports are merged in a fixed order.

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "ohno/checks_exact.hpp"
#include "ohno/checks_numeric.hpp"

namespace ohno {

struct SuiteOptions {
  std::optional<int> weight;
  std::optional<int> m;
  std::optional<int> t_order;
  std::optional<int> a_order;
  std::optional<int> b_order;
  std::optional<std::string> word;
  Precision prec{128};
  std::optional<std::string> tol;
};

class UnknownSuite : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"ohno",      "duality",   "main",           "main-equiv",
                                                 "taubar",    "hprod",     "hspecial",       "kawashima",
                                                 "ksine",     "reg-theorem", "internal-exact", "sum-closed-forms",
                                                 "hypergeom"};
  return names;
}

/// Word literal over {x, y} (or a rational-coefficient sum), or an index literal such as "1,2".
/// A bare "1" is the empty word.
inline NcPoly parse_word_or_index(const std::string& text) {
  if (text != "1" && !text.empty() && text.find_first_not_of("0123456789, ") == std::string::npos)
    return NcPoly(MzvIndex::parse(text).word());
  return NcPoly::parse(text);
}

struct SuitePlan {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::function<CheckReport()>> tasks;
};

namespace detail {

inline std::vector<NcPoly> polys(std::initializer_list<const char*> lits) {
  std::vector<NcPoly> out;
  for (const char* s : lits) out.push_back(NcPoly::parse(s));
  return out;
}

inline std::vector<NcPoly> times_z(std::vector<NcPoly> ws) {
  for (auto& w : ws) w = w * NcPoly::z();
  return ws;
}

inline std::vector<NcPoly> words_or(const SuiteOptions& o, std::vector<NcPoly> fallback) {
  if (o.word) return {parse_word_or_index(*o.word)};
  return fallback;
}

inline void reject_word(const SuiteOptions& o, const std::string& suite) {
  if (o.word) throw std::invalid_argument("suite " + suite + " does not take --word");
}

}  // namespace detail

/// Builds the task list of a suite; throws UnknownSuite, ParseError or std::invalid_argument on bad input.
inline SuitePlan plan_suite(const std::string& name, const SuiteOptions& o) {
  SuitePlan plan{name, {}, {}};
  NumericOptions num{o.prec, std::nullopt};
  if (o.tol) num.tol = ArbFloat::from_string(*o.tol, Precision{64});
  auto& P = plan.params;
  auto put = [&P](const std::string& k, long v) { P.emplace_back(k, std::to_string(v)); };
  put("prec", o.prec.bits);
  if (o.word) P.emplace_back("word", *o.word);
  auto& T = plan.tasks;

  if (name == "ohno") {
    const int m = o.m.value_or(3);
    put("max_m", m);
    if (o.word) {
      const NcPoly p = parse_word_or_index(*o.word);
      if (p.size() != 1) throw std::invalid_argument("ohno --word must be a single admissible word");
      const MzvIndex idx = MzvIndex::from_word(p.terms().begin()->first);
      T.push_back([idx, m, num] { return check_ohno_index(idx, m, num); });
    } else {
      const int w = o.weight.value_or(6);
      put("max_weight", w);
      for (int n = 2; n <= w; ++n)
        for (const auto& idx : admissible_indices(n)) T.push_back([idx, m, num] { return check_ohno_index(idx, m, num); });
    }
  } else if (name == "duality") {
    detail::reject_word(o, name);
    const int w = o.weight.value_or(7);
    put("max_weight", w);
    T.push_back([w, num] { return check_duality(w, num); });
  } else if (name == "main") {
    const int t = o.t_order.value_or(3);
    const int w = o.weight.value_or(4);
    put("t_order", t);
    if (!o.word) put("max_length", w);
    for (const auto& p : detail::words_or(o, all_words_poly(static_cast<std::size_t>(w))))
      T.push_back([p, t, num] { return check_main_theorem({p}, t, num); });
  } else if (name == "main-equiv") {
    const int t = o.t_order.value_or(3), a = o.a_order.value_or(2), b = o.b_order.value_or(2);
    put("t_order", t), put("a_order", a), put("b_order", b);
    for (const auto& p : detail::words_or(o, detail::polys({"1", "yx", "yyx", "yxx"}))) {
      if (!p.in_h0()) throw std::invalid_argument("main-equiv requires a word in h^0");
      T.push_back([p, t, a, b, num] { return check_main_equiv({p}, t, a, b, num); });
    }
  } else if (name == "taubar") {
    const int t = o.t_order.value_or(4);
    const int w = o.weight.value_or(4);
    put("t_order", t);
    if (!o.word) put("max_length", w);
    std::vector<NcPoly> ws;
    for (const Word& u : words_up_to(1, static_cast<std::size_t>(w))) ws.emplace_back(u);
    for (const auto& p : detail::words_or(o, ws)) T.push_back([p, t] { return check_tau_o_tau({p}, t); });
  } else if (name == "hprod") {
    const int a = o.a_order.value_or(2), b = o.b_order.value_or(2);
    put("a_order", a), put("b_order", b);
    const auto ws = detail::words_or(o, detail::times_z(detail::polys({"y", "yx", "yy"})));
    for (const auto& p : ws)
      if (!p.in_hprime()) throw std::invalid_argument("hprod requires words without constant term");
    T.push_back([ws, a, b, num] { return check_hprod(ws, a, b, num); });
  } else if (name == "hspecial") {
    detail::reject_word(o, name);
    const int d = o.weight.value_or(4);
    put("total_degree", d);
    T.push_back([d, num] { return check_hspecial(d, num); });
  } else if (name == "kawashima") {
    const int t = o.t_order.value_or(4);
    put("t_order", t);
    const auto ws = detail::words_or(o, detail::polys({"y", "yx", "yxx", "yyx"}));
    T.push_back([ws, t, num] { return check_kawashima(ws, t, num); });
  } else if (name == "ksine") {
    const int t = o.t_order.value_or(4);
    put("t_order", t);
    for (const auto& p : detail::words_or(o, detail::polys({"y", "yx", "yy"})))
      T.push_back([p, t, num] { return check_ksine({p}, t, num); });
  } else if (name == "reg-theorem") {
    detail::reject_word(o, name);
    const int t = o.t_order.value_or(4);
    const int w = o.weight.value_or(4);
    put("t_order", t), put("max_length", w);
    const auto len = static_cast<std::size_t>(w);
    T.push_back([len, t, num] { return check_reg_theorem(len, t, num); });
    T.push_back([len, t, num] { return check_reg_corollary(len > 1 ? len - 1 : len, t, num); });
    T.push_back([len, num] { return check_zsh_multiplicative(len + 1, num); });
    T.push_back([len, num] { return check_zstar_multiplicative(len + 1, num); });
    T.push_back([len] { return check_alpha_hom(len + 1, 3); });
  } else if (name == "internal-exact") {
    detail::reject_word(o, name);
    T = {[] { return check_product_laws(); },
         [] { return check_involutions(); },
         [] { return check_sym_harmonic_paths(); },
         [] { return check_sym_harmonic_reverse(); },
         [] { return check_append_rules(); },
         [] { return check_front_back_rules(); },
         [] { return check_reg_reconstruction(); },
         [] { return check_fn_harmonictilde(); },
         [] { return check_fn_recur(); },
         [] { return check_fj_sum(); },
         [] { return check_same_recurrence(); },
         [] { return check_sigmabar_fj_sigma(); },
         [] { return check_diamond_consistency(); },
         [] { return check_tau_o_tau(std::size_t{4}, 4); },
         [] { return check_alpha_hom(); },
         [] { return check_geometric_lemmas(); },
         [] { return check_harmonic_series_rules(); },
         [] { return check_gamma_exact(); },
         [] { return check_exp_log(); }};
  } else if (name == "sum-closed-forms") {
    detail::reject_word(o, name);
    const int t = o.t_order.value_or(3), a = o.a_order.value_or(2), b = o.b_order.value_or(2);
    put("t_order", t), put("a_order", a), put("b_order", b);
    T.push_back([t, a, b, num] { return check_sum_closed_forms(t, a, b, num); });
  } else if (name == "hypergeom") {
    detail::reject_word(o, name);
    const int d = o.weight.value_or(4);
    put("total_degree", d);
    T.push_back([d, num] { return check_hypergeom(d, num); });
  } else {
    throw UnknownSuite("unknown suite: " + name);
  }
  return plan;
}

/// Runs tasks on at most `threads` workers; results keep the task order.
inline std::vector<CheckReport> run_tasks(const std::vector<std::function<CheckReport()>>& tasks, unsigned threads) {
  std::vector<CheckReport> out(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      try {
        out[i] = tasks[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < n; ++k) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

/// Plans, runs and merges the given suites.
inline std::vector<CheckReport> run_suites(const std::vector<std::string>& names, const SuiteOptions& o,
                                           unsigned threads = 1) {
  std::vector<SuitePlan> plans;
  std::vector<std::function<CheckReport()>> all;
  for (const auto& n : names) {
    plans.push_back(plan_suite(n, o));
    for (const auto& t : plans.back().tasks) all.push_back(t);
  }
  const auto results = run_tasks(all, threads);
  std::vector<CheckReport> out;
  std::size_t k = 0;
  for (const auto& p : plans) {
    std::vector<CheckReport> parts(results.begin() + static_cast<std::ptrdiff_t>(k),
                                   results.begin() + static_cast<std::ptrdiff_t>(k + p.tasks.size()));
    k += p.tasks.size();
    out.push_back(merge_reports(p.name, parts, p.params));
  }
  return out;
}

inline CheckReport run_suite(const std::string& name, const SuiteOptions& o = {}, unsigned threads = 1) {
  return run_suites({name}, o, threads).front();
}

}  // namespace ohno

#endif
