#ifndef OHNO_CHECKS_NUMERIC_HPP
#define OHNO_CHECKS_NUMERIC_HPP

// Numeric verification of the relations: both sides are built symbolically and
// evaluated with a fresh Evaluator, then compared coefficientwise.

#include <optional>
#include <string>
#include <vector>

#include "ohno/check_report.hpp"
#include "ohno/checks_exact.hpp"
#include "ohno/gamma_series.hpp"
#include "ohno/numeric.hpp"
#include "ohno/regularization.hpp"

namespace ohno {

struct NumericOptions {
  Precision prec{128};
  std::optional<ArbFloat> tol;
};

namespace detail {

inline ResidualSink numeric_sink(const std::string& name, const NumericOptions& o) {
  ResidualSink s(name, o.prec, o.tol ? *o.tol : default_tolerance(o.prec));
  s.param("prec", o.prec.bits);
  return s;
}

inline NumericSeries linear_numeric(const LinearForm& f, const TruncationProfile& prof, Evaluator& ev) {
  return ev.series(linear_series(f, prof));
}

inline std::vector<Word> h0_words(std::size_t max_len) {
  std::vector<Word> out;
  for (const Word& w : words_up_to(0, max_len))
    if (NcPoly(w).in_h0()) out.push_back(w);
  return out;
}

}  // namespace detail

/// |zeta(1,2) - zeta(3)|
inline CheckReport check_euler_12(const NumericOptions& o = {}) {
  auto sink = detail::numeric_sink("euler-12", o);
  Evaluator ev(o.prec);
  sink.add("z(1,2)-z(3)", ev.word_value(MzvIndex({1, 2}).word()) - ev.zeta(3));
  return sink.finish();
}

/// Duality zeta(k) = zeta(dual k) for admissible indices of weight <= max_weight.
inline CheckReport check_duality(int max_weight = 7, const NumericOptions& o = {}) {
  auto sink = detail::numeric_sink("duality", o);
  sink.param("max_weight", max_weight);
  Evaluator ev(o.prec);
  for (int n = 2; n <= max_weight; ++n) {
    for (const auto& idx : admissible_indices(n)) {
      const auto d = idx.dual();
      if (d < idx) continue;
      sink.add("(" + idx.to_string() + ")~(" + d.to_string() + ")", ev.word_value(idx.word()) - ev.word_value(d.word()));
    }
  }
  return sink.finish();
}

/// Ohno relation: sum over heights m of the index and of its dual, index weight <= max_weight, m <= max_m.
inline CheckReport check_ohno(int max_weight = 6, int max_m = 3, const NumericOptions& o = {}) {
  auto sink = detail::numeric_sink("ohno", o);
  sink.param("max_weight", max_weight).param("max_m", max_m);
  Evaluator ev(o.prec);
  for (int n = 2; n <= max_weight; ++n) {
    for (const auto& idx : admissible_indices(n)) {
      for (int m = 0; m <= max_m; ++m) {
        const auto [l, r] = ohno_check_pair(idx, m);
        sink.add("(" + idx.to_string() + ") m=" + std::to_string(m), ev(l) - ev(r));
      }
    }
  }
  return sink.finish();
}

/// Ohno relation of a single index at heights 0..max_m.
inline CheckReport check_ohno_index(const MzvIndex& idx, int max_m, const NumericOptions& o = {}) {
  auto sink = detail::numeric_sink("ohno", o);
  sink.param("index", idx.to_string()).param("max_m", max_m);
  Evaluator ev(o.prec);
  for (int m = 0; m <= max_m; ++m) {
    const auto [l, r] = ohno_check_pair(idx, m);
    sink.add("(" + idx.to_string() + ") m=" + std::to_string(m), ev(l) - ev(r));
  }
  return sink.finish();
}

/// Regularized Ohno relation, all X^a Y^b T^t coefficients, with the sigma-bar route as a cross-check.
inline CheckReport check_main_theorem(const std::vector<NcPoly>& words, int t_order = 3, const NumericOptions& o = {}) {
  auto sink = detail::numeric_sink("main", o);
  sink.param("words", static_cast<long>(words.size())).param("t_order", t_order);
  Evaluator ev(o.prec);
  Regularizer reg;
  for (const auto& w : words) {
    const auto [left, right] = main_theorem_sides(w, t_order, ev, reg);
    compare_series(sink, w.to_string() + ": ", left, right);
    compare_series(sink, w.to_string() + " via sigma-bar: ", main_theorem_left_via_sigma_bar(w, t_order, ev, reg), left);
  }
  return sink.finish();
}

inline std::vector<NcPoly> all_words_poly(std::size_t max_len) {
  std::vector<NcPoly> out;
  for (const Word& w : words_up_to(0, max_len)) out.emplace_back(w);
  return out;
}

/// Equivalent formulation with 1/(1-xA) w 1/(1-yB) and the gamma ratio.
inline CheckReport check_main_equiv(const std::vector<NcPoly>& words, int t_order = 3, int a_order = 2, int b_order = 2,
                                    const NumericOptions& o = {}) {
  auto sink = detail::numeric_sink("main-equiv", o);
  sink.param("t_order", t_order).param("a_order", a_order).param("b_order", b_order);
  const auto prof = TruncationProfile().with(Param::T, t_order).with(Param::A, a_order).with(Param::B, b_order);
  Evaluator ev(o.prec);
  Regularizer reg;
  for (const auto& w : words) {
    const auto [left, right] = main_theorem_equiv_sides(w, prof, ev, reg);
    compare_series(sink, w.to_string() + ": ", left, right);
  }
  return sink.finish();
}

/// Both closed forms for w = 1 and the depth-graded series of zeta({1}^{a-1}, b+1).
inline CheckReport check_sum_closed_forms(int t_order = 3, int a_order = 2, int b_order = 2,
                                          const NumericOptions& o = {}) {
  auto sink = detail::numeric_sink("sum-closed-forms", o);
  sink.param("t_order", t_order).param("a_order", a_order).param("b_order", b_order);
  const auto prof = TruncationProfile().with(Param::T, t_order).with(Param::A, a_order).with(Param::B, b_order);
  Evaluator ev(o.prec);
  Regularizer reg;
  const auto u = equiv_argument(NcPoly::one(), prof);
  const auto beta = ev.series(beta_ratio(prof));
  compare_series(sink, "sigma-bar: ", ev.series(reg.zsh_series(sigma_bar_series(u, t_order))), beta);
  compare_series(sink, "sigma: ", ev.series(reg.zsh_series(sigma_series(u, t_order))),
                 ev.series(beta_ratio_partner(prof)));

  const auto t_minus_b = detail::linear_numeric({{Param::T, Rational(1)}, {Param::B, Rational(-1)}}, prof, ev);
  const auto minus_a = detail::linear_numeric({{Param::A, Rational(-1)}}, prof, ev);
  NumericSeries sum = NumericSeries::constant(ev.one(), prof);
  NumericSeries pa = NumericSeries::constant(ev.one(), prof);
  for (int a = 1; a <= t_order + b_order; ++a) {
    pa = pa * t_minus_b;
    NumericSeries pb = NumericSeries::constant(ev.one(), prof);
    for (int b = 1; b <= a_order; ++b) {
      pb = pb * minus_a;
      std::vector<int> idx(static_cast<std::size_t>(a - 1), 1);
      idx.push_back(b + 1);
      sum -= ev.word_value(Word::from_index(idx)) * (pa * pb);
    }
  }
  compare_series(sink, "height-one sum: ", sum, beta);
  return sink.finish();
}

/// H(w1 ~* w2) = -H(w1) H(w2) sin(pi(A-B))/pi.
inline CheckReport check_hprod(const std::vector<NcPoly>& words, int a_order = 2, int b_order = 2,
                               const NumericOptions& o = {}) {
  auto sink = detail::numeric_sink("hprod", o);
  sink.param("a_order", a_order).param("b_order", b_order);
  const auto prof = TruncationProfile().with(Param::A, a_order).with(Param::B, b_order);
  Evaluator ev(o.prec);
  Regularizer reg;
  const auto diff = linear_series({{Param::A, Rational(1)}, {Param::B, Rational(-1)}}, prof);
  const auto sine = ev.series(sinpi_over_pi(diff));
  std::vector<NumericSeries> h;
  for (const auto& w : words) h.push_back(ev.series(H_series(WordSeries::constant(w, prof), prof, reg)));
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i; j < words.size(); ++j) {
      const auto prod = sym_harmonic(words[i], words[j]);
      const auto left = ev.series(H_series(WordSeries::constant(prod, prof), prof, reg));
      const auto right = -(h[i] * h[j] * sine);
      compare_series(sink, words[i].to_string() + "," + words[j].to_string() + ": ", left, right);
    }
  }
  return sink.finish();
}

/// -H(yT/(1+yT) z) = (pi/sin(pi(A-B))) (G - 1), coefficientwise to total degree `degree`.
inline CheckReport check_hspecial(int degree = 4, const NumericOptions& o = {}) {
  auto sink = detail::numeric_sink("hspecial", o);
  sink.param("total_degree", degree);
  const auto prof = TruncationProfile().with(Param::T, degree).with(Param::A, degree).with(Param::B, degree).with_total(degree);
  const auto wide =
      TruncationProfile().with(Param::T, degree + 1).with(Param::A, degree + 1).with(Param::B, degree + 1).with_total(degree + 1);
  Evaluator ev(o.prec);
  Regularizer reg;
  const auto arg = concat(y_t_over_one_plus_y_t(degree), NcPoly::z());
  const auto left = -ev.series(H_series(arg, prof, reg));
  const auto g = gamma_ratio(wide) - ZetaSeries::constant(ZetaPoly(Rational(1)), wide);
  const auto quotient = divide_by_difference(g, Param::A, Param::B);
  const auto e = pi_u_over_sin(linear_series({{Param::A, Rational(1)}, {Param::B, Rational(-1)}}, prof));
  const auto right = ev.series((e * quotient).truncated(prof));
  compare_series(sink, "", left, right);
  return sink.finish();
}

/// (-alpha+beta-gamma) Z((1-y alpha)^-1 y (1-x gamma-y beta)^-1 x (1+x alpha)^-1)
///   = (pi/sin(pi alpha)) (Gamma(1-gamma)Gamma(1-beta)/(Gamma(1-alpha-gamma)Gamma(1+alpha-beta)) - 1)
inline CheckReport check_hypergeom(int degree = 4, const NumericOptions& o = {}) {
  auto sink = detail::numeric_sink("hypergeom", o);
  sink.param("total_degree", degree);
  const auto prof =
      TruncationProfile().with(Param::Alpha, degree).with(Param::Beta, degree).with(Param::Gamma, degree).with_total(degree);
  const auto wide = TruncationProfile()
                        .with(Param::Alpha, degree + 1)
                        .with(Param::Beta, degree + 1)
                        .with(Param::Gamma, degree + 1)
                        .with_total(degree + 1);
  Evaluator ev(o.prec);
  Regularizer reg;
  const auto one = Rational(1), m1 = Rational(-1);
  const auto middle = geometric(WordSeries::monomial(NcPoly::x(), Param::Gamma, 1, prof) +
                                WordSeries::monomial(NcPoly::y(), Param::Beta, 1, prof));
  const auto word = geometric_word_series(one, Param::Alpha, NcPoly::y(), prof) * concat(NcPoly::y(), middle) *
                    concat(NcPoly::x(), geometric_word_series(m1, Param::Alpha, NcPoly::x(), prof));
  const auto pre = linear_series({{Param::Alpha, m1}, {Param::Beta, one}, {Param::Gamma, m1}}, prof);
  const auto left = ev.series(pre) * ev.series(reg.zsh_series(word));
  const auto g = gamma_quotient(wide, {{{Param::Gamma, m1}}, {{Param::Beta, m1}}},
                                {{{Param::Alpha, m1}, {Param::Gamma, m1}}, {{Param::Alpha, one}, {Param::Beta, m1}}}) -
                 ZetaSeries::constant(ZetaPoly(one), wide);
  const auto quotient = divide_by_param(g, Param::Alpha);
  const auto e = pi_u_over_sin(linear_series({{Param::Alpha, one}}, prof));
  const auto right = ev.series((e * quotient).truncated(prof));
  compare_series(sink, "", left.truncated(prof), right);
  return sink.finish();
}

/// K(w1 * w2; T) = K(w1; T) K(w2; T).
inline CheckReport check_kawashima(const std::vector<NcPoly>& words, int t_order = 4, const NumericOptions& o = {}) {
  auto sink = detail::numeric_sink("kawashima", o);
  sink.param("t_order", t_order);
  Evaluator ev(o.prec);
  std::vector<NumericSeries> k;
  for (const auto& w : words) k.push_back(ev.series(kawashima_K(w, t_order)));
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i; j < words.size(); ++j) {
      const auto left = ev.series(kawashima_K(harmonic(words[i], words[j]), t_order));
      compare_series(sink, words[i].to_string() + "," + words[j].to_string() + ": ", left, k[i] * k[j]);
    }
  }
  return sink.finish();
}

/// K(u; T) = sin(pi T)/pi Z^sh(phi(u) x 1/(1+zT)).
inline CheckReport check_ksine(const std::vector<NcPoly>& words, int t_order = 4, const NumericOptions& o = {}) {
  auto sink = detail::numeric_sink("ksine", o);
  sink.param("t_order", t_order);
  const auto prof = TruncationProfile().with(Param::T, t_order);
  Evaluator ev(o.prec);
  Regularizer reg;
  const auto sine = ev.series(sinpi_over_pi(ZetaSeries::variable(Param::T, prof)));
  const auto tail = geometric_word_series(Rational(-1), Param::T, NcPoly::z(), prof);
  for (const auto& u : words) {
    const auto left = ev.series(kawashima_K(u, t_order));
    const auto right = sine * ev.series(reg.zsh_series(concat(phi(u) * NcPoly::x(), tail)));
    compare_series(sink, u.to_string() + ": ", left, right);
  }
  return sink.finish();
}

/// Z^sh(w 1/(1-yT)) = Gamma_1(T) Z^*(w 1/(1-yT)) for w in h^0 up to max_len.
inline CheckReport check_reg_theorem(std::size_t max_len = 4, int t_order = 4, const NumericOptions& o = {}) {
  auto sink = detail::numeric_sink("reg-theorem", o);
  sink.param("max_length", static_cast<long>(max_len)).param("t_order", t_order);
  const auto prof = TruncationProfile().with(Param::T, t_order);
  Evaluator ev(o.prec);
  Regularizer reg;
  const auto g1 = ev.series(gamma1(t_order));
  const auto tail = geometric_word_series(Rational(1), Param::T, NcPoly::y(), prof);
  for (const Word& w : detail::h0_words(max_len)) {
    const auto s = concat(NcPoly(w), tail);
    compare_series(sink, w.to_string() + ": ", ev.series(reg.zsh_series(s)), g1 * ev.series(reg.zstar_series(s)));
  }
  return sink.finish();
}

/// Z^sh(w) = Gamma_1(L) Z^*(w) for w = v (1-yL)^-1, L = T and L = -T.
inline CheckReport check_reg_corollary(std::size_t max_len = 3, int t_order = 4, const NumericOptions& o = {}) {
  auto sink = detail::numeric_sink("reg-corollary", o);
  sink.param("max_length", static_cast<long>(max_len)).param("t_order", t_order);
  const auto prof = TruncationProfile().with(Param::T, t_order);
  Evaluator ev(o.prec);
  Regularizer reg;
  for (int sign : {1, -1}) {
    const auto l = ZetaSeries::monomial(ZetaPoly(Rational(sign)), Param::T, 1, prof);
    const auto g1 = ev.series(gamma1_at(l));
    const auto tail = geometric_word_series(Rational(sign), Param::T, NcPoly::y(), prof);
    for (const Word& v : detail::h0_words(max_len)) {
      const auto s = concat(NcPoly(v), tail);
      compare_series(sink, std::string(sign > 0 ? "L=T " : "L=-T ") + v.to_string() + ": ",
                     ev.series(reg.zsh_series(s)), g1 * ev.series(reg.zstar_series(s)));
    }
  }
  return sink.finish();
}

/// Z^sh(w1 sh w2) = Z^sh(w1) Z^sh(w2) on all words, total length <= max_total.
inline CheckReport check_zsh_multiplicative(std::size_t max_total = 5, const NumericOptions& o = {}) {
  auto sink = detail::numeric_sink("zsh-multiplicative", o);
  sink.param("max_total_length", static_cast<long>(max_total));
  Evaluator ev(o.prec);
  Regularizer reg;
  for (const Word& a : words_up_to(1, max_total - 1))
    for (const Word& b : words_up_to(a.size(), max_total - a.size())) {
      if (b.size() == a.size() && b < a) continue;
      sink.add(detail::pair_key(a, b), ev(reg.zsh(shuffle(a, b))) - ev(reg.zsh(NcPoly(a))) * ev(reg.zsh(NcPoly(b))));
    }
  return sink.finish();
}

/// Z^*(w1 * w2) = Z^*(w1) Z^*(w2) on h^1, total length <= max_total.
inline CheckReport check_zstar_multiplicative(std::size_t max_total = 5, const NumericOptions& o = {}) {
  auto sink = detail::numeric_sink("zstar-multiplicative", o);
  sink.param("max_total_length", static_cast<long>(max_total));
  Evaluator ev(o.prec);
  Regularizer reg;
  for (const Word& a : detail::h1_words(max_total - 1, false))
    for (const Word& b : detail::h1_words(max_total - a.size(), false)) {
      if (b.size() < a.size() || (b.size() == a.size() && b < a)) continue;
      sink.add(detail::pair_key(a, b),
               ev(reg.zstar(harmonic(a, b))) - ev(reg.zstar(NcPoly(a))) * ev(reg.zstar(NcPoly(b))));
    }
  return sink.finish();
}

/// Shuffle and stuffle products of admissible words map to products of values.
inline CheckReport check_product_values(int max_weight = 4, const NumericOptions& o = {}) {
  auto sink = detail::numeric_sink("product-values", o);
  sink.param("max_weight", max_weight);
  Evaluator ev(o.prec);
  Regularizer reg;
  std::vector<Word> adm;
  for (int n = 2; n <= max_weight; ++n)
    for (const auto& idx : admissible_indices(n)) adm.push_back(idx.word());
  for (std::size_t i = 0; i < adm.size(); ++i) {
    for (std::size_t j = i; j < adm.size(); ++j) {
      const ArbFloat p = ev.word_value(adm[i]) * ev.word_value(adm[j]);
      const std::string k = detail::pair_key(adm[i], adm[j]);
      sink.add("shuffle " + k, ev(MzvComb(shuffle(adm[i], adm[j]))) - p);
      sink.add("stuffle " + k, ev(reg.zstar(harmonic(adm[i], adm[j]))) - p);
    }
  }
  return sink.finish();
}

}  // namespace ohno

#endif
