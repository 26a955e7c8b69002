#ifndef OHNO_CHECKS_EXACT_HPP
#define OHNO_CHECKS_EXACT_HPP

// Exact identities of the word algebra and of the zeta-series layer.

#include <random>
#include <string>
#include <vector>

#include "ohno/check_report.hpp"
#include "ohno/gamma_series.hpp"
#include "ohno/maps.hpp"
#include "ohno/products.hpp"
#include "ohno/regularization.hpp"

namespace ohno {

namespace detail {

inline std::vector<Word> nonempty_words(std::size_t max_len) { return words_up_to(1, max_len); }

inline std::vector<Word> h1_words(std::size_t max_len, bool with_empty) {
  std::vector<Word> out;
  for (const Word& w : words_up_to(with_empty ? 0 : 1, max_len))
    if (w.empty() || w.front() == Letter::y) out.push_back(w);
  return out;
}

inline std::string pair_key(const Word& a, const Word& b) { return a.to_string() + "," + b.to_string(); }

/// Random polynomial with 1..3 terms, small integer coefficients, word lengths in [lo, hi].
inline NcPoly random_poly(std::mt19937_64& rng, std::size_t lo, std::size_t hi, bool h1) {
  std::uniform_int_distribution<int> nterms(1, 3), coef(-3, 3), len(static_cast<int>(lo), static_cast<int>(hi)),
      bit(0, 1);
  NcPoly p;
  const int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    std::string s;
    const int l = len(rng);
    for (int k = 0; k < l; ++k) s.push_back(bit(rng) ? 'y' : 'x');
    if (h1 && !s.empty()) s[0] = 'y';
    int c = coef(rng);
    if (c == 0) c = 1;
    p.add_term(Word::from_letters(s), Rational(c));
  }
  return p;
}

}  // namespace detail

/// Commutativity and associativity of shuffle and harmonic products on seeded random triples.
inline CheckReport check_product_laws(int samples = 60, std::size_t max_total = 9, unsigned seed = 20240601) {
  ResidualSink sink("product-laws");
  sink.param("samples", samples).param("max_total_length", static_cast<long>(max_total)).param("seed", seed);
  std::mt19937_64 rng(seed);
  const std::size_t per = max_total / 3;
  for (int i = 0; i < samples; ++i) {
    for (bool h1 : {false, true}) {
      const NcPoly a = detail::random_poly(rng, 0, per, h1), b = detail::random_poly(rng, 0, per, h1),
                   c = detail::random_poly(rng, 0, per, h1);
      const std::string tag = std::to_string(i);
      if (!h1) {
        sink.add_exact("shuffle-comm#" + tag, shuffle(a, b) - shuffle(b, a));
        sink.add_exact("shuffle-assoc#" + tag, shuffle(shuffle(a, b), c) - shuffle(a, shuffle(b, c)));
        sink.add_exact("shuffle-unit#" + tag, shuffle(NcPoly::one(), a) - a);
      } else {
        sink.add_exact("harmonic-comm#" + tag, harmonic(a, b) - harmonic(b, a));
        sink.add_exact("harmonic-assoc#" + tag, harmonic(harmonic(a, b), c) - harmonic(a, harmonic(b, c)));
        sink.add_exact("harmonic-unit#" + tag, harmonic(NcPoly::one(), a) - a);
      }
    }
  }
  return sink.finish();
}

/// tau and phi are involutions; tau reverses products.
inline CheckReport check_involutions(std::size_t max_len = 10, std::size_t max_pair = 8) {
  ResidualSink sink("involutions");
  sink.param("max_length", static_cast<long>(max_len)).param("max_pair_length", static_cast<long>(max_pair));
  for (const Word& w : words_up_to(0, max_len)) {
    sink.add_exact("tau-tau:" + w.to_string(), tau(tau(NcPoly(w))) - NcPoly(w));
    sink.add_exact("phi-phi:" + w.to_string(), phi(phi(NcPoly(w))) - NcPoly(w));
  }
  for (const Word& u : words_up_to(0, max_pair))
    for (const Word& v : words_up_to(0, max_pair - u.size()))
      sink.add_exact("tau-anti:" + detail::pair_key(u, v), NcPoly(tau(u + v)) - NcPoly(tau(v) + tau(u)));
  return sink.finish();
}

/// Recursive symmetric harmonic product against the signed lattice-path enumeration.
inline CheckReport check_sym_harmonic_paths(std::size_t max_total = 7) {
  ResidualSink sink("sym-harmonic-paths");
  sink.param("max_total_length", static_cast<long>(max_total));
  for (const Word& a : detail::nonempty_words(max_total - 1))
    for (const Word& b : detail::nonempty_words(max_total - a.size()))
      sink.add_exact(detail::pair_key(a, b), sym_harmonic(a, b) - sym_harmonic_paths(a, b));
  return sink.finish();
}

/// Reversal compatibility of the symmetric harmonic product.
inline CheckReport check_sym_harmonic_reverse(std::size_t max_total = 7) {
  ResidualSink sink("sym-harmonic-reverse");
  sink.param("max_total_length", static_cast<long>(max_total));
  for (const Word& a : detail::nonempty_words(max_total - 1))
    for (const Word& b : detail::nonempty_words(max_total - a.size()))
      sink.add_exact(detail::pair_key(a, b),
                     reverse(sym_harmonic(a, b)) - sym_harmonic(a.reversed(), b.reversed()));
  return sink.finish();
}

/// w1 e1 ~* w2 e1 = (w1 * w2) e1 and w1 z ~* w2 z = -(w1 * w2) z on h^1.
inline CheckReport check_append_rules(std::size_t max_len = 4) {
  ResidualSink sink("append-rules");
  sink.param("max_length", static_cast<long>(max_len));
  const NcPoly e1 = NcPoly::e1(), z = NcPoly::z();
  for (const Word& a : detail::h1_words(max_len, true)) {
    for (const Word& b : detail::h1_words(max_len, true)) {
      const NcPoly ab = harmonic(NcPoly(a), NcPoly(b));
      sink.add_exact("e1:" + detail::pair_key(a, b), sym_harmonic(NcPoly(a) * e1, NcPoly(b) * e1) - ab * e1);
      sink.add_exact("z:" + detail::pair_key(a, b), sym_harmonic(NcPoly(a) * z, NcPoly(b) * z) + ab * z);
    }
  }
  return sink.finish();
}

/// front_x, front_y, back_x, back_yy on h'.
inline CheckReport check_front_back_rules(std::size_t max_len = 4) {
  ResidualSink sink("front-back-rules");
  sink.param("max_length", static_cast<long>(max_len));
  const NcPoly x = NcPoly::x(), y = NcPoly::y(), xy = NcPoly(Word::parse("xy")), yx = NcPoly(Word::parse("yx"));
  for (const Word& aw : detail::nonempty_words(max_len)) {
    for (const Word& bw : detail::nonempty_words(max_len)) {
      const NcPoly a(aw), b(bw);
      const std::string k = detail::pair_key(aw, bw);
      const NcPoly ab = sym_harmonic(a, b);
      sink.add_exact("front_x1:" + k, sym_harmonic(x * a, b) - x * ab);
      sink.add_exact("front_x2:" + k, sym_harmonic(a, x * b) - x * ab);
      sink.add_exact("front_y:" + k, sym_harmonic(y * a, y * b) -
                                         (y * sym_harmonic(a, y * b) + y * sym_harmonic(y * a, b) + yx * ab));
      sink.add_exact("back_x1:" + k, sym_harmonic(a * x, b) - ab * x);
      sink.add_exact("back_x2:" + k, sym_harmonic(a, b * x) - ab * x);
      sink.add_exact("back_yy:" + k, sym_harmonic(a * y, b * y) -
                                         (sym_harmonic(a, b * y) * y + sym_harmonic(a * y, b) * y + ab * xy));
    }
  }
  return sink.finish();
}

/// w = sum_{a,b} reg(D_{a,b}(w)) sh x^a sh y^b, and reg is the identity on h^0.
inline CheckReport check_reg_reconstruction(std::size_t max_len = 8) {
  ResidualSink sink("reg-reconstruction");
  sink.param("max_length", static_cast<long>(max_len));
  ShuffleRegularizer reg;
  for (const Word& w : words_up_to(0, max_len)) {
    NcPoly rebuilt;
    const auto n = static_cast<int>(w.size());
    for (int a = 0; a <= n; ++a) {
      for (int b = 0; a + b <= n; ++b) {
        const NcPoly d = D_ab(w, a, b);
        if (d.is_zero()) continue;
        rebuilt += shuffle(reg(d), shuffle(Word::power(Letter::x, static_cast<std::size_t>(a)),
                                           Word::power(Letter::y, static_cast<std::size_t>(b))));
      }
    }
    sink.add_exact(w.to_string(), rebuilt - NcPoly(w));
    const NcPoly r = reg.of(w);
    if (!r.in_h0()) sink.add_exact("in_h0:" + w.to_string(), Rational(1));
    if (NcPoly(w).in_h0()) sink.add_exact("identity_on_h0:" + w.to_string(), r - NcPoly(w));
  }
  return sink.finish();
}

/// f_n(w) = (-1)^{n+1} phi(y^n z ~* phi(w)) for w in h'.
inline CheckReport check_fn_harmonictilde(std::size_t max_len = 5, int max_n = 4) {
  ResidualSink sink("fn-harmonictilde");
  sink.param("max_length", static_cast<long>(max_len)).param("max_n", max_n);
  for (int n = 1; n <= max_n; ++n) {
    const NcPoly ynz = NcPoly(Word::power(Letter::y, static_cast<std::size_t>(n))) * NcPoly::z();
    const Rational sign(n % 2 ? 1 : -1);
    for (const Word& w : detail::nonempty_words(max_len)) {
      const NcPoly lhs = f_n(n, NcPoly(w));
      const NcPoly rhs = phi(sym_harmonic(ynz, phi(NcPoly(w)))) * sign;
      sink.add_exact("n=" + std::to_string(n) + ":" + w.to_string(), lhs - rhs);
    }
  }
  return sink.finish();
}

/// f_n(xw) = x f_n(w) + y f_{n-1}(xw) and f_n(yw) = y f_n(w) - y f_{n-1}(xw).
inline CheckReport check_fn_recur(std::size_t max_len = 5, int max_n = 4) {
  ResidualSink sink("fn-recur");
  sink.param("max_length", static_cast<long>(max_len)).param("max_n", max_n);
  const NcPoly x = NcPoly::x(), y = NcPoly::y();
  for (int n = -1; n <= max_n; ++n) {
    for (const Word& w : words_up_to(0, max_len - 1)) {
      const NcPoly p(w);
      const std::string k = "n=" + std::to_string(n) + ":" + w.to_string();
      sink.add_exact("x:" + k, f_n(n, x * p) - (x * f_n(n, p) + y * f_n(n - 1, x * p)));
      sink.add_exact("y:" + k, f_n(n, y * p) - (y * f_n(n, p) - y * f_n(n - 1, x * p)));
    }
  }
  return sink.finish();
}

/// sum_{j=0}^n f_j(y x^{n-j} w) = y f_n(w).
inline CheckReport check_fj_sum(std::size_t max_len = 4, int max_n = 4) {
  ResidualSink sink("fj-sum");
  sink.param("max_length", static_cast<long>(max_len)).param("max_n", max_n);
  for (int n = 0; n <= max_n; ++n) {
    for (const Word& w : words_up_to(0, max_len)) {
      NcPoly lhs;
      for (int j = 0; j <= n; ++j)
        lhs += f_n(j, NcPoly(Word::letter(Letter::y) + Word::power(Letter::x, static_cast<std::size_t>(n - j)) + w));
      sink.add_exact("n=" + std::to_string(n) + ":" + w.to_string(), lhs - NcPoly::y() * f_n(n, NcPoly(w)));
    }
  }
  return sink.finish();
}

/// Both sides of sigma-bar_m(w) = sum_j f_j(sigma_{m-j}(w)) obey the same recurrences.
inline CheckReport check_same_recurrence(std::size_t max_len = 4, int max_m = 4) {
  ResidualSink sink("same-recurrence");
  sink.param("max_length", static_cast<long>(max_len)).param("max_m", max_m);
  const NcPoly x = NcPoly::x(), y = NcPoly::y();
  auto fsum = [](const NcPoly& w, int m) {
    NcPoly s;
    for (int j = 0; j <= m; ++j) s += f_n(j, sigma_m(w, m - j));
    return s;
  };
  for (int m = 0; m <= max_m; ++m) {
    for (const Word& w : words_up_to(0, max_len - 1)) {
      const NcPoly p(w);
      const std::string k = "m=" + std::to_string(m) + ":" + w.to_string();
      sink.add_exact("sbar-x:" + k, sigma_bar_m(x * p, m) - (y * sigma_bar_m(x * p, m - 1) + x * sigma_bar_m(p, m)));
      sink.add_exact("sbar-y:" + k, sigma_bar_m(y * p, m) - y * sigma_bar_m(p, m));
      const NcPoly prev = m >= 1 ? fsum(x * p, m - 1) : NcPoly();
      sink.add_exact("fsum-x:" + k, fsum(x * p, m) - (y * prev + x * fsum(p, m)));
      sink.add_exact("fsum-y:" + k, fsum(y * p, m) - y * fsum(p, m));
    }
  }
  return sink.finish();
}

/// sigma-bar_m(w) = sum_{j=0}^m f_j(sigma_{m-j}(w)).
inline CheckReport check_sigmabar_fj_sigma(std::size_t max_len = 4, int max_m = 4) {
  ResidualSink sink("sigmabar-fj-sigma");
  sink.param("max_length", static_cast<long>(max_len)).param("max_m", max_m);
  for (int m = 0; m <= max_m; ++m) {
    for (const Word& w : words_up_to(0, max_len)) {
      NcPoly rhs;
      for (int j = 0; j <= m; ++j) rhs += f_n(j, sigma_m(NcPoly(w), m - j));
      sink.add_exact("m=" + std::to_string(m) + ":" + w.to_string(), sigma_bar_m(NcPoly(w), m) - rhs);
    }
  }
  return sink.finish();
}

/// y^n <> w = (-1)^n phi(y^n * phi(w)) on h^1.
inline CheckReport check_diamond_consistency(std::size_t max_len = 4, int max_n = 4) {
  ResidualSink sink("diamond-consistency");
  sink.param("max_length", static_cast<long>(max_len)).param("max_n", max_n);
  for (int n = 0; n <= max_n; ++n) {
    const NcPoly yn(Word::power(Letter::y, static_cast<std::size_t>(n)));
    const Rational sign(n % 2 ? -1 : 1);
    for (const Word& w : detail::h1_words(max_len, true))
      sink.add_exact("n=" + std::to_string(n) + ":" + w.to_string(),
                     diamond_ypow(n, NcPoly(w)) - phi(harmonic(yn, phi(NcPoly(w)))) * sign);
  }
  return sink.finish();
}

/// sigma-bar(w) = sigma(w) + phi(yT/(1+yT) z ~* phi(sigma(w))) as T-series.
inline CheckReport check_tau_o_tau(const std::vector<NcPoly>& words, int t_order = 4) {
  ResidualSink sink("tau-o-tau");
  sink.param("words", static_cast<long>(words.size())).param("t_order", t_order);
  const WordSeries left_factor = concat(y_t_over_one_plus_y_t(t_order), NcPoly::z());
  for (const NcPoly& p : words) {
    const WordSeries s = sigma(p, t_order);
    const WordSeries rhs = s + phi_series(sym_harmonic_series(left_factor, phi_series(s)));
    compare_exact(sink, p.to_string() + ":", sigma_bar(p, t_order), rhs);
  }
  return sink.finish();
}

inline CheckReport check_tau_o_tau(std::size_t max_len = 4, int t_order = 4) {
  std::vector<NcPoly> words;
  for (const Word& w : detail::nonempty_words(max_len)) words.emplace_back(w);
  return check_tau_o_tau(words, t_order);
}

/// alpha_A(w1 * w2) = alpha_A(w1) * alpha_A(w2) on h^1.
inline CheckReport check_alpha_hom(std::size_t max_total = 5, int a_order = 3) {
  ResidualSink sink("alpha-hom");
  sink.param("max_total_length", static_cast<long>(max_total)).param("a_order", a_order);
  for (const Word& a : detail::h1_words(max_total - 1, false)) {
    for (const Word& b : detail::h1_words(max_total - a.size(), false)) {
      const WordSeries lhs = alpha_A(harmonic(NcPoly(a), NcPoly(b)), a_order);
      const WordSeries rhs = harmonic_series(alpha_A(NcPoly(a), a_order), alpha_A(NcPoly(b), a_order));
      compare_exact(sink, detail::pair_key(a, b) + ":", lhs, rhs);
    }
  }
  return sink.finish();
}

/// 1/(1-P) sh 1/(1-Q) = 1/(1-P-Q) for P, Q in {xA, yB, yT}, and the interleaving rule for P = xA.
inline CheckReport check_geometric_lemmas(int order = 4, std::size_t max_len = 4, int interleave_order = 3) {
  ResidualSink sink("geometric-lemmas");
  sink.param("order", order).param("max_length", static_cast<long>(max_len)).param("interleave_order",
                                                                                   interleave_order);
  struct Gen {
    const char* name;
    Param p;
    Letter l;
  };
  const Gen gens[] = {{"xA", Param::A, Letter::x}, {"yB", Param::B, Letter::y}, {"yT", Param::T, Letter::y}};
  const auto prof = TruncationProfile().with(Param::A, order).with(Param::B, order).with(Param::T, order);
  for (const auto& P : gens) {
    for (const auto& Q : gens) {
      const auto mp = WordSeries::monomial(NcPoly(Word::letter(P.l)), P.p, 1, prof);
      const auto mq = WordSeries::monomial(NcPoly(Word::letter(Q.l)), Q.p, 1, prof);
      const auto lhs = shuffle_series(geometric(mp), geometric(mq));
      const auto rhs = geometric(mp + mq);
      compare_exact(sink, std::string("sum:") + P.name + "," + Q.name + ":", lhs, rhs);
    }
  }
  const auto iprof = TruncationProfile().with(Param::A, interleave_order);
  const auto g = geometric_word_series(Rational(1), Param::A, NcPoly::x(), iprof);
  for (const Word& w : detail::nonempty_words(max_len)) {
    const auto lhs = shuffle_series(g, WordSeries::constant(NcPoly(w), iprof));
    for (std::size_t i = 0; i < w.size(); ++i) {
      const Word w0 = w.substr(0, i), u = w.substr(i, 1), w1 = w.substr(i + 1);
      const auto left = shuffle_series(g, WordSeries::constant(NcPoly(w0), iprof));
      const auto right = shuffle_series(g, WordSeries::constant(NcPoly(w1), iprof));
      const auto rhs = concat(left, NcPoly(u)) * right;
      compare_exact(sink, "interleave:" + w.to_string() + "@" + std::to_string(i) + ":", lhs, rhs);
    }
  }
  return sink.finish();
}

/// Harmonic inverse of 1/(1-yT) and the stuffle factorization rule.
inline CheckReport check_harmonic_series_rules(int inverse_order = 5, int fact_order = 3) {
  ResidualSink sink("harmonic-series-rules");
  sink.param("inverse_order", inverse_order).param("factorization_order", fact_order);
  {
    const auto prof = TruncationProfile().with(Param::T, inverse_order);
    const auto g = geometric_word_series(Rational(1), Param::T, NcPoly::y(), prof);
    const auto zinv = geometric_word_series(Rational(-1), Param::T, NcPoly::z(), prof);
    const auto inverse = WordSeries::constant(NcPoly::one(), prof) -
                         concat(NcPoly::y(), WordSeries::monomial(NcPoly::one(), Param::T, 1, prof) * zinv);
    compare_exact(sink, "inverse:", harmonic_series(g, inverse), WordSeries::constant(NcPoly::one(), prof));
  }
  const auto prof = TruncationProfile().with(Param::T, fact_order);
  const auto g = geometric_word_series(Rational(1), Param::T, NcPoly::y(), prof);
  const auto one_xt = WordSeries::constant(NcPoly::one(), prof) + WordSeries::monomial(NcPoly::x(), Param::T, 1, prof);
  for (const Word& w1 : detail::h1_words(2, true)) {
    for (int k = 1; k <= 2; ++k) {
      const Word w2 = Word::z(k);
      for (const Word& w3 : detail::h1_words(2, true)) {
        const auto lhs = harmonic_series(g, WordSeries::constant(NcPoly(w1 + w2 + w3), prof));
        const auto a = harmonic_series(g, WordSeries::constant(NcPoly(w1), prof));
        const auto c = harmonic_series(g, WordSeries::constant(NcPoly(w3), prof));
        const auto rhs = concat(a, NcPoly(w2)) * one_xt * c;
        compare_exact(sink, "factor:" + w1.to_string() + "|" + w2.to_string() + "|" + w3.to_string() + ":", lhs, rhs);
      }
    }
  }
  return sink.finish();
}

/// rho(X) = X + sum zeta(n+1) T^n; G G_swap = 1; G = 1 on A = B; no gamma quotient keeps
/// the Euler-Mascheroni symbol.
inline CheckReport check_gamma_exact(int rho_order = 8, int order = 4) {
  ResidualSink sink("gamma-exact");
  sink.param("rho_t_order", rho_order).param("order", order);
  {
    const auto input = MultiSeries<XYPoly<ZetaPoly>>::constant(XYPoly<ZetaPoly>::monomial(1, 0, ZetaPoly(Rational(1))),
                                                             TruncationProfile().with(Param::T, rho_order));
    const auto out = rho_apply(input, rho_order, [](const ZetaPoly& c) { return c; });
    for (int n = 0; n <= rho_order; ++n) {
      const auto c = out.coeff(exponents({{Param::T, n}}));
      XYPoly<ZetaPoly> expect;
      if (n == 0)
        expect = XYPoly<ZetaPoly>::monomial(1, 0, ZetaPoly(Rational(1)));
      else
        expect = XYPoly<ZetaPoly>(ZetaPoly::zeta(n + 1));
      const auto diff = c - expect;
      Rational worst(0);
      for (const auto& [k, z] : diff.terms())
        for (const auto& [m, q] : z.terms()) worst = std::max(worst, Rational(abs(q)));
      sink.add_exact("rho(X):T^" + std::to_string(n), worst);
    }
  }
  auto zeta_residual = [](const ZetaSeries& d) {
    Rational worst(0);
    for (const auto& [e, z] : d.terms())
      for (const auto& [m, q] : z.terms()) worst = std::max(worst, Rational(abs(q)));
    return worst;
  };
  for (int n = 1; n <= order; ++n) {
    const auto prof = TruncationProfile().with(Param::T, n).with(Param::A, n).with(Param::B, n);
    const auto g = gamma_ratio(prof);
    const auto gs = gamma_quotient(prof, {{{Param::B, Rational(1)}}, {{Param::A, Rational(1)}, {Param::T, Rational(-1)}}},
                                   {{{Param::A, Rational(1)}}, {{Param::B, Rational(1)}, {Param::T, Rational(-1)}}});
    sink.add_exact("G*Gswap:order" + std::to_string(n), zeta_residual(g * gs - ZetaSeries::constant(ZetaPoly(Rational(1)), prof)));
    // G at A = B: substitute B -> A
    ZetaSeries diag(TruncationProfile().with(Param::T, n).with(Param::A, 2 * n));
    for (const auto& [e, c] : g.terms()) {
      Exponents f = e;
      f[index_of(Param::A)] = static_cast<std::uint8_t>(e[index_of(Param::A)] + e[index_of(Param::B)]);
      f[index_of(Param::B)] = 0;
      if (f[index_of(Param::A)] <= n) diag.add_term(f, c);
    }
    sink.add_exact("G(A=B):order" + std::to_string(n),
                   zeta_residual(diag.truncated(TruncationProfile().with(Param::A, n)) -
                                 ZetaSeries::constant(ZetaPoly(Rational(1)), diag.profile()).truncated(
                                     TruncationProfile().with(Param::A, n))));
    auto gamma_terms = [](auto make) {
      try {
        long bad = 0;
        const auto s = make();
        for (const auto& [e, c] : s.terms()) bad += c.has_euler_gamma() ? 1 : 0;
        return Rational(bad);
      } catch (const DomainError&) {
        return Rational(1);
      }
    };
    const std::string k = ":order" + std::to_string(n);
    sink.add_exact("gamma-free gamma_ratio" + k, gamma_terms([&] { return gamma_ratio(prof); }));
    sink.add_exact("gamma-free beta_ratio" + k, gamma_terms([&] { return beta_ratio(prof); }));
    sink.add_exact("gamma-free beta_ratio_partner" + k, gamma_terms([&] { return beta_ratio_partner(prof); }));
    sink.add_exact("gamma-free sinpi_over_pi" + k, gamma_terms([&] {
      return sinpi_over_pi(ZetaSeries::variable(Param::U, TruncationProfile().with(Param::U, n)));
    }));
  }
  return sink.finish();
}

/// exp(log(1 + s)) = 1 + s on seeded random rational series.
inline CheckReport check_exp_log(int samples = 20, unsigned seed = 7) {
  ResidualSink sink("exp-log");
  sink.param("samples", samples).param("seed", seed);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-4, 4);
  const auto prof = TruncationProfile().with(Param::T, 3).with(Param::A, 2);
  for (int i = 0; i < samples; ++i) {
    MultiSeries<Rational> s(prof);
    for (int t = 0; t <= 3; ++t)
      for (int a = 0; a <= 2; ++a)
        if (t + a > 0) s.add_term(exponents({{Param::T, t}, {Param::A, a}}), Rational(coef(rng), 1 + (t + a) % 3));
    const auto back = log_series(exp_series(s));
    Rational worst(0);
    for (const auto& [e, c] : (back - s).terms()) worst = std::max(worst, Rational(abs(c)));
    sink.add_exact("sample" + std::to_string(i), worst);
  }
  return sink.finish();
}

}  // namespace ohno

#endif
