#ifndef OHNO_REGULARIZATION_HPP
#define OHNO_REGULARIZATION_HPP

// Regularized evaluation maps Z^sh_{X,Y}, Z^sh, Z^*, the functional H and the
// symbolic pipelines of both forms of the regularized Ohno relation.

#include <unordered_map>
#include <utility>

#include "ohno/gamma_series.hpp"
#include "ohno/maps.hpp"
#include "ohno/mzv.hpp"
#include "ohno/numeric.hpp"
#include "ohno/products.hpp"
#include "ohno/series.hpp"
#include "ohno/xy_poly.hpp"

namespace ohno {

using WordSeries = MultiSeries<NcPoly>;

// ---------------------------------------------------------------------------
// word series gadgets

/// sigma applied to a series: every coefficient c at T^t contributes sigma_m(c) T^{t+m}.
inline WordSeries sigma_series(const WordSeries& s, int t_order) {
  WordSeries r(intersect(s.profile(), TruncationProfile().with(Param::T, t_order)));
  for (const auto& [e, c] : s.terms()) {
    for (int m = 0; e[index_of(Param::T)] + m <= t_order; ++m) {
      Exponents f = e;
      f[index_of(Param::T)] = static_cast<std::uint8_t>(e[index_of(Param::T)] + m);
      r.add_term(f, sigma_m(c, m));
    }
  }
  return r;
}

inline WordSeries sigma(const NcPoly& p, int t_order) {
  return sigma_series(WordSeries::constant(p, TruncationProfile().with(Param::T, t_order)), t_order);
}

inline WordSeries tau_series(const WordSeries& s) {
  return series_linear(s, [](const NcPoly& p) { return tau(p); });
}
inline WordSeries phi_series(const WordSeries& s) {
  return series_linear(s, [](const NcPoly& p) { return phi(p); });
}

inline WordSeries sigma_bar_series(const WordSeries& s, int t_order) {
  return tau_series(sigma_series(tau_series(s), t_order));
}

inline WordSeries sigma_bar(const NcPoly& p, int t_order) {
  return sigma_bar_series(WordSeries::constant(p, TruncationProfile().with(Param::T, t_order)), t_order);
}

inline WordSeries shuffle_series(const WordSeries& a, const WordSeries& b) {
  return series_bilinear(a, b, [](const NcPoly& u, const NcPoly& v) { return shuffle(u, v); });
}
inline WordSeries harmonic_series(const WordSeries& a, const WordSeries& b) {
  return series_bilinear(a, b, [](const NcPoly& u, const NcPoly& v) { return harmonic(u, v); });
}
inline WordSeries sym_harmonic_series(const WordSeries& a, const WordSeries& b) {
  return series_bilinear(a, b, [](const NcPoly& u, const NcPoly& v) { return sym_harmonic(u, v); });
}

/// Series times a fixed word polynomial on the right / left (concatenation).
inline WordSeries concat(const WordSeries& s, const NcPoly& p) {
  return series_linear(s, [&p](const NcPoly& c) { return c * p; });
}
inline WordSeries concat(const NcPoly& p, const WordSeries& s) {
  return series_linear(s, [&p](const NcPoly& c) { return p * c; });
}

/// yT / (1 + yT) = sum_{j >= 1} (-1)^{j-1} y^j T^j
inline WordSeries y_t_over_one_plus_y_t(int t_order) {
  const auto prof = TruncationProfile().with(Param::T, t_order);
  WordSeries s(prof);
  for (int j = 1; j <= t_order; ++j)
    s.add_term(exponents({{Param::T, j}}), NcPoly(Word::power(Letter::y, static_cast<std::size_t>(j)),
                                                   Rational(j % 2 ? 1 : -1)));
  return s;
}

/// alpha_A(1) = 1, alpha_A(v w) = v (1/(1+xA) sh w), truncated at A-order a_order.
inline WordSeries alpha_A(const NcPoly& p, int a_order) {
  const auto prof = TruncationProfile().with(Param::A, a_order);
  WordSeries r(prof);
  for (const auto& [w, c] : p.terms()) {
    if (w.empty()) {
      r.add_term(Exponents{}, NcPoly(c));
      continue;
    }
    const Word lead = w.substr(0, 1), rest = w.substr(1);
    for (int k = 0; k <= a_order; ++k) {
      NcPoly t = prepend(lead, shuffle(Word::power(Letter::x, static_cast<std::size_t>(k)), rest));
      r.add_term(exponents({{Param::A, k}}), t * (c * Rational(k % 2 ? -1 : 1)));
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// regularization maps

/// Holds the memo tables of reg_sh and Z^*; one instance per thread.
class Regularizer {
 public:
  /// Z^sh_{X,Y}(w) = sum_{a,b} X^a Y^b / (a! b!) Z(reg_sh(D_{a,b}(w)))
  XYPoly<MzvComb> zsh_xy(const NcPoly& p) {
    XYPoly<MzvComb> out;
    for (const auto& [w, c] : p.terms()) {
      const auto lx = static_cast<int>(leading_x(w)), ty = static_cast<int>(trailing_y(w));
      const auto n = static_cast<int>(w.size());
      for (int a = 0; a <= lx; ++a) {
        for (int b = 0; b <= ty && a + b <= n; ++b) {
          const Word inner = w.substr(static_cast<std::size_t>(a), static_cast<std::size_t>(n - a - b));
          const NcPoly& r = reg_.of(inner);
          if (r.is_zero()) continue;
          out.add_term(a, b, MzvComb(r * (c / (factorial(a) * factorial(b)))));
        }
      }
    }
    return out;
  }

  /// Z^sh = Z^sh_{0,0} = Z o reg_sh
  MzvComb zsh(const NcPoly& p) { return MzvComb(reg_(p)); }

  /// Harmonic-regularized value with Z^*(y) = 0; defined on h^1.
  MzvComb zstar(const NcPoly& p) {
    if (!p.in_h1()) throw DomainError("zstar is defined on h^1 only");
    MzvComb out;
    for (const auto& [w, c] : p.terms()) out += zstar_word(w) * c;
    return out;
  }

  MultiSeries<XYPoly<MzvComb>> zsh_xy_series(const WordSeries& s) {
    return s.map_coefficients([this](const NcPoly& p) { return zsh_xy(p); });
  }
  MultiSeries<MzvComb> zsh_series(const WordSeries& s) {
    return s.map_coefficients([this](const NcPoly& p) { return zsh(p); });
  }
  MultiSeries<MzvComb> zstar_series(const WordSeries& s) {
    return s.map_coefficients([this](const NcPoly& p) { return zstar(p); });
  }

  ShuffleRegularizer& shuffle_regularizer() { return reg_; }

 private:
  const MzvComb& zstar_word(const Word& w) {
    if (auto it = zstar_.find(w); it != zstar_.end()) return it->second;
    MzvComb v;
    if (w.empty() || w.back() == Letter::x) {
      v = MzvComb(NcPoly(w));
    } else {
      // w = u z_1^r with u not ending in y: u z_1^{r-1} * y = r w + C, and Z^*(y) = 0
      const auto r = static_cast<int>(trailing_y(w));
      const Word shorter = w.substr(0, w.size() - 1);
      NcPoly rest = harmonic(NcPoly(shorter), NcPoly::y());
      rest -= NcPoly(w, Rational(r));
      for (const auto& [u, c] : rest.terms()) v -= zstar_word(u) * (c / r);
    }
    return zstar_.emplace(w, std::move(v)).first->second;
  }

  ShuffleRegularizer reg_;
  std::unordered_map<Word, MzvComb, WordHash> zstar_;
};

inline XYPoly<MzvComb> zsh_xy(const NcPoly& p) { return Regularizer().zsh_xy(p); }
inline MzvComb zsh(const NcPoly& p) { return Regularizer().zsh(p); }
inline MzvComb zstar(const NcPoly& p) { return Regularizer().zstar(p); }

// ---------------------------------------------------------------------------
// H, Ohno sums, Kawashima function

/// 1/(1-xA) w 1/(1-xB) for a word series w, under the given profile.
inline WordSeries h_argument(const WordSeries& w, const TruncationProfile& profile) {
  const auto left = geometric_word_series(Rational(1), Param::A, NcPoly::x(), profile);
  const auto right = geometric_word_series(Rational(1), Param::B, NcPoly::x(), profile);
  return left * w * right;
}

/// H(w) = Z^sh o phi(1/(1-xA) w 1/(1-xB))
inline MultiSeries<MzvComb> H_series(const WordSeries& w, const TruncationProfile& profile, Regularizer& reg) {
  return reg.zsh_series(phi_series(h_argument(w.truncated(profile), profile)));
}
inline MultiSeries<MzvComb> H_series(const NcPoly& w, const TruncationProfile& profile) {
  Regularizer reg;
  return H_series(WordSeries::constant(w, profile), profile, reg);
}

/// sum_{e_1+...+e_r = m} z(k_1+e_1, ..., k_r+e_r)
inline MzvComb ohno_sum(const MzvIndex& idx, int m) { return MzvComb(sigma_m(idx.word(), m)); }

/// (Ohno sum of idx, Ohno sum of the dual index) at height m.
inline std::pair<MzvComb, MzvComb> ohno_check_pair(const MzvIndex& idx, int m) {
  return {ohno_sum(idx, m), MzvComb(sigma_m(tau(idx.word()), m))};
}

/// K(w; T) = sum_{m >= 1} Z(y^m (*) phi(w)) T^m for w in y h.
inline MultiSeries<MzvComb> kawashima_K(const NcPoly& w, int t_order) {
  if (t_order < 1) throw DomainError("kawashima_K: t_order must be at least 1");
  for (const auto& [u, c] : w.terms())
    if (u.empty() || u.front() != Letter::y) throw DomainError("kawashima_K: argument must lie in y h");
  const NcPoly pw = phi(w);
  MultiSeries<MzvComb> k(TruncationProfile().with(Param::T, t_order));
  for (int m = 1; m <= t_order; ++m)
    k.add_term(exponents({{Param::T, m}}),
               MzvComb(circledast(NcPoly(Word::power(Letter::y, static_cast<std::size_t>(m))), pw)));
  return k;
}

// ---------------------------------------------------------------------------
// main theorem pipelines

using NumericXYSeries = MultiSeries<XYPoly<ArbFloat>>;
using NumericSeries = MultiSeries<ArbFloat>;

/// Left: Z^sh_{Y,X} o sigma o tau(w). Right: rho o Z^sh_{X,Y} o sigma(w). Both evaluated numerically.
inline std::pair<NumericXYSeries, NumericXYSeries> main_theorem_sides(const NcPoly& w, int t_order, Evaluator& ev,
                                                                       Regularizer& reg) {
  auto left = swap_xy(ev.series(reg.zsh_xy_series(sigma(tau(w), t_order))));
  auto right_inner = ev.series(reg.zsh_xy_series(sigma(w, t_order)));
  auto right = rho_apply(right_inner, t_order, [&ev](const ZetaPoly& c) { return ev(c); });
  return {std::move(left), std::move(right)};
}

/// Same left side through the sigma-bar route: Z^sh_{X,Y} o sigma-bar(w), which equals
/// Z^sh_{Y,X} o sigma o tau(w).
inline NumericXYSeries main_theorem_left_via_sigma_bar(const NcPoly& w, int t_order, Evaluator& ev, Regularizer& reg) {
  return ev.series(reg.zsh_xy_series(sigma_bar(w, t_order)));
}

/// 1/(1-xA) w 1/(1-yB)
inline WordSeries equiv_argument(const NcPoly& w, const TruncationProfile& profile) {
  const auto left = geometric_word_series(Rational(1), Param::A, NcPoly::x(), profile);
  const auto right = geometric_word_series(Rational(1), Param::B, NcPoly::y(), profile);
  return left * WordSeries::constant(w, profile) * right;
}

/// Left: Z^sh o sigma o tau(u). Right: Z^sh o sigma(u) times the gamma ratio, u = 1/(1-xA) w 1/(1-yB).
inline std::pair<NumericSeries, NumericSeries> main_theorem_equiv_sides(const NcPoly& w,
                                                                        const TruncationProfile& profile,
                                                                        Evaluator& ev, Regularizer& reg) {
  if (!w.in_h0()) throw DomainError("main_theorem_equiv_sides: w must lie in h^0");
  const int t = profile.bound(Param::T);
  const auto u = equiv_argument(w, profile);
  auto left = ev.series(reg.zsh_series(sigma_series(tau_series(u), t)));
  auto base = ev.series(reg.zsh_series(sigma_series(u, t)));
  auto g = ev.series(gamma_ratio(profile));
  return {std::move(left), base * g};
}

}  // namespace ohno

#endif
