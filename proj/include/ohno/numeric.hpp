#ifndef OHNO_NUMERIC_HPP
#define OHNO_NUMERIC_HPP

// High-precision evaluation of multiple zeta values by the Hoelder convolution
// of the iterated-integral representation, split at a point p in (0, 1).

#include <mpfr.h>

#include <cmath>
#include <unordered_map>
#include <vector>

#include "ohno/arb_float.hpp"
#include "ohno/mzv.hpp"
#include "ohno/series.hpp"
#include "ohno/word.hpp"
#include "ohno/xy_poly.hpp"
#include "ohno/zeta_poly.hpp"

namespace ohno {

namespace detail {

/// Smallest N with N*log2(1/z) - weight*log2(N) > bits.
inline long truncation_depth(long bits, int weight, double log2_inv_z) {
  long n = 8;
  while (static_cast<double>(n) * log2_inv_z - weight * std::log2(static_cast<double>(n)) <= static_cast<double>(bits))
    n += 8;
  return n;
}

/// sum_{0 < m_1 < ... < m_d <= N} z^{m_d} prod m_i^{-k_i} by a forward prefix-sum sweep.
/// z == nullptr means z = 1.
inline ArbFloat nested_sum(const std::vector<int>& ks, const Rational* z, long n_max, long bits) {
  const std::size_t d = ks.size();
  ArbFloat result(Precision{bits});
  if (d == 0) return ArbFloat(1L, Precision{bits});
  // prefix[j] = sum_{m' <= m-1} A_j(m'), A_j(m) = m^{-k_j} * prefix[j-1] (prefix[-1] = 1)
  std::vector<ArbFloat> prefix(d, ArbFloat(Precision{bits}));
  ArbFloat zpow(1L, Precision{bits}), zr(Precision{bits}), inv(Precision{bits}), a(Precision{bits}), t(Precision{bits});
  if (z) zr = ArbFloat(*z, Precision{bits});
  for (long m = 1; m <= n_max; ++m) {
    if (z) mpfr_mul(zpow.raw(), zpow.raw(), zr.raw(), MPFR_RNDN);
    // walk j downwards so prefix[j-1] still holds the sum over m' < m
    for (std::size_t jj = d; jj-- > 0;) {
      mpfr_ui_pow_ui(inv.raw(), static_cast<unsigned long>(m), static_cast<unsigned long>(ks[jj]), MPFR_RNDN);
      if (jj == 0)
        mpfr_ui_div(a.raw(), 1UL, inv.raw(), MPFR_RNDN);
      else
        mpfr_div(a.raw(), prefix[jj - 1].raw(), inv.raw(), MPFR_RNDN);
      if (jj + 1 == d) {
        if (z)
          mpfr_mul(t.raw(), a.raw(), zpow.raw(), MPFR_RNDN);
        else
          mpfr_set(t.raw(), a.raw(), MPFR_RNDN);
        mpfr_add(result.raw(), result.raw(), t.raw(), MPFR_RNDN);
      }
      mpfr_add(prefix[jj].raw(), prefix[jj].raw(), a.raw(), MPFR_RNDN);
    }
  }
  return result;
}

inline std::vector<int> y_leading_index(const Word& w) {
  if (w.empty() || w.front() != Letter::y) throw DomainError("polylog requires a word starting with y: " + w.to_string());
  return w.to_index();
}

}  // namespace detail

/// Multiple polylogarithm Li_{k_1..k_d}(z) = sum_{0<m_1<...<m_d} z^{m_d} / prod m_i^{k_i}
/// for a y-leading word; 0 < z < 1. The empty word gives 1.
inline ArbFloat polylog(const Word& w, const Rational& z, Precision prec) {
  if (w.empty()) return ArbFloat(1L, prec);
  if (z <= 0 || z >= 1) throw DomainError("polylog: argument must lie in (0, 1)");
  const auto ks = detail::y_leading_index(w);
  const double l2 = -std::log2(z.get_d());
  const long n = detail::truncation_depth(prec.bits + 4, static_cast<int>(w.size()), l2);
  return detail::nested_sum(ks, &z, n, prec.bits);
}

inline ArbFloat polylog_half(const Word& w, Precision prec) { return polylog(w, Rational(1, 2), prec); }

/// zeta(w) = sum_{w = uv} Li_u(p) Li_{swap(reverse(v))}(1 - p) for admissible w.
inline ArbFloat mzv_split(const Word& w, const Rational& p, Precision prec) {
  (void)MzvIndex::from_word(w);
  const Precision work{prec.bits + kGuardBits};
  ArbFloat sum(work);
  for (std::size_t j = 0; j <= w.size(); ++j) {
    const Word u = w.substr(0, j);
    const Word v = w.substr(j).reversed().swapped();
    sum += polylog(u, p, work) * polylog(v, Rational(1) - p, work);
  }
  ArbFloat r(prec);
  mpfr_set(r.raw(), sum.raw(), MPFR_RNDN);
  return r;
}

inline ArbFloat mzv(const MzvIndex& idx, Precision prec) { return mzv_split(idx.word(), Rational(1, 2), prec); }

inline ArbFloat zeta_int(int n, Precision prec) {
  if (n < 2) throw DomainError("zeta_int requires n >= 2");
  return mzv(MzvIndex({n}), prec);
}

/// Direct partial sum over 0 < m_1 < ... < m_d <= terms.
inline ArbFloat mzv_naive(const MzvIndex& idx, long terms, Precision prec = Precision{128}) {
  return detail::nested_sum(idx.parts(), nullptr, terms, prec.bits);
}

/// Caching evaluator of symbolic objects at a fixed target precision. Values are
/// computed with kGuardBits extra bits. Not meant to be shared between threads.
class Evaluator {
 public:
  explicit Evaluator(Precision target = Precision{128}) : target_(target), work_{target.bits + kGuardBits} {}

  Precision target() const { return target_; }
  Precision working() const { return work_; }

  ArbFloat one() const { return ArbFloat(1L, work_); }
  ArbFloat zero() const { return ArbFloat(work_); }

  const ArbFloat& polylog_half(const Word& w) {
    if (auto it = li_.find(w); it != li_.end()) return it->second;
    return li_.emplace(w, ohno::polylog_half(w, work_)).first->second;
  }

  /// Value of an admissible word.
  const ArbFloat& word_value(const Word& w) {
    if (auto it = zeta_.find(w); it != zeta_.end()) return it->second;
    (void)MzvIndex::from_word(w);
    ArbFloat sum(work_);
    for (std::size_t j = 0; j <= w.size(); ++j) {
      const Word u = w.substr(0, j);
      const Word v = w.substr(j).reversed().swapped();
      sum += polylog_half(u) * polylog_half(v);
    }
    return zeta_.emplace(w, std::move(sum)).first->second;
  }

  ArbFloat zeta(int n) {
    if (n < 2) throw DomainError("zeta requires n >= 2");
    return word_value(Word::z(n));
  }

  ArbFloat operator()(const MzvComb& m) {
    ArbFloat s(work_);
    for (const auto& [w, c] : m.poly().terms()) {
      if (w.empty())
        s += ArbFloat(c, work_);
      else
        s += word_value(w) * c;
    }
    return s;
  }

  ArbFloat operator()(const ZetaPoly& p) {
    if (p.has_euler_gamma()) throw DomainError("eval: Euler-Mascheroni symbol present");
    ArbFloat s(work_);
    for (const auto& [m, q] : p.terms()) {
      ArbFloat t(q, work_);
      for (int n = 2; n <= m.max_symbol(); ++n)
        for (int e = 0; e < m.exponent(n); ++e) t = t * zeta(n);
      s += t;
    }
    return s;
  }

  ArbFloat operator()(const Rational& q) const { return ArbFloat(q, work_); }

  template <class C>
  XYPoly<ArbFloat> operator()(const XYPoly<C>& p) {
    return p.map_coefficients([this](const C& c) { return (*this)(c); });
  }

  /// Scalar value of an XY polynomial at bound X, Y.
  template <class C>
  ArbFloat at(const XYPoly<C>& p, const ArbFloat& x, const ArbFloat& y) {
    ArbFloat s(work_);
    for (const auto& [k, c] : p.terms()) {
      ArbFloat t = (*this)(c);
      for (int i = 0; i < k.first; ++i) t = t * x;
      for (int i = 0; i < k.second; ++i) t = t * y;
      s += t;
    }
    return s;
  }

  template <class C>
  auto series(const MultiSeries<C>& s) {
    return s.map_coefficients([this](const C& c) { return (*this)(c); });
  }

 private:
  Precision target_;
  Precision work_;
  std::unordered_map<Word, ArbFloat, WordHash> li_;
  std::unordered_map<Word, ArbFloat, WordHash> zeta_;
};

}  // namespace ohno

#endif
