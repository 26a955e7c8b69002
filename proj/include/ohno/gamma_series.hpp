#ifndef OHNO_GAMMA_SERIES_HPP
#define OHNO_GAMMA_SERIES_HPP

// Gamma-function objects as formal series with ZetaPoly coefficients.

#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "ohno/series.hpp"
#include "ohno/xy_poly.hpp"
#include "ohno/zeta_poly.hpp"

namespace ohno {

using ZetaSeries = MultiSeries<ZetaPoly>;

/// A linear combination of parameters, e.g. {{Param::B, 1}, {Param::T, -1}} for B - T.
using LinearForm = std::vector<std::pair<Param, Rational>>;

inline ZetaSeries linear_series(const LinearForm& form, const TruncationProfile& profile) {
  ZetaSeries s(profile);
  for (const auto& [p, q] : form) s += ZetaSeries::monomial(ZetaPoly(q), p, 1, profile);
  return s;
}

/// log Gamma(1 + u) = -gammaE u + sum_{n >= 2} (-1)^n zeta(n) u^n / n, in the parameter U.
inline ZetaSeries lg_series(int order) {
  if (order < 1) throw DomainError("lg_series: order must be at least 1");
  const auto profile = TruncationProfile().with(Param::U, order);
  ZetaSeries s(profile);
  s.add_term(exponents({{Param::U, 1}}), -ZetaPoly::euler_gamma());
  for (int n = 2; n <= order; ++n)
    s.add_term(exponents({{Param::U, n}}), ZetaPoly::zeta(n) * Rational(n % 2 ? -1 : 1, n));
  return s;
}

/// log Gamma(1 + arg) for arg with zero constant term.
inline ZetaSeries log_gamma_at(const ZetaSeries& arg) {
  if (arg.is_zero()) return ZetaSeries(arg.profile());
  return substitute(lg_series(std::max(1, max_reachable_degree(arg))), arg);
}

/// prod Gamma(1 + num_i) / prod Gamma(1 + den_j); the Euler-Mascheroni symbol must cancel.
inline ZetaSeries gamma_quotient(const TruncationProfile& profile, const std::vector<LinearForm>& num,
                                 const std::vector<LinearForm>& den) {
  ZetaSeries log_sum(profile);
  for (const auto& f : num) log_sum += log_gamma_at(linear_series(f, profile));
  for (const auto& f : den) log_sum -= log_gamma_at(linear_series(f, profile));
  require_gamma_free(log_sum, "gamma_quotient");
  return exp_series(log_sum);
}

/// Gamma(1+A) Gamma(1-T+B) / (Gamma(1+B) Gamma(1-T+A))
inline ZetaSeries gamma_ratio(const TruncationProfile& profile) {
  const Rational one(1), minus(-1);
  return gamma_quotient(profile, {{{Param::A, one}}, {{Param::B, one}, {Param::T, minus}}},
                        {{{Param::B, one}}, {{Param::A, one}, {Param::T, minus}}});
}

/// The A^k B^l slice of the gamma ratio, as a series in T.
inline ZetaSeries c_coeff(int k, int l, int t_order) {
  const auto full = gamma_ratio(TruncationProfile().with(Param::T, t_order).with(Param::A, k).with(Param::B, l));
  ZetaSeries s(TruncationProfile().with(Param::T, t_order));
  for (const auto& [e, c] : full.terms())
    if (e[index_of(Param::A)] == k && e[index_of(Param::B)] == l) s.add_term(exponents({{Param::T, e[0]}}), c);
  return s;
}

/// Gamma(1+A) Gamma(1-T+B) / Gamma(1+A+B-T)
inline ZetaSeries beta_ratio(const TruncationProfile& profile) {
  const Rational one(1), minus(-1);
  return gamma_quotient(profile, {{{Param::A, one}}, {{Param::B, one}, {Param::T, minus}}},
                        {{{Param::A, one}, {Param::B, one}, {Param::T, minus}}});
}

/// Gamma(1+B) Gamma(1-T+A) / Gamma(1+A+B-T)
inline ZetaSeries beta_ratio_partner(const TruncationProfile& profile) {
  const Rational one(1), minus(-1);
  return gamma_quotient(profile, {{{Param::B, one}}, {{Param::A, one}, {Param::T, minus}}},
                        {{{Param::A, one}, {Param::B, one}, {Param::T, minus}}});
}

/// exp(sum_{n>=2} zeta(n)/n (-L)^n) with L = arg.
inline ZetaSeries gamma1_at(const ZetaSeries& arg) {
  const int n = arg.is_zero() ? 1 : std::max(2, max_reachable_degree(arg));
  const auto profile = TruncationProfile().with(Param::U, n);
  ZetaSeries inner(profile);
  for (int k = 2; k <= n; ++k) inner.add_term(exponents({{Param::U, k}}), ZetaPoly::zeta(k) * Rational(k % 2 ? -1 : 1, k));
  return exp_series(substitute(inner, arg));
}

inline ZetaSeries gamma1(int order) {
  const auto profile = TruncationProfile().with(Param::T, order);
  return gamma1_at(ZetaSeries::variable(Param::T, profile));
}

/// u pi / sin(pi u) = 1 / (Gamma(1+u) Gamma(1-u)).
inline ZetaSeries pi_u_over_sin(const ZetaSeries& u) {
  require_zero_constant(u, "pi_u_over_sin");
  ZetaSeries log_sum = log_gamma_at(u) + log_gamma_at(-u);
  require_gamma_free(log_sum, "pi_u_over_sin");
  return exp_series(log_sum);
}

/// sin(pi u) / pi
inline ZetaSeries sinpi_over_pi(const ZetaSeries& u) {
  require_zero_constant(u, "sinpi_over_pi");
  ZetaSeries log_sum = log_gamma_at(u) + log_gamma_at(-u);
  require_gamma_free(log_sum, "sinpi_over_pi");
  return u * exp_series(-log_sum);
}

/// Exact quotient s / (a - b). Requires a total-degree cap and no tighter bound on a, b;
/// throws unless (a - b) divides every homogeneous part.
template <class C>
MultiSeries<C> divide_by_difference(const MultiSeries<C>& s, Param a, Param b) {
  const auto& prof = s.profile();
  if (!prof.has_total_cap() || prof.total_cap() == 0)
    throw DomainError("divide_by_difference: requires a positive total-degree cap");
  if (prof.bound(a) < prof.total_cap() || prof.bound(b) < prof.total_cap())
    throw DomainError("divide_by_difference: per-parameter bounds must not be below the total cap");
  const std::size_t ia = index_of(a), ib = index_of(b);
  // group by the remaining exponents and by n = e_a + e_b
  std::map<std::pair<Exponents, int>, std::map<int, C>> groups;
  for (const auto& [e, c] : s.terms()) {
    Exponents rest = e;
    rest[ia] = rest[ib] = 0;
    groups[{rest, e[ia] + e[ib]}][e[ia]] = c;
  }
  TruncationProfile out_prof = prof;
  out_prof.with_total(prof.total_cap() - 1);
  MultiSeries<C> q(out_prof);
  for (const auto& [key, coeffs] : groups) {
    const auto& [rest, n] = key;
    auto p = [&](int k) {
      auto it = coeffs.find(k);
      return it == coeffs.end() ? ring_traits<C>::zero() : it->second;
    };
    C carry = ring_traits<C>::zero();  // q_k, starting from q_n = 0
    for (int k = n; k >= 1; --k) {
      carry = p(k) + carry;  // q_{k-1}
      Exponents e = rest;
      e[ia] = static_cast<std::uint8_t>(k - 1);
      e[ib] = static_cast<std::uint8_t>(n - k);
      q.add_term(e, carry);
    }
    if (!ring_traits<C>::is_zero(p(0) + carry))
      throw DomainError("divide_by_difference: series is not divisible");
  }
  return q;
}

/// Exact quotient s / p; throws if some term has no factor p.
template <class C>
MultiSeries<C> divide_by_param(const MultiSeries<C>& s, Param p) {
  const std::size_t ip = index_of(p);
  TruncationProfile out_prof = s.profile();
  if (out_prof.bounded(p)) {
    if (out_prof.bound(p) == 0) throw DomainError("divide_by_param: parameter truncated at order 0");
    out_prof.with(p, out_prof.bound(p) - 1);
  }
  if (out_prof.has_total_cap()) {
    if (out_prof.total_cap() == 0) throw DomainError("divide_by_param: total cap 0");
    out_prof.with_total(out_prof.total_cap() - 1);
  }
  MultiSeries<C> r(out_prof);
  for (const auto& [e, c] : s.terms()) {
    if (e[ip] == 0) throw DomainError("divide_by_param: series is not divisible");
    Exponents f = e;
    --f[ip];
    r.add_term(f, c);
  }
  return r;
}

/// rho(X^k Y^l / k! l!) = sum c(k-k', l-l') X^k' Y^l' / k'! l'!, applied T-linearly to a
/// T-series of XY-polynomials. lift maps a ZetaPoly coefficient into C.
template <class C, class Lift>
MultiSeries<XYPoly<C>> rho_apply(const MultiSeries<XYPoly<C>>& p, int t_order, Lift&& lift) {
  int kmax = 0, lmax = 0;
  for (const auto& [e, poly] : p.terms()) {
    kmax = std::max(kmax, poly.x_degree());
    lmax = std::max(lmax, poly.y_degree());
  }
  const auto g = gamma_ratio(TruncationProfile().with(Param::T, t_order).with(Param::A, kmax).with(Param::B, lmax));
  std::map<std::tuple<int, int, int>, C> lifted;  // (j, i, l) -> lift of coefficient T^j A^i B^l
  for (const auto& [e, c] : g.terms())
    lifted.emplace(std::make_tuple(int(e[index_of(Param::T)]), int(e[index_of(Param::A)]), int(e[index_of(Param::B)])),
                   lift(c));

  MultiSeries<XYPoly<C>> r(intersect(p.profile(), TruncationProfile().with(Param::T, t_order)));
  for (const auto& [e, poly] : p.terms()) {
    const int m = e[index_of(Param::T)];
    std::map<int, XYPoly<C>> by_t;
    for (const auto& [key, v] : poly.terms()) {
      const auto [k, l] = key;
      for (int k2 = 0; k2 <= k; ++k2) {
        for (int l2 = 0; l2 <= l; ++l2) {
          const Rational scale = factorial(k) * factorial(l) / (factorial(k2) * factorial(l2));
          for (int j = 0; j + m <= t_order; ++j) {
            auto it = lifted.find({j, k - k2, l - l2});
            if (it == lifted.end()) continue;
            by_t[j].add_term(k2, l2, (it->second * v) * scale);
          }
        }
      }
    }
    for (auto& [j, q] : by_t) {
      Exponents f = e;
      f[index_of(Param::T)] = static_cast<std::uint8_t>(m + j);
      r.add_term(f, q);
    }
  }
  return r;
}

}  // namespace ohno

#endif
