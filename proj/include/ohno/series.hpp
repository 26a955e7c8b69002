#ifndef OHNO_SERIES_HPP
#define OHNO_SERIES_HPP

// Truncated multivariate formal power series with pluggable coefficients.

#include <algorithm>
#include <array>
#include <initializer_list>
#include <type_traits>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "ohno/rational.hpp"
#include "ohno/word.hpp"

namespace ohno {

enum class Param : std::uint8_t { T, A, B, Alpha, Beta, Gamma, U };
inline constexpr std::size_t kParamCount = 7;
inline constexpr std::array<std::string_view, kParamCount> kParamNames = {
    "T", "A", "B", "alpha", "beta", "gamma", "u"};

inline constexpr std::size_t index_of(Param p) { return static_cast<std::size_t>(p); }
inline std::string_view name_of(Param p) { return kParamNames[index_of(p)]; }

using Exponents = std::array<std::uint8_t, kParamCount>;

inline int total_degree(const Exponents& e) {
  int d = 0;
  for (auto v : e) d += v;
  return d;
}

inline Exponents exponents(std::initializer_list<std::pair<Param, int>> list) {
  Exponents e{};
  for (auto [p, n] : list) e[index_of(p)] = static_cast<std::uint8_t>(n);
  return e;
}

/// Orders exponent tuples by total degree, then lexicographically in parameter order.
struct ExponentOrder {
  bool operator()(const Exponents& a, const Exponents& b) const {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  }
};

/// Per-parameter maximum retained exponent, plus an optional cap on total degree.
/// An unbounded parameter is carried exactly (the series is polynomial in it).
class TruncationProfile {
 public:
  static constexpr int kUnbounded = std::numeric_limits<int>::max();

  TruncationProfile() { bound_.fill(kUnbounded); }

  TruncationProfile& with(Param p, int order) {
    if (order < 0) throw DomainError("truncation order must be non-negative");
    bound_[index_of(p)] = order;
    return *this;
  }
  TruncationProfile& with_total(int order) {
    if (order < 0) throw DomainError("truncation order must be non-negative");
    total_ = order;
    return *this;
  }

  int bound(Param p) const { return bound_[index_of(p)]; }
  bool bounded(Param p) const { return bound(p) != kUnbounded; }
  int total_cap() const { return total_; }
  bool has_total_cap() const { return total_ != kUnbounded; }

  bool admits(const Exponents& e) const {
    int d = 0;
    for (std::size_t i = 0; i < kParamCount; ++i) {
      if (e[i] > bound_[i]) return false;
      d += e[i];
    }
    return d <= total_;
  }

  friend TruncationProfile intersect(const TruncationProfile& a, const TruncationProfile& b) {
    TruncationProfile r;
    for (std::size_t i = 0; i < kParamCount; ++i) r.bound_[i] = std::min(a.bound_[i], b.bound_[i]);
    r.total_ = std::min(a.total_, b.total_);
    return r;
  }

  friend bool operator==(const TruncationProfile&, const TruncationProfile&) = default;

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < kParamCount; ++i) {
      if (bound_[i] == kUnbounded) continue;
      if (!s.empty()) s += ",";
      s += std::string(kParamNames[i]) + ":" + std::to_string(bound_[i]);
    }
    if (has_total_cap()) s += (s.empty() ? "" : ",") + std::string("total:") + std::to_string(total_);
    return s.empty() ? "exact" : s;
  }

 private:
  std::array<int, kParamCount> bound_{};
  int total_ = kUnbounded;
};

/// Ring operations a series coefficient type must provide beyond + - * and
/// scaling by a rational.
template <class C>
struct ring_traits;

template <>
struct ring_traits<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& q) { return q == 0; }
  static std::string to_string(const Rational& q) { return q.get_str(); }
};

template <>
struct ring_traits<NcPoly> {
  static NcPoly zero() { return {}; }
  static NcPoly one() { return NcPoly::one(); }
  static bool is_zero(const NcPoly& p) { return p.is_zero(); }
  static std::string to_string(const NcPoly& p) { return p.to_string(); }
};

template <class C>
class MultiSeries {
 public:
  using Terms = std::map<Exponents, C, ExponentOrder>;

  explicit MultiSeries(TruncationProfile profile = {}) : profile_(std::move(profile)) {}

  static MultiSeries constant(const C& c, TruncationProfile profile = {}) {
    MultiSeries s(std::move(profile));
    s.add_term(Exponents{}, c);
    return s;
  }
  static MultiSeries monomial(const C& c, Param p, int power, TruncationProfile profile = {}) {
    MultiSeries s(std::move(profile));
    Exponents e{};
    e[index_of(p)] = static_cast<std::uint8_t>(power);
    s.add_term(e, c);
    return s;
  }
  /// c * param
  static MultiSeries variable(Param p, TruncationProfile profile = {}) {
    return monomial(ring_traits<C>::one(), p, 1, std::move(profile));
  }

  const Terms& terms() const& noexcept { return terms_; }
  Terms terms() && { return std::move(terms_); }
  const TruncationProfile& profile() const noexcept { return profile_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Adds c * (monomial e); terms outside the profile are dropped.
  void add_term(const Exponents& e, const C& c) {
    if (!profile_.admits(e) || ring_traits<C>::is_zero(c)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second = it->second + c;
      if (ring_traits<C>::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Coefficient at e; requesting a coefficient the profile does not retain is an error.
  C coeff(const Exponents& e) const {
    if (!profile_.admits(e)) throw DomainError("coefficient requested outside the truncation profile");
    auto it = terms_.find(e);
    return it == terms_.end() ? ring_traits<C>::zero() : it->second;
  }

  C constant_term() const { return coeff(Exponents{}); }

  /// Restricts to a (narrower) profile.
  MultiSeries truncated(const TruncationProfile& p) const {
    MultiSeries r(intersect(profile_, p));
    for (const auto& [e, c] : terms_) r.add_term(e, c);
    return r;
  }

  MultiSeries& operator+=(const MultiSeries& o) {
    if (!(o.profile_ == profile_)) *this = truncated(o.profile_);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiSeries& operator-=(const MultiSeries& o) {
    if (!(o.profile_ == profile_)) *this = truncated(o.profile_);
    for (const auto& [e, c] : o.terms_) add_term(e, c * Rational(-1));
    return *this;
  }
  friend MultiSeries operator+(MultiSeries a, const MultiSeries& b) { return a += b; }
  friend MultiSeries operator-(MultiSeries a, const MultiSeries& b) { return a -= b; }
  friend MultiSeries operator-(const MultiSeries& a) { return a * Rational(-1); }

  friend MultiSeries operator*(const MultiSeries& a, const Rational& q) {
    MultiSeries r(a.profile_);
    if (q == 0) return r;
    for (const auto& [e, c] : a.terms_) r.add_term(e, c * q);
    return r;
  }

  /// Truncated Cauchy product; coefficients multiply in order (left factor first).
  friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
    return multiply(a, b, [](const C& u, const C& v) -> C { return u * v; });
  }
  MultiSeries& operator*=(const MultiSeries& o) { return *this = *this * o; }

  /// Cauchy product with an arbitrary bilinear coefficient operation.
  template <class Op>
  friend MultiSeries multiply(const MultiSeries& a, const MultiSeries& b, Op&& op) {
    MultiSeries r(intersect(a.profile_, b.profile_));
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e{};
        bool overflow = false;
        for (std::size_t i = 0; i < kParamCount; ++i) {
          const int v = ea[i] + eb[i];
          if (v > 255) overflow = true;
          e[i] = static_cast<std::uint8_t>(v);
        }
        if (overflow || !r.profile_.admits(e)) continue;
        r.add_term(e, op(ca, cb));
      }
    }
    return r;
  }

  /// Left multiplication of every coefficient by a scalar of the ring.
  friend MultiSeries operator*(const C& c, const MultiSeries& a) {
    MultiSeries r(a.profile_);
    for (const auto& [e, v] : a.terms_) r.add_term(e, c * v);
    return r;
  }

  template <class F>
  auto map_coefficients(F&& f) const -> MultiSeries<std::decay_t<decltype(f(std::declval<const C&>()))>> {
    using D = std::decay_t<decltype(f(std::declval<const C&>()))>;
    MultiSeries<D> r(profile_);
    for (const auto& [e, c] : terms_) r.add_term(e, f(c));
    return r;
  }

  /// Smallest total degree among stored terms (0 for the zero series).
  int order() const { return terms_.empty() ? 0 : total_degree(terms_.begin()->first); }

  bool uses(Param p) const {
    for (const auto& [e, c] : terms_)
      if (e[index_of(p)] != 0) return true;
    return false;
  }

  friend bool operator==(const MultiSeries& a, const MultiSeries& b) {
    return a.profile_ == b.profile_ && a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      std::string cs = ring_traits<C>::to_string(c);
      const bool simple_negative = cs.size() > 1 && cs[0] == '-' && cs.find_first_of("+- ", 1) == std::string::npos;
      if (!first) {
        out += simple_negative ? " - " : " + ";
        if (simple_negative) cs.erase(0, 1);
      }
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < kParamCount; ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += " ";
        mono += std::string(kParamNames[i]) + "^" + std::to_string(e[i]);
      }
      const bool compound = cs.find_first_of("+ ") != std::string::npos ||
                            (cs.size() > 1 && cs.find('-', 1) != std::string::npos);
      if (compound && !mono.empty()) cs = "(" + cs + ")";
      out += mono.empty() ? cs : cs + " * " + mono;
    }
    return out;
  }

 private:
  Terms terms_;
  TruncationProfile profile_;
};

/// Shorthand for the truncated arithmetic entry points.
template <class C>
MultiSeries<C> ms_add(const MultiSeries<C>& a, const MultiSeries<C>& b) { return a + b; }
template <class C>
MultiSeries<C> ms_mul(const MultiSeries<C>& a, const MultiSeries<C>& b) { return a * b; }
template <class C>
MultiSeries<C> ms_scale(const MultiSeries<C>& a, const Rational& q) { return a * q; }
template <class C>
C ms_coeff(const MultiSeries<C>& a, const Exponents& e) { return a.coeff(e); }

/// Largest total degree a power of s can still reach under its profile.
/// Throws when s depends on a parameter that is neither bounded nor capped.
template <class C>
int max_reachable_degree(const MultiSeries<C>& s) {
  const auto& prof = s.profile();
  long sum = 0;
  bool unbounded = false;
  for (std::size_t i = 0; i < kParamCount; ++i) {
    const auto p = static_cast<Param>(i);
    if (!s.uses(p)) continue;
    if (prof.bounded(p))
      sum += prof.bound(p);
    else
      unbounded = true;
  }
  if (prof.has_total_cap()) return std::min<long>(prof.total_cap(), unbounded ? prof.total_cap() : sum);
  if (unbounded) throw DomainError("series depends on an untruncated parameter; powers do not terminate");
  return static_cast<int>(sum);
}

template <class C>
void require_zero_constant(const MultiSeries<C>& s, const char* what) {
  if (!ring_traits<C>::is_zero(s.coeff(Exponents{})))
    throw DomainError(std::string(what) + ": argument must have zero constant term");
}

/// exp(s) for s with zero constant term.
template <class C>
MultiSeries<C> exp_series(const MultiSeries<C>& s) {
  require_zero_constant(s, "exp_series");
  const int n = max_reachable_degree(s);
  MultiSeries<C> result = MultiSeries<C>::constant(ring_traits<C>::one(), s.profile());
  MultiSeries<C> power = result;
  for (int k = 1; k <= n; ++k) {
    power = power * s * Rational(1, k);
    if (power.is_zero()) break;
    result += power;
  }
  return result;
}

/// log(s) for s with constant term 1.
template <class C>
MultiSeries<C> log_series(const MultiSeries<C>& s) {
  MultiSeries<C> u = s - MultiSeries<C>::constant(ring_traits<C>::one(), s.profile());
  if (!ring_traits<C>::is_zero(u.coeff(Exponents{})))
    throw DomainError("log_series: argument must have constant term 1");
  const int n = max_reachable_degree(u);
  MultiSeries<C> result(s.profile());
  MultiSeries<C> power = MultiSeries<C>::constant(ring_traits<C>::one(), s.profile());
  for (int k = 1; k <= n; ++k) {
    power = power * u;
    if (power.is_zero()) break;
    result += power * Rational((k % 2) ? 1 : -1, k);
  }
  return result;
}

/// Sum_{k>=0} P^k for P with zero constant term.
template <class C>
MultiSeries<C> geometric(const MultiSeries<C>& p) {
  require_zero_constant(p, "geometric");
  const int n = max_reachable_degree(p);
  MultiSeries<C> result = MultiSeries<C>::constant(ring_traits<C>::one(), p.profile());
  MultiSeries<C> power = result;
  for (int k = 1; k <= n; ++k) {
    power = power * p;
    if (power.is_zero()) break;
    result += power;
  }
  return result;
}

/// Composition u(arg) of a series u in the parameter U with arg (zero constant term).
template <class C>
MultiSeries<C> substitute(const MultiSeries<C>& u, const MultiSeries<C>& arg) {
  require_zero_constant(arg, "substitute");
  for (std::size_t i = 0; i < kParamCount; ++i)
    if (static_cast<Param>(i) != Param::U && u.uses(static_cast<Param>(i)))
      throw DomainError("substitute: outer series must be univariate in U");
  const int n = max_reachable_degree(arg);
  if (u.profile().bounded(Param::U) && u.profile().bound(Param::U) < n && !arg.is_zero())
    throw DomainError("substitute: outer series truncated below the order the argument requires");
  MultiSeries<C> result(arg.profile());
  MultiSeries<C> power = MultiSeries<C>::constant(ring_traits<C>::one(), arg.profile());
  for (int k = 0; k <= n; ++k) {
    if (k > 0) power = power * arg;
    if (power.is_zero()) break;
    Exponents e{};
    e[index_of(Param::U)] = static_cast<std::uint8_t>(k);
    if (!u.profile().admits(e)) break;
    auto it = u.terms().find(e);
    if (it == u.terms().end()) continue;
    result += it->second * power;
  }
  return result;
}

/// Drops all terms of total degree above d.
template <class C>
MultiSeries<C> truncate_total(const MultiSeries<C>& s, int d) {
  return s.truncated(TruncationProfile().with_total(d));
}

/// Applies a bilinear word-level product to two NcPoly series coefficientwise.
template <class Op>
MultiSeries<NcPoly> series_bilinear(const MultiSeries<NcPoly>& a, const MultiSeries<NcPoly>& b, Op&& op) {
  return multiply(a, b, std::forward<Op>(op));
}

/// Applies a linear map to every coefficient of an NcPoly series.
template <class F>
MultiSeries<NcPoly> series_linear(const MultiSeries<NcPoly>& s, F&& f) {
  return s.map_coefficients(std::forward<F>(f));
}

/// (1 - coeff * param * w)^{-1}, truncated by the profile.
inline MultiSeries<NcPoly> geometric_word_series(const Rational& coeff, Param param, const NcPoly& w,
                                                 const TruncationProfile& profile) {
  if (!profile.bounded(param) && !profile.has_total_cap())
    throw DomainError("geometric_word_series: profile must bound the parameter");
  return geometric(MultiSeries<NcPoly>::monomial(w * coeff, param, 1, profile));
}

/// Lifts a rational series to an NcPoly series (q -> q * 1).
inline MultiSeries<NcPoly> to_word_series(const MultiSeries<Rational>& s) {
  return s.map_coefficients([](const Rational& q) { return NcPoly(q); });
}

}  // namespace ohno

#endif
