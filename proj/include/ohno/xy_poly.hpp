#ifndef OHNO_XY_POLY_HPP
#define OHNO_XY_POLY_HPP

#include <map>
#include <string>
#include <utility>

#include "ohno/rational.hpp"
#include "ohno/series.hpp"

namespace ohno {

/// Polynomial in commuting X, Y with coefficients in C.
template <class C>
class XYPoly {
 public:
  using Key = std::pair<int, int>;
  using Terms = std::map<Key, C>;

  XYPoly() = default;
  explicit XYPoly(const C& c) { add_term(0, 0, c); }

  static XYPoly monomial(int a, int b, const C& c) {
    XYPoly p;
    p.add_term(a, b, c);
    return p;
  }

  const Terms& terms() const& noexcept { return terms_; }
  Terms terms() && { return std::move(terms_); }
  bool is_zero() const noexcept { return terms_.empty(); }

  C coeff(int a, int b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? ring_traits<C>::zero() : it->second;
  }

  void add_term(int a, int b, const C& c) {
    if (ring_traits<C>::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace({a, b}, c);
    if (!inserted) {
      it->second = it->second + c;
      if (ring_traits<C>::is_zero(it->second)) terms_.erase(it);
    }
  }

  int x_degree() const {
    int d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first);
    return d;
  }
  int y_degree() const {
    int d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.second);
    return d;
  }

  /// X <-> Y
  XYPoly swapped() const {
    XYPoly r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(Key{k.second, k.first}, c);
    return r;
  }

  template <class F>
  auto map_coefficients(F&& f) const -> XYPoly<std::decay_t<decltype(f(std::declval<const C&>()))>> {
    XYPoly<std::decay_t<decltype(f(std::declval<const C&>()))>> r;
    for (const auto& [k, c] : terms_) r.add_term(k.first, k.second, f(c));
    return r;
  }

  XYPoly& operator+=(const XYPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
  }
  XYPoly& operator-=(const XYPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c * Rational(-1));
    return *this;
  }
  friend XYPoly operator+(XYPoly a, const XYPoly& b) { return a += b; }
  friend XYPoly operator-(XYPoly a, const XYPoly& b) { return a -= b; }
  friend XYPoly operator*(const XYPoly& a, const Rational& q) {
    XYPoly r;
    for (const auto& [k, c] : a.terms_) r.add_term(k.first, k.second, c * q);
    return r;
  }
  friend XYPoly operator*(const XYPoly& a, const XYPoly& b) {
    XYPoly r;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
  }
  friend bool operator==(const XYPoly& a, const XYPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
      if (!out.empty()) out += " + ";
      std::string mono;
      if (k.first) mono += "X^" + std::to_string(k.first);
      if (k.second) mono += (mono.empty() ? "" : " ") + std::string("Y^") + std::to_string(k.second);
      const std::string cs = ring_traits<C>::to_string(c);
      out += mono.empty() ? cs : "(" + cs + ") * " + mono;
    }
    return out;
  }

 private:
  Terms terms_;
};

template <class C>
struct ring_traits<XYPoly<C>> {
  static XYPoly<C> zero() { return {}; }
  static XYPoly<C> one() { return XYPoly<C>(ring_traits<C>::one()); }
  static bool is_zero(const XYPoly<C>& p) { return p.is_zero(); }
  static std::string to_string(const XYPoly<C>& p) { return p.to_string(); }
};

/// Coefficientwise X <-> Y swap of a series.
template <class C>
MultiSeries<XYPoly<C>> swap_xy(const MultiSeries<XYPoly<C>>& s) {
  return s.map_coefficients([](const XYPoly<C>& p) { return p.swapped(); });
}

}  // namespace ohno

#endif
