#ifndef OHNO_ZETA_POLY_HPP
#define OHNO_ZETA_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "ohno/rational.hpp"
#include "ohno/series.hpp"

namespace ohno {

/// Monomial in the formal symbols zeta(2), zeta(3), ... and the Euler-Mascheroni
/// symbol gammaE. exps[n] is the exponent of zeta(n) for n >= 2; exps[1] is the
/// exponent of gammaE.
class ZetaMonomial {
 public:
  ZetaMonomial() = default;

  static ZetaMonomial zeta(int n, int power = 1) {
    ZetaMonomial m;
    m.exps_.assign(static_cast<std::size_t>(n) + 1, 0);
    m.exps_[static_cast<std::size_t>(n)] = power;
    m.trim();
    return m;
  }

  int exponent(int n) const {
    return static_cast<std::size_t>(n) < exps_.size() ? exps_[static_cast<std::size_t>(n)] : 0;
  }
  int max_symbol() const { return static_cast<int>(exps_.size()) - 1; }
  bool is_one() const { return exps_.empty(); }

  int weight() const {
    int w = 0;
    for (std::size_t n = 0; n < exps_.size(); ++n) w += static_cast<int>(n) * exps_[n];
    return w;
  }

  friend ZetaMonomial operator*(const ZetaMonomial& a, const ZetaMonomial& b) {
    ZetaMonomial r;
    r.exps_.assign(std::max(a.exps_.size(), b.exps_.size()), 0);
    for (std::size_t i = 0; i < a.exps_.size(); ++i) r.exps_[i] += a.exps_[i];
    for (std::size_t i = 0; i < b.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
    r.trim();
    return r;
  }

  friend bool operator==(const ZetaMonomial&, const ZetaMonomial&) = default;
  friend bool operator<(const ZetaMonomial& a, const ZetaMonomial& b) {
    const int wa = a.weight(), wb = b.weight();
    if (wa != wb) return wa < wb;
    return a.exps_ < b.exps_;
  }

  std::string to_string() const {
    std::string s;
    if (exponent(1) != 0) s += "gammaE" + (exponent(1) > 1 ? "^" + std::to_string(exponent(1)) : "");
    for (std::size_t n = 2; n < exps_.size(); ++n) {
      if (exps_[n] == 0) continue;
      if (!s.empty()) s += " ";
      s += "z" + std::to_string(n) + (exps_[n] > 1 ? "^" + std::to_string(exps_[n]) : "");
    }
    return s;
  }

 private:
  void trim() {
    while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
  }
  std::vector<int> exps_;
};

/// Polynomial with rational coefficients in formal zeta symbols.
class ZetaPoly {
 public:
  using Terms = std::map<ZetaMonomial, Rational>;

  ZetaPoly() = default;
  explicit ZetaPoly(const Rational& q) { add_term(ZetaMonomial(), q); }
  ZetaPoly(const ZetaMonomial& m, const Rational& q) { add_term(m, q); }

  /// The symbol zeta(n), n >= 2.
  static ZetaPoly zeta(int n) {
    if (n < 2) throw DomainError("zeta symbol requires n >= 2");
    return ZetaPoly(ZetaMonomial::zeta(n), Rational(1));
  }
  /// The formal Euler-Mascheroni symbol.
  static ZetaPoly euler_gamma() { return ZetaPoly(ZetaMonomial::zeta(1), Rational(1)); }

  const Terms& terms() const& noexcept { return terms_; }
  Terms terms() && { return std::move(terms_); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Rational coefficient(const ZetaMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const ZetaMonomial& m, const Rational& q) {
    if (q == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, q);
    if (!inserted) {
      it->second += q;
      if (it->second == 0) terms_.erase(it);
    }
  }

  bool has_euler_gamma() const {
    for (const auto& [m, q] : terms_)
      if (m.exponent(1) != 0) return true;
    return false;
  }

  ZetaPoly& operator+=(const ZetaPoly& o) {
    for (const auto& [m, q] : o.terms_) add_term(m, q);
    return *this;
  }
  ZetaPoly& operator-=(const ZetaPoly& o) {
    for (const auto& [m, q] : o.terms_) add_term(m, -q);
    return *this;
  }
  friend ZetaPoly operator+(ZetaPoly a, const ZetaPoly& b) { return a += b; }
  friend ZetaPoly operator-(ZetaPoly a, const ZetaPoly& b) { return a -= b; }
  friend ZetaPoly operator-(const ZetaPoly& a) { return a * Rational(-1); }
  friend ZetaPoly operator*(const ZetaPoly& a, const Rational& q) {
    ZetaPoly r;
    if (q == 0) return r;
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, c * q);
    return r;
  }
  friend ZetaPoly operator*(const ZetaPoly& a, const ZetaPoly& b) {
    ZetaPoly r;
    for (const auto& [ma, qa] : a.terms_)
      for (const auto& [mb, qb] : b.terms_) r.add_term(ma * mb, qa * qb);
    return r;
  }

  friend bool operator==(const ZetaPoly&, const ZetaPoly&) = default;

  /// Renders as "q * z2^a z3^b + ..." with the Euler-Mascheroni symbol as gammaE.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, q] : terms_) {
      if (!first) out += (q < 0) ? " - " : " + ";
      else if (q < 0) out += "-";
      first = false;
      const Rational mag = abs(q);
      if (m.is_one())
        out += mag.get_str();
      else if (mag == 1)
        out += m.to_string();
      else
        out += mag.get_str() + " * " + m.to_string();
    }
    return out;
  }

 private:
  Terms terms_;
};

template <>
struct ring_traits<ZetaPoly> {
  static ZetaPoly zero() { return {}; }
  static ZetaPoly one() { return ZetaPoly(Rational(1)); }
  static bool is_zero(const ZetaPoly& p) { return p.is_zero(); }
  static std::string to_string(const ZetaPoly& p) { return p.to_string(); }
};

/// Throws if any coefficient of the series still carries the Euler-Mascheroni symbol.
inline void require_gamma_free(const MultiSeries<ZetaPoly>& s, const char* what) {
  for (const auto& [e, c] : s.terms())
    if (c.has_euler_gamma())
      throw DomainError(std::string(what) + ": residual Euler-Mascheroni term");
}

}  // namespace ohno

#endif
