#ifndef OHNO_MZV_HPP
#define OHNO_MZV_HPP

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ohno/maps.hpp"
#include "ohno/products.hpp"
#include "ohno/series.hpp"
#include "ohno/word.hpp"
#include "ohno/zeta_poly.hpp"

namespace ohno {

/// Admissible index (k_1, ..., k_d) with k_d >= 2.
class MzvIndex {
 public:
  explicit MzvIndex(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw DomainError("index must have depth >= 1");
    for (int k : parts_)
      if (k < 1) throw DomainError("index entries must be positive");
    if (parts_.back() < 2) throw DomainError("index is not admissible (last entry < 2)");
  }

  /// "1,2" style literal.
  static MzvIndex parse(std::string_view text) {
    std::vector<int> parts;
    std::string item;
    std::stringstream ss{std::string(text)};
    while (std::getline(ss, item, ',')) {
      if (item.empty() || item.find_first_not_of("0123456789 ") != std::string::npos)
        throw ParseError("bad index literal: " + std::string(text));
      parts.push_back(std::stoi(item));
    }
    if (parts.empty()) throw ParseError("empty index literal");
    try {
      return MzvIndex(std::move(parts));
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  }

  static MzvIndex from_word(const Word& w) {
    if (w.empty() || w.front() != Letter::y || w.back() != Letter::x)
      throw DomainError("word is not admissible: " + w.to_string());
    return MzvIndex(w.to_index());
  }

  const std::vector<int>& parts() const noexcept { return parts_; }
  int depth() const { return static_cast<int>(parts_.size()); }
  int weight() const {
    int w = 0;
    for (int k : parts_) w += k;
    return w;
  }
  Word word() const { return Word::from_index(parts_); }
  MzvIndex dual() const { return from_word(tau(word())); }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
    return s;
  }

  friend bool operator==(const MzvIndex&, const MzvIndex&) = default;
  friend bool operator<(const MzvIndex& a, const MzvIndex& b) { return a.word() < b.word(); }

 private:
  std::vector<int> parts_;
};

/// All admissible indices of the given weight, in word order.
inline std::vector<MzvIndex> admissible_indices(int weight) {
  std::vector<MzvIndex> out;
  if (weight < 2) return out;
  for (const Word& w : words_of_length(static_cast<std::size_t>(weight)))
    if (w.front() == Letter::y && w.back() == Letter::x) out.push_back(MzvIndex::from_word(w));
  return out;
}

/// Rational combination of MZV symbols plus a rational constant (the empty word).
/// The ring product is the shuffle product.
class MzvComb {
 public:
  MzvComb() = default;
  explicit MzvComb(NcPoly p) : p_(std::move(p)) {
    if (!p_.in_h0()) throw DomainError("MzvComb support must lie in h^0: " + p_.to_string());
  }
  explicit MzvComb(const Rational& q) : p_(q) {}
  explicit MzvComb(const MzvIndex& idx) : p_(idx.word()) {}

  const NcPoly& poly() const noexcept { return p_; }
  bool is_zero() const { return p_.is_zero(); }
  Rational constant() const { return p_.coefficient(Word()); }

  MzvComb& operator+=(const MzvComb& o) {
    p_ += o.p_;
    return *this;
  }
  MzvComb& operator-=(const MzvComb& o) {
    p_ -= o.p_;
    return *this;
  }
  friend MzvComb operator+(MzvComb a, const MzvComb& b) { return a += b; }
  friend MzvComb operator-(MzvComb a, const MzvComb& b) { return a -= b; }
  friend MzvComb operator-(const MzvComb& a) { return a * Rational(-1); }
  friend MzvComb operator*(const MzvComb& a, const Rational& q) { return unchecked(a.p_ * q); }
  friend MzvComb operator*(const MzvComb& a, const MzvComb& b) { return unchecked(shuffle(a.p_, b.p_)); }
  friend bool operator==(const MzvComb&, const MzvComb&) = default;

  /// "q0 + q1*z(k1,...,kd) + ..."
  std::string to_string() const {
    if (p_.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : p_.terms()) {
      if (!first) out += c < 0 ? " - " : " + ";
      else if (c < 0) out += "-";
      first = false;
      const Rational mag = abs(c);
      if (w.empty()) {
        out += mag.get_str();
        continue;
      }
      if (mag != 1) out += mag.get_str() + "*";
      out += "z(" + MzvIndex::from_word(w).to_string() + ")";
    }
    return out;
  }

 private:
  static MzvComb unchecked(NcPoly p) {
    MzvComb m;
    m.p_ = std::move(p);
    return m;
  }
  NcPoly p_;
};

template <>
struct ring_traits<MzvComb> {
  static MzvComb zero() { return {}; }
  static MzvComb one() { return MzvComb(Rational(1)); }
  static bool is_zero(const MzvComb& m) { return m.is_zero(); }
  static std::string to_string(const MzvComb& m) { return m.to_string(); }
};

/// Lifts a ZetaPoly to MZV symbols: zeta(n) -> z(n), with products realized by shuffle.
inline MzvComb zeta_to_mzv(const ZetaPoly& p) {
  if (p.has_euler_gamma()) throw DomainError("zeta_to_mzv: Euler-Mascheroni symbol present");
  MzvComb out;
  for (const auto& [m, q] : p.terms()) {
    MzvComb term(Rational(1));
    for (int n = 2; n <= m.max_symbol(); ++n)
      for (int e = 0; e < m.exponent(n); ++e) term = term * MzvComb(MzvIndex({n}));
    out += term * q;
  }
  return out;
}

}  // namespace ohno

#endif
