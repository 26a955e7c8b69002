#ifndef OHNO_PRODUCTS_HPP
#define OHNO_PRODUCTS_HPP

// Bilinear products on Q<x,y>: shuffle, harmonic, symmetric harmonic, the
// circled-asterisk product and the y^n-diamond product.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ohno/word.hpp"

namespace ohno {

inline NcPoly prepend(const Word& w, const NcPoly& p) {
  NcPoly r;
  for (const auto& [u, c] : p.terms()) r.add_term(w + u, c);
  return r;
}

inline NcPoly append(const NcPoly& p, const Word& w) {
  NcPoly r;
  for (const auto& [u, c] : p.terms()) r.add_term(u + w, c);
  return r;
}

template <class WordProduct>
NcPoly extend_bilinear(const NcPoly& p, const NcPoly& q, WordProduct&& op) {
  NcPoly r;
  for (const auto& [u, c] : p.terms())
    for (const auto& [v, d] : q.terms()) r += op(u, v) * (c * d);
  return r;
}

// ---------------------------------------------------------------------------
// shuffle

inline NcPoly shuffle(const Word& a, const Word& b) {
  const std::size_t n = a.size(), m = b.size();
  // table[i][j] = a[i:] sh b[j:], filled from the back
  std::vector<std::vector<NcPoly>> table(n + 1, std::vector<NcPoly>(m + 1));
  for (std::size_t j = 0; j <= m; ++j) table[n][j] = NcPoly(b.substr(j));
  for (std::size_t i = 0; i <= n; ++i) table[i][m] = NcPoly(a.substr(i));
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = m; j-- > 0;) {
      table[i][j] = prepend(Word::letter(a[i]), table[i + 1][j]);
      table[i][j] += prepend(Word::letter(b[j]), table[i][j + 1]);
    }
  }
  return table[0][0];
}

inline NcPoly shuffle(const NcPoly& p, const NcPoly& q) {
  return extend_bilinear(p, q, [](const Word& u, const Word& v) { return shuffle(u, v); });
}

// ---------------------------------------------------------------------------
// harmonic product on h^1

/// Splits a word of h^1 into its letters z_k = y x^{k-1}.
inline std::vector<int> z_blocks(const Word& w) {
  if (!w.empty() && w.front() != Letter::y) throw DomainError("word outside h^1: " + w.to_string());
  return w.to_index();
}

inline NcPoly harmonic(const Word& a, const Word& b) {
  const std::vector<int> ka = z_blocks(a), kb = z_blocks(b);
  const std::size_t n = ka.size(), m = kb.size();
  auto tail = [](const std::vector<int>& ks, std::size_t from) {
    return Word::from_index(std::vector<int>(ks.begin() + static_cast<long>(from), ks.end()));
  };
  std::vector<std::vector<NcPoly>> table(n + 1, std::vector<NcPoly>(m + 1));
  for (std::size_t j = 0; j <= m; ++j) table[n][j] = NcPoly(tail(kb, j));
  for (std::size_t i = 0; i <= n; ++i) table[i][m] = NcPoly(tail(ka, i));
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = m; j-- > 0;) {
      NcPoly cell = prepend(Word::z(ka[i]), table[i + 1][j]);
      cell += prepend(Word::z(kb[j]), table[i][j + 1]);
      cell += prepend(Word::z(ka[i] + kb[j]), table[i + 1][j + 1]);
      table[i][j] = std::move(cell);
    }
  }
  return table[0][0];
}

/// The harmonic (stuffle) product, defined on h^1 only.
inline NcPoly harmonic(const NcPoly& p, const NcPoly& q) {
  if (!p.in_h1() || !q.in_h1()) throw DomainError("harmonic product is defined on h^1 only");
  return extend_bilinear(p, q, [](const Word& u, const Word& v) { return harmonic(u, v); });
}

// ---------------------------------------------------------------------------
// symmetric harmonic product on h'
//
// Internally words are read in the basis e0 = x, e1 = -y: the letter x stands
// for e0 and y for e1, and a letter word w equals (-1)^{#y(w)} times its e-word.

namespace detail {

inline char e_product(char a, char b) { return (a == 'y' && b == 'y') ? 'y' : 'x'; }

inline Rational e_sign(const Word& w) { return (w.count(Letter::y) % 2) ? Rational(-1) : Rational(1); }

inline NcPoly e_to_letters(const NcPoly& e_poly) {
  NcPoly r;
  for (const auto& [w, c] : e_poly.terms()) r.add_term(w, c * e_sign(w));
  return r;
}

inline NcPoly sym_harmonic_e(const Word& a, const Word& b) {
  const std::size_t n = a.size(), m = b.size();
  const std::string& as = a.str();
  const std::string& bs = b.str();
  // table[i][j] = a[i:] ~* b[j:] for nonempty suffixes
  std::vector<std::vector<NcPoly>> table(n, std::vector<NcPoly>(m));
  auto single = [](char c, const std::string& s, std::size_t from) {
    std::string out;
    for (std::size_t k = from; k < s.size(); ++k) out.push_back(e_product(c, s[k]));
    return NcPoly(Word::from_letters(std::move(out)));
  };
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = m; j-- > 0;) {
      if (i + 1 == n) {
        table[i][j] = single(as[i], bs, j);
      } else if (j + 1 == m) {
        table[i][j] = single(bs[j], as, i);
      } else {
        Word lead = Word::from_letters(std::string(1, e_product(as[i], bs[j])));
        NcPoly cell = prepend(lead, table[i + 1][j]);
        cell += prepend(lead, table[i][j + 1]);
        cell -= prepend(lead + Word::letter(Letter::x), table[i + 1][j + 1]);
        table[i][j] = std::move(cell);
      }
    }
  }
  return table[0][0];
}

inline NcPoly sym_harmonic_paths_e(const Word& a, const Word& b) {
  // Lattice points in doubled coordinates: (p, q) integral when both even,
  // a half point when both odd.
  const int pm = 2 * (static_cast<int>(a.size()) - 1);
  const int qm = 2 * (static_cast<int>(b.size()) - 1);
  const std::string& as = a.str();
  const std::string& bs = b.str();
  std::map<std::pair<int, int>, NcPoly> memo;
  auto suffix_sum = [&](auto&& self, int p, int q) -> NcPoly {
    if (auto it = memo.find({p, q}); it != memo.end()) return it->second;
    const bool half = (p % 2) != 0;
    const char letter = half ? 'x' : e_product(as[static_cast<std::size_t>(p / 2)],
                                               bs[static_cast<std::size_t>(q / 2)]);
    Word lead = Word::from_letters(std::string(1, letter));
    NcPoly rest;
    if (p == pm && q == qm) {
      rest = NcPoly::one();
    } else {
      static constexpr std::pair<int, int> kSteps[] = {{2, 0}, {0, 2}, {1, 1}};
      for (auto [dp, dq] : kSteps) {
        if (half && dp != 1) continue;  // two consecutive half points are forbidden
        const int np = p + dp, nq = q + dq;
        if (np > pm || nq > qm) continue;
        rest += self(self, np, nq);
      }
    }
    NcPoly out = prepend(lead, rest);
    if (half) out *= Rational(-1);
    memo.emplace(std::make_pair(p, q), out);
    return out;
  };
  return suffix_sum(suffix_sum, 0, 0);
}

}  // namespace detail

inline NcPoly sym_harmonic(const Word& a, const Word& b) {
  if (a.empty() || b.empty()) throw DomainError("symmetric harmonic product is defined on h' only");
  return detail::e_to_letters(detail::sym_harmonic_e(a, b)) * (detail::e_sign(a) * detail::e_sign(b));
}

/// Symmetric harmonic product by its recursive definition; both factors must lie in h'.
inline NcPoly sym_harmonic(const NcPoly& p, const NcPoly& q) {
  if (!p.in_hprime() || !q.in_hprime())
    throw DomainError("symmetric harmonic product is defined on h' only");
  return extend_bilinear(p, q, [](const Word& u, const Word& v) { return sym_harmonic(u, v); });
}

inline NcPoly sym_harmonic_paths(const Word& a, const Word& b) {
  if (a.empty() || b.empty()) throw DomainError("symmetric harmonic product is defined on h' only");
  return detail::e_to_letters(detail::sym_harmonic_paths_e(a, b)) *
         (detail::e_sign(a) * detail::e_sign(b));
}

/// Symmetric harmonic product by signed lattice-path enumeration.
inline NcPoly sym_harmonic_paths(const NcPoly& p, const NcPoly& q) {
  if (!p.in_hprime() || !q.in_hprime())
    throw DomainError("symmetric harmonic product is defined on h' only");
  return extend_bilinear(p, q, [](const Word& u, const Word& v) { return sym_harmonic_paths(u, v); });
}

// ---------------------------------------------------------------------------
// circled-asterisk product: w1 z_m (*) w2 z_n = (w1 * w2) z_{m+n}

/// Splits w = prefix * z_k at its last y; the prefix must lie in h^1.
inline std::pair<Word, int> split_last_z(const Word& w) {
  const auto pos = w.str().find_last_of('y');
  if (pos == std::string::npos) throw DomainError("word has no letter y: " + w.to_string());
  Word prefix = w.substr(0, pos);
  if (!prefix.empty() && prefix.front() != Letter::y)
    throw DomainError("prefix outside h^1 in z-decomposition of " + w.to_string());
  return {prefix, static_cast<int>(w.size() - pos)};
}

inline NcPoly circledast(const Word& a, const Word& b) {
  auto [pa, ka] = split_last_z(a);
  auto [pb, kb] = split_last_z(b);
  return append(harmonic(pa, pb), Word::z(ka + kb));
}

inline NcPoly circledast(const NcPoly& p, const NcPoly& q) {
  return extend_bilinear(p, q, [](const Word& u, const Word& v) { return circledast(u, v); });
}

// ---------------------------------------------------------------------------
// y^n diamond w

inline NcPoly diamond_ypow(int n, const Word& w) {
  if (n < 0) throw DomainError("diamond_ypow requires n >= 0");
  std::map<std::pair<int, std::string>, NcPoly> memo;
  const Word x = Word::letter(Letter::x), y = Word::letter(Letter::y);
  auto go = [&](auto&& self, int k, const Word& v) -> NcPoly {
    if (k == 0) return NcPoly(v);
    if (v.empty()) return NcPoly(Word::power(Letter::y, static_cast<std::size_t>(k)));
    auto key = std::make_pair(k, v.str());
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const Word rest = v.substr(1);
    NcPoly out;
    if (v.front() == Letter::y) {
      // y w1 <> y w2 = y(y w1 <> w2) - y(w1 <> x w2)
      out = prepend(y, self(self, k, rest));
      out -= prepend(y, self(self, k - 1, x + rest));
    } else {
      // y w1 <> x w2 = x(y w1 <> w2) + y(w1 <> x w2)
      out = prepend(x, self(self, k, rest));
      out += prepend(y, self(self, k - 1, v));
    }
    memo.emplace(std::move(key), out);
    return out;
  };
  return go(go, n, w);
}

inline NcPoly diamond_ypow(int n, const NcPoly& p) {
  return p.map_words([n](const Word& w) { return diamond_ypow(n, w); });
}

/// Diamond product whose first factor is a combination of pure powers y^n.
inline NcPoly diamond(const NcPoly& first, const NcPoly& second) {
  NcPoly r;
  for (const auto& [u, c] : first.terms()) {
    if (u.count(Letter::x) != 0) throw DomainError("diamond is implemented for first factor y^n only");
    r += diamond_ypow(static_cast<int>(u.size()), second) * c;
  }
  return r;
}

}  // namespace ohno

#endif
