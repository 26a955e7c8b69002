#ifndef OHNO_MAPS_HPP
#define OHNO_MAPS_HPP

// Linear maps on Q<x,y>: tau, phi, sigma_m, sigma-bar_m, D_{a,b}, f_n and the
// shuffle regularization reg.

#include <unordered_map>
#include <vector>

#include "ohno/products.hpp"
#include "ohno/word.hpp"

namespace ohno {

/// Anti-automorphism with tau(x) = y, tau(y) = x.
inline Word tau(const Word& w) { return w.reversed().swapped(); }
inline NcPoly tau(const NcPoly& p) { return p.map_words([](const Word& w) { return NcPoly(tau(w)); }); }

inline Word reverse(const Word& w) { return w.reversed(); }
inline NcPoly reverse(const NcPoly& p) {
  return p.map_words([](const Word& w) { return NcPoly(w.reversed()); });
}

/// Automorphism with phi(x) = x + y, phi(y) = -y.
inline NcPoly phi(const Word& w) {
  NcPoly out = NcPoly::one();
  const NcPoly px = NcPoly::z();
  const NcPoly py = -NcPoly::y();
  for (std::size_t i = 0; i < w.size(); ++i) out = out * (w[i] == Letter::x ? px : py);
  return out;
}
inline NcPoly phi(const NcPoly& p) { return p.map_words([](const Word& w) { return phi(w); }); }

/// Degree-m part of sigma(w), where sigma(x) = x and sigma(y) = y/(1 - xT).
inline NcPoly sigma_m(const Word& w, int m) {
  if (m < 0) return {};
  std::vector<std::size_t> ys;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] == Letter::y) ys.push_back(i);
  if (ys.empty()) return m == 0 ? NcPoly(w) : NcPoly();
  NcPoly out;
  std::vector<int> extra(ys.size(), 0);
  // enumerate compositions of m into ys.size() non-negative parts
  auto emit = [&]() {
    std::string s;
    std::size_t next = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      s.push_back(static_cast<char>(w[i]));
      if (next < ys.size() && ys[next] == i) {
        s.append(static_cast<std::size_t>(extra[next]), 'x');
        ++next;
      }
    }
    out.add_term(Word::from_letters(std::move(s)), Rational(1));
  };
  auto rec = [&](auto&& self, std::size_t slot, int left) -> void {
    if (slot + 1 == ys.size()) {
      extra[slot] = left;
      emit();
      return;
    }
    for (int e = 0; e <= left; ++e) {
      extra[slot] = e;
      self(self, slot + 1, left - e);
    }
  };
  rec(rec, 0, m);
  return out;
}
inline NcPoly sigma_m(const NcPoly& p, int m) {
  return p.map_words([m](const Word& w) { return sigma_m(w, m); });
}

/// sigma-bar_m = tau o sigma_m o tau
inline NcPoly sigma_bar_m(const NcPoly& p, int m) { return tau(sigma_m(tau(p), m)); }

/// Strips a leading x's and b trailing y's, or annihilates the word.
inline NcPoly D_ab(const Word& w, int a, int b) {
  const std::size_t n = w.size();
  const auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b);
  if (a < 0 || b < 0 || n < ua + ub) return {};
  for (std::size_t i = 0; i < ua; ++i)
    if (w[i] != Letter::x) return {};
  for (std::size_t i = n - ub; i < n; ++i)
    if (w[i] != Letter::y) return {};
  return NcPoly(w.substr(ua, n - ua - ub));
}
inline NcPoly D_ab(const NcPoly& p, int a, int b) {
  return p.map_words([a, b](const Word& w) { return D_ab(w, a, b); });
}

inline std::size_t leading_x(const Word& w) {
  std::size_t i = 0;
  while (i < w.size() && w[i] == Letter::x) ++i;
  return i;
}

inline std::size_t trailing_y(const Word& w) {
  std::size_t i = 0;
  while (i < w.size() && w[w.size() - 1 - i] == Letter::y) ++i;
  return i;
}

/// f_n(w) = y^n <> w - (y^{n-1} <> w) y, with f_n = 0 for n < 0 and f_0 = id.
inline NcPoly f_n(int n, const NcPoly& w) {
  if (n < 0) return {};
  if (n == 0) return w;
  return diamond_ypow(n, w) - append(diamond_ypow(n - 1, w), Word::letter(Letter::y));
}

/// Shuffle regularization reg: h -> h^0, memoized per word.
///
/// Inverts w = sum_{a,b} reg(D_{a,b}(w)) sh x^a sh y^b recursively; every
/// D_{a,b} with (a,b) != (0,0) shortens the word, so the recursion terminates.
/// A regularizer owns its cache and is not meant to be shared across threads.
class ShuffleRegularizer {
 public:
  NcPoly operator()(const NcPoly& p) {
    NcPoly r;
    for (const auto& [w, c] : p.terms()) r += of(w) * c;
    return r;
  }

  const NcPoly& of(const Word& w) {
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    NcPoly r(w);
    const auto lx = static_cast<int>(leading_x(w));
    const auto ty = static_cast<int>(trailing_y(w));
    const auto n = static_cast<int>(w.size());
    for (int a = 0; a <= lx; ++a) {
      for (int b = 0; b <= ty && a + b <= n; ++b) {
        if (a == 0 && b == 0) continue;
        const Word inner = w.substr(static_cast<std::size_t>(a), static_cast<std::size_t>(n - a - b));
        const NcPoly& reg_inner = of(inner);
        if (reg_inner.is_zero()) continue;
        r -= shuffle(reg_inner, xy_shuffle(a, b));
      }
    }
    return memo_.emplace(w, std::move(r)).first->second;
  }

 private:
  const NcPoly& xy_shuffle(int a, int b) {
    auto key = std::make_pair(a, b);
    if (auto it = xy_.find(key); it != xy_.end()) return it->second;
    NcPoly v = shuffle(Word::power(Letter::x, static_cast<std::size_t>(a)),
                       Word::power(Letter::y, static_cast<std::size_t>(b)));
    return xy_.emplace(key, std::move(v)).first->second;
  }

  std::unordered_map<Word, NcPoly, WordHash> memo_;
  std::map<std::pair<int, int>, NcPoly> xy_;
};

inline NcPoly reg_shuffle(const NcPoly& p) {
  ShuffleRegularizer reg;
  return reg(p);
}

}  // namespace ohno

#endif
