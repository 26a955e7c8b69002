#ifndef OHNO_WORD_HPP
#define OHNO_WORD_HPP

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ohno/rational.hpp"

namespace ohno {

enum class Letter : char { x = 'x', y = 'y' };

/// A finite word over the alphabet {x, y}. The empty word is the unit 1.
class Word {
 public:
  Word() = default;

  /// Accepts a string over {x, y}; "1" denotes the empty word.
  static Word parse(std::string_view text) {
    if (text == "1") return Word();
    if (text.empty()) throw ParseError("empty word literal (use \"1\" for the empty word)");
    Word w;
    for (char c : text) {
      if (c != 'x' && c != 'y') throw ParseError("bad letter in word literal: " + std::string(text));
      w.letters_.push_back(c);
    }
    return w;
  }

  static Word from_letters(std::string letters) {
    Word w;
    for (char c : letters) {
      if (c != 'x' && c != 'y') throw ParseError("bad letter in word: " + letters);
    }
    w.letters_ = std::move(letters);
    return w;
  }

  static Word letter(Letter l) {
    Word w;
    w.letters_.push_back(static_cast<char>(l));
    return w;
  }

  static Word power(Letter l, std::size_t n) {
    Word w;
    w.letters_.assign(n, static_cast<char>(l));
    return w;
  }

  /// y x^{k-1}
  static Word z(int k) {
    if (k < 1) throw DomainError("z_k requires k >= 1");
    Word w;
    w.letters_.push_back('y');
    w.letters_.append(static_cast<std::size_t>(k - 1), 'x');
    return w;
  }

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return static_cast<Letter>(letters_[i]); }
  Letter front() const { return static_cast<Letter>(letters_.front()); }
  Letter back() const { return static_cast<Letter>(letters_.back()); }
  const std::string& str() const noexcept { return letters_; }

  std::size_t count(Letter l) const {
    std::size_t n = 0;
    for (char c : letters_) n += (c == static_cast<char>(l));
    return n;
  }

  Word substr(std::size_t pos, std::size_t len = std::string::npos) const {
    Word w;
    w.letters_ = letters_.substr(pos, len);
    return w;
  }

  Word reversed() const {
    Word w;
    w.letters_.assign(letters_.rbegin(), letters_.rend());
    return w;
  }

  /// Exchanges x and y letter by letter.
  Word swapped() const {
    Word w = *this;
    for (char& c : w.letters_) c = (c == 'x') ? 'y' : 'x';
    return w;
  }

  void push_back(Letter l) { letters_.push_back(static_cast<char>(l)); }

  Word& operator+=(const Word& o) {
    letters_ += o.letters_;
    return *this;
  }
  friend Word operator+(Word a, const Word& b) { return a += b; }

  friend bool operator==(const Word&, const Word&) = default;

  /// Canonical order: shorter words first, then lexicographic with x < y.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a.letters_.compare(b.letters_) <=> 0;
  }

  std::string to_string() const { return empty() ? std::string("1") : letters_; }

  /// Index (k_1,...,k_d) of a word starting with y; throws otherwise.
  std::vector<int> to_index() const {
    if (empty()) return {};
    if (front() != Letter::y) throw DomainError("word does not start with y: " + letters_);
    std::vector<int> idx;
    for (char c : letters_) {
      if (c == 'y')
        idx.push_back(1);
      else
        ++idx.back();
    }
    return idx;
  }

  static Word from_index(const std::vector<int>& idx) {
    Word w;
    for (int k : idx) w += z(k);
    return w;
  }

 private:
  std::string letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept { return std::hash<std::string>{}(w.str()); }
};

/// A finite Q-linear combination of words, kept in canonical form (no zero coefficients).
class NcPoly {
 public:
  using Terms = std::map<Word, Rational>;

  NcPoly() = default;
  NcPoly(const Word& w) { terms_.emplace(w, Rational(1)); }  // NOLINT: words embed as polynomials
  NcPoly(const Word& w, const Rational& c) {
    if (c != 0) terms_.emplace(w, c);
  }
  explicit NcPoly(const Rational& c) : NcPoly(Word(), c) {}

  static NcPoly one() { return NcPoly(Word()); }
  static NcPoly x() { return NcPoly(Word::letter(Letter::x)); }
  static NcPoly y() { return NcPoly(Word::letter(Letter::y)); }
  /// z = x + y
  static NcPoly z() { return x() + y(); }
  static NcPoly e0() { return x(); }
  static NcPoly e1() { return -y(); }

  /// Parses sums such as "2*yy + yx - 1/3*xyx"; a bare rational is a multiple of 1.
  static NcPoly parse(std::string_view text);

  const Terms& terms() const& noexcept { return terms_; }
  Terms terms() && { return std::move(terms_); }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Rational coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Word& w, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  NcPoly& operator+=(const NcPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  NcPoly& operator-=(const NcPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  NcPoly& operator*=(const Rational& q) {
    if (q == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, c] : terms_) c *= q;
    return *this;
  }

  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator-(NcPoly a) { return a *= Rational(-1); }
  friend NcPoly operator*(NcPoly a, const Rational& q) { return a *= q; }
  friend NcPoly operator*(const Rational& q, NcPoly a) { return a *= q; }

  /// Concatenation product.
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b) {
    NcPoly r;
    for (const auto& [u, c] : a.terms_)
      for (const auto& [v, d] : b.terms_) r.add_term(u + v, c * d);
    return r;
  }
  NcPoly& operator*=(const NcPoly& o) { return *this = *this * o; }

  friend bool operator==(const NcPoly&, const NcPoly&) = default;

  /// Applies a word-to-polynomial map linearly.
  template <class F>
  NcPoly map_words(F&& f) const {
    NcPoly r;
    for (const auto& [w, c] : terms_) r += f(w) * c;
    return r;
  }

  /// Largest word length, or -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [w, c] : terms_) d = std::max(d, static_cast<int>(w.size()));
    return d;
  }

  bool has_constant_term() const { return terms_.count(Word()) != 0; }

  /// h^0 = Q + y h x
  bool in_h0() const {
    for (const auto& [w, c] : terms_)
      if (!w.empty() && (w.front() != Letter::y || w.back() != Letter::x)) return false;
    return true;
  }
  /// h^1 = Q + y h
  bool in_h1() const {
    for (const auto& [w, c] : terms_)
      if (!w.empty() && w.front() != Letter::y) return false;
    return true;
  }
  /// h' = y h + x h
  bool in_hprime() const { return !has_constant_term(); }

  std::string to_string() const;

 private:
  Terms terms_;
};

inline std::string NcPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    first = false;
    if (w.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += w.str();
    }
  }
  return out;
}

inline NcPoly NcPoly::parse(std::string_view text) {
  NcPoly result;
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty polynomial literal");
  if (s == "0") return result;
  std::size_t pos = 0;
  while (pos < s.size()) {
    Rational sign(1);
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = -1;
      ++pos;
    } else if (pos != 0) {
      throw ParseError("expected '+' or '-' in polynomial literal: " + std::string(text));
    }
    std::size_t end = s.find_first_of("+-", pos);
    std::string term = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    if (term.empty()) throw ParseError("empty term in polynomial literal: " + std::string(text));
    pos = (end == std::string::npos) ? s.size() : end;
    std::size_t star = term.find('*');
    Rational coeff(1);
    std::string word_part = term;
    if (star != std::string::npos) {
      coeff = parse_rational(term.substr(0, star));
      word_part = term.substr(star + 1);
    } else if (std::isdigit(static_cast<unsigned char>(term.front())) && term != "1") {
      coeff = parse_rational(term);
      word_part = "1";
    }
    result.add_term(Word::parse(word_part), sign * coeff);
  }
  return result;
}

/// All words of a given length, in canonical order.
inline std::vector<Word> words_of_length(std::size_t n) {
  std::vector<Word> out;
  out.reserve(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::string s(n, 'x');
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << (n - 1 - i))) s[i] = 'y';
    out.push_back(Word::from_letters(std::move(s)));
  }
  return out;
}

/// All words of length in [lo, hi].
inline std::vector<Word> words_up_to(std::size_t lo, std::size_t hi) {
  std::vector<Word> out;
  for (std::size_t n = lo; n <= hi; ++n) {
    auto ws = words_of_length(n);
    out.insert(out.end(), ws.begin(), ws.end());
  }
  return out;
}

}  // namespace ohno

#endif
