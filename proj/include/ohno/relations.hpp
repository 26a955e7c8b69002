#ifndef OHNO_RELATIONS_HPP
#define OHNO_RELATIONS_HPP

// Linear relations among MZVs of a fixed weight produced by the Ohno relation.

#include <numeric>
#include <string>
#include <vector>

#include "ohno/maps.hpp"
#include "ohno/mzv.hpp"
#include "ohno/numeric.hpp"

namespace ohno {

struct RelationRow {
  std::vector<Integer> coeffs;
  MzvIndex source;
  int m;
};

struct RelationMatrix {
  int weight = 0;
  std::vector<MzvIndex> basis;
  std::vector<RelationRow> rows;
  int rank = 0;
};

/// Fraction-free (Bareiss) elimination rank.
inline int bareiss_rank(std::vector<std::vector<Integer>> a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size(), cols = a.front().size();
  Integer prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = t;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

/// Clears denominators and content; the first nonzero entry is made positive.
inline std::vector<Integer> normalize_row(const std::vector<Rational>& row) {
  Integer l(1), g(0);
  for (const auto& q : row)
    if (q != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(row.size());
  for (const auto& q : row) {
    Integer v = q.get_num() * (l / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.push_back(v);
  }
  if (g == 0) return out;
  bool negate = false;
  for (const auto& v : out)
    if (v != 0) {
      negate = v < 0;
      break;
    }
  for (auto& v : out) {
    v /= g;
    if (negate) v = -v;
  }
  return out;
}

/// Rows sigma_m(k) - sigma_m(dual k) for all admissible k with |k| + m = weight, m <= max_m.
/// Zero rows (self-dual sources) are kept in the provenance but do not affect the rank.
inline RelationMatrix datamine(int weight, int max_m = -1) {
  if (weight < 3 || weight > 9) throw DomainError("datamine: weight must lie in [3, 9]");
  if (max_m < 0) max_m = weight - 2;
  RelationMatrix mat;
  mat.weight = weight;
  mat.basis = admissible_indices(weight);
  std::vector<std::vector<Integer>> dense;
  for (int m = 0; m <= std::min(max_m, weight - 2); ++m) {
    for (const auto& idx : admissible_indices(weight - m)) {
      const NcPoly rel = sigma_m(idx.word(), m) - sigma_m(tau(idx.word()), m);
      std::vector<Rational> row;
      row.reserve(mat.basis.size());
      for (const auto& b : mat.basis) row.push_back(rel.coefficient(b.word()));
      mat.rows.push_back({normalize_row(row), idx, m});
      dense.push_back(mat.rows.back().coeffs);
    }
  }
  mat.rank = bareiss_rank(std::move(dense));
  return mat;
}

/// max over rows of |sum_j row_j zeta(basis_j)|
inline ArbFloat max_contraction(const RelationMatrix& mat, Precision prec = Precision{128}) {
  Evaluator ev(prec);
  std::vector<ArbFloat> values;
  for (const auto& b : mat.basis) values.push_back(ev.word_value(b.word()));
  ArbFloat worst(prec);
  for (const auto& row : mat.rows) {
    ArbFloat s(ev.working());
    for (std::size_t j = 0; j < row.coeffs.size(); ++j)
      if (row.coeffs[j] != 0) s += values[j] * Rational(row.coeffs[j]);
    if (worst < abs(s)) worst = abs(s);
  }
  return worst;
}

}  // namespace ohno

#endif
