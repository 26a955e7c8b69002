#include <gtest/gtest.h>

#include <cmath>

#include "test_util.hpp"

using namespace ohno;
using testing_helpers::P;
using testing_helpers::to_double_abs;

namespace {

MzvComb Zi(std::initializer_list<int> k) { return MzvComb(MzvIndex(std::vector<int>(k))); }
MzvComb Q(long n, long d = 1) { return MzvComb(Rational(n, d)); }

const double kZeta2 = 1.6449340668482264;

}  // namespace

TEST(Regularization, ShuffleXY) {
  EXPECT_EQ(zsh_xy(P("1")), XYPoly<MzvComb>(Q(1)));
  EXPECT_EQ(zsh_xy(P("x")), XYPoly<MzvComb>::monomial(1, 0, Q(1)));
  const auto xy = zsh_xy(P("xy"));
  EXPECT_EQ(xy.coeff(1, 1), Q(1));
  EXPECT_EQ(xy.coeff(0, 0), -Zi({2}));
  EXPECT_TRUE(xy.coeff(1, 0).is_zero());
  const auto yxy = zsh_xy(P("yxy"));
  EXPECT_EQ(yxy.coeff(0, 0), Zi({1, 2}) * Rational(-2));
  EXPECT_EQ(yxy.coeff(0, 1), Zi({2}));
}

TEST(Regularization, ShuffleValues) {
  EXPECT_TRUE(zsh(P("y")).is_zero());
  EXPECT_TRUE(zsh(P("x")).is_zero());
  EXPECT_TRUE(zsh(P("yy")).is_zero());
  EXPECT_EQ(zsh(P("yx")), Zi({2}));
  EXPECT_EQ(zsh(P("xyx")), Zi({3}) * Rational(-2));
  EXPECT_EQ(zsh(P("3 + yxx")), Q(3) + Zi({3}));
}

TEST(Regularization, HarmonicValues) {
  EXPECT_TRUE(zstar(P("y")).is_zero());
  EXPECT_EQ(zstar(P("yy")), Zi({2}) * Rational(-1, 2));
  EXPECT_EQ(zstar(P("yxy")), -Zi({1, 2}) - Zi({3}));
  EXPECT_EQ(zstar(P("yx")), Zi({2}));
  EXPECT_THROW(zstar(P("xy")), DomainError);
}

TEST(Regularization, HarmonicMatchesPartialSums) {
  // sum_{m1 < m2 <= N} 1/(m1^2 m2) = zeta(2) H_N + Z*(yxy) + O(log N / N)
  const long N = 400000;
  double inner = 0, s = 0, h = 0;
  for (long m = 1; m <= N; ++m) {
    const double dm = static_cast<double>(m);
    s += inner / dm;
    inner += 1 / (dm * dm);
    h += 1 / dm;
  }
  Evaluator ev(Precision{64});
  const double expected = ev(zstar(P("yxy"))).to_double();
  EXPECT_LT(std::fabs(s - kZeta2 * h - expected), 1e-3);

  // sum_{m1 < m2 <= N} 1/(m1 m2) = (H_N^2 - H^(2)_N) / 2 -> Z*(yy) = -zeta(2)/2 with T = 0
  EXPECT_NEAR(ev(zstar(P("yy"))).to_double(), -kZeta2 / 2, 1e-15);
}

TEST(Regularization, SigmaSeries) {
  Regularizer reg;
  const auto s = reg.zsh_series(sigma(P("yx"), 2));
  EXPECT_EQ(s.coeff(exponents({})), Zi({2}));
  EXPECT_EQ(s.coeff(exponents({{Param::T, 1}})), Zi({3}));
  EXPECT_EQ(s.coeff(exponents({{Param::T, 2}})), Zi({4}));
}

TEST(Regularization, HSeries) {
  const auto prof = TruncationProfile().with(Param::A, 1).with(Param::B, 1);
  const auto one = H_series(P("1"), prof);
  EXPECT_EQ(one.coeff(exponents({})), Q(1));
  EXPECT_TRUE(one.coeff(exponents({{Param::A, 1}})).is_zero());
  const auto yz = P("y") * NcPoly::z();
  const auto h = H_series(yz, prof);
  EXPECT_EQ(h.coeff(exponents({})), -Zi({2}));
  EXPECT_EQ(h.coeff(exponents({{Param::A, 1}})), zsh(phi(P("x") * yz)));
  EXPECT_EQ(h.coeff(exponents({{Param::B, 1}})), zsh(phi(yz * P("x"))));
}

TEST(Regularization, Kawashima) {
  const auto k = kawashima_K(P("y"), 2);
  EXPECT_EQ(k.coeff(exponents({{Param::T, 1}})), -Zi({2}));
  EXPECT_EQ(k.coeff(exponents({{Param::T, 2}})), -Zi({1, 2}));
  EXPECT_TRUE(k.coeff(exponents({})).is_zero());
  EXPECT_EQ(kawashima_K(P("yx"), 1).coeff(exponents({{Param::T, 1}})), -Zi({3}) - Zi({1, 2}));
  EXPECT_THROW(kawashima_K(P("xy"), 2), DomainError);
  EXPECT_THROW(kawashima_K(P("y"), 0), DomainError);
}

TEST(Ohno, Pairs) {
  auto [a0, b0] = ohno_check_pair(MzvIndex({3}), 0);
  EXPECT_EQ(a0, Zi({3}));
  EXPECT_EQ(b0, Zi({1, 2}));
  auto [a1, b1] = ohno_check_pair(MzvIndex({3}), 1);
  EXPECT_EQ(a1, Zi({4}));
  EXPECT_EQ(b1, Zi({2, 2}) + Zi({1, 3}));
  EXPECT_EQ(ohno_sum(MzvIndex({1, 2}), 1), Zi({2, 2}) + Zi({1, 3}));
  // any pair agrees numerically
  Evaluator ev(Precision{128});
  for (const auto& idx : admissible_indices(5))
    for (int m = 0; m <= 2; ++m) {
      const auto [l, r] = ohno_check_pair(idx, m);
      EXPECT_LT(to_double_abs(ev(l) - ev(r)), 1e-30) << idx.to_string() << " m=" << m;
    }
}

TEST(MainTheorem, SmallWords) {
  Evaluator ev(Precision{128});
  Regularizer reg;
  for (const char* w : {"1", "x", "y", "yx", "xy", "yxy"}) {
    const auto [left, right] = main_theorem_sides(P(w), 3, ev, reg);
    const auto d = left - right;
    for (const auto& [e, p] : d.terms())
      for (const auto& [key, c] : p.terms()) EXPECT_LT(to_double_abs(c), 1e-30) << w;
  }
  // w = 1: both sides are 1
  const auto [l1, r1] = main_theorem_sides(P("1"), 3, ev, reg);
  EXPECT_LT(to_double_abs(l1.coeff(exponents({})).coeff(0, 0) - ArbFloat(1L, Precision{128})), 1e-30);
}

TEST(MainTheorem, FailsWithoutGammaCorrection) {
  Evaluator ev(Precision{128});
  Regularizer reg;
  const auto w = P("xy");
  const auto [left, right] = main_theorem_sides(w, 2, ev, reg);
  const auto bare = ev.series(reg.zsh_xy_series(sigma(w, 2)));
  double worst = 0;
  for (const auto& [e, p] : (left - bare).terms())
    for (const auto& [key, c] : p.terms()) worst = std::max(worst, to_double_abs(c));
  EXPECT_GT(worst, 1e-3);
}

TEST(MainTheorem, EquivalentForm) {
  Evaluator ev(Precision{128});
  Regularizer reg;
  const auto prof = TruncationProfile().with(Param::T, 2).with(Param::A, 2).with(Param::B, 2);
  for (const char* w : {"1", "yx"}) {
    const auto [left, right] = main_theorem_equiv_sides(P(w), prof, ev, reg);
    for (const auto& [e, c] : (left - right).terms()) EXPECT_LT(to_double_abs(c), 1e-30) << w;
  }
  EXPECT_THROW(main_theorem_equiv_sides(P("y"), prof, ev, reg), DomainError);
}

TEST(Checks, RegularizationSuites) {
  const std::vector<NcPoly> few = {P("1"), P("yx"), P("yy")};
  for (const auto& r : {check_main_theorem(few, 2), check_reg_theorem(3, 3), check_reg_corollary(2, 3),
                        check_zsh_multiplicative(4), check_zstar_multiplicative(4), check_kawashima({P("y"), P("yx")}, 3),
                        check_ksine({P("y"), P("yx")}, 3), check_product_values(4)}) {
    EXPECT_TRUE(r.pass) << r.check << " " << r.max_residual;
    EXPECT_FALSE(r.residuals.empty()) << r.check;
  }
}
