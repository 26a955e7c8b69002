#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

using namespace ohno;
using testing_helpers::P;

using RS = MultiSeries<Rational>;

namespace {

TruncationProfile tp(int t) { return TruncationProfile().with(Param::T, t); }

}  // namespace

TEST(Series, RingArithmetic) {
  const auto t = RS::variable(Param::T, tp(2));
  const auto one = RS::constant(Rational(1), tp(2));
  const auto prod = (one + t) * (one - t);
  EXPECT_EQ(prod, one - t * t);
  EXPECT_EQ(prod.coeff(exponents({{Param::T, 2}})), Rational(-1));
  EXPECT_EQ(prod.coeff(exponents({{Param::T, 1}})), Rational(0));

  const auto g = geometric(t.truncated(tp(3)));
  EXPECT_EQ(g.coeff(exponents({{Param::T, 2}})), Rational(1));

  const auto ab = TruncationProfile().with(Param::A, 2).with(Param::B, 2);
  const auto d = RS::variable(Param::A, ab) - RS::variable(Param::B, ab);
  const auto sq = d * d;
  EXPECT_EQ(sq.coeff(exponents({{Param::A, 2}})), Rational(1));
  EXPECT_EQ(sq.coeff(exponents({{Param::A, 1}, {Param::B, 1}})), Rational(-2));
  EXPECT_EQ(sq.coeff(exponents({{Param::B, 2}})), Rational(1));
  EXPECT_EQ(sq.terms().size(), 3u);
}

TEST(Series, ProfilesIntersectAndGuardCoefficients) {
  const auto a = RS::variable(Param::T, tp(4));
  const auto b = RS::variable(Param::T, tp(2));
  const auto s = a + b;
  EXPECT_EQ(s.profile().bound(Param::T), 2);
  EXPECT_THROW(s.coeff(exponents({{Param::T, 3}})), DomainError);
  const auto tot = TruncationProfile().with(Param::A, 3).with(Param::B, 3).with_total(3);
  const auto x = RS::variable(Param::A, tot) + RS::variable(Param::B, tot);
  const auto cube = x * x * x * x;
  EXPECT_TRUE(cube.is_zero());
  EXPECT_THROW(x.coeff(exponents({{Param::A, 2}, {Param::B, 2}})), DomainError);
}

TEST(Series, GeometricWordSeries) {
  const auto g = geometric_word_series(Rational(1), Param::A, P("x"), TruncationProfile().with(Param::A, 2));
  EXPECT_EQ(g.coeff(exponents({})), P("1"));
  EXPECT_EQ(g.coeff(exponents({{Param::A, 1}})), P("x"));
  EXPECT_EQ(g.coeff(exponents({{Param::A, 2}})), P("xx"));

  const auto h = geometric_word_series(Rational(-1), Param::T, P("y"), tp(2));
  EXPECT_EQ(h.coeff(exponents({{Param::T, 1}})), P("-y"));
  EXPECT_EQ(h.coeff(exponents({{Param::T, 2}})), P("yy"));

  const auto f = concat(y_t_over_one_plus_y_t(2), NcPoly::z());
  EXPECT_EQ(f.coeff(exponents({{Param::T, 1}})), P("yx + yy"));
  EXPECT_EQ(f.coeff(exponents({{Param::T, 2}})), P("-yyx - yyy"));
  EXPECT_THROW(geometric_word_series(Rational(1), Param::A, P("x"), TruncationProfile()), DomainError);
}

TEST(Series, ExpLog) {
  const auto zero = RS(tp(3));
  EXPECT_EQ(exp_series(zero), RS::constant(Rational(1), tp(3)));
  const auto t = RS::variable(Param::T, tp(2));
  const auto s = t + t * t;
  EXPECT_EQ(log_series(exp_series(s)), s);
  const auto e = exp_series(RS::variable(Param::T, tp(2)));
  EXPECT_EQ(e.coeff(exponents({{Param::T, 2}})), Rational(1, 2));
  EXPECT_THROW(exp_series(RS::constant(Rational(1), tp(2))), DomainError);
  EXPECT_THROW(log_series(t), DomainError);

  // over ZetaPoly: exp(zeta(2)/2 T^2) = 1 + zeta(2)/2 T^2 at order 3
  ZetaSeries z(tp(3));
  z.add_term(exponents({{Param::T, 2}}), ZetaPoly::zeta(2) * Rational(1, 2));
  const auto ez = exp_series(z);
  EXPECT_EQ(ez.coeff(exponents({{Param::T, 2}})), ZetaPoly::zeta(2) * Rational(1, 2));
  EXPECT_TRUE(ez.coeff(exponents({{Param::T, 3}})).is_zero());
}

TEST(Series, ExpLogRoundtripRandomZetaSeries) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> coef(-3, 3);
  const auto prof = TruncationProfile().with(Param::T, 3).with(Param::A, 2);
  for (int i = 0; i < 10; ++i) {
    ZetaSeries s(prof);
    for (int t = 0; t <= 3; ++t)
      for (int a = 0; a <= 2; ++a)
        if (t + a > 0) s.add_term(exponents({{Param::T, t}, {Param::A, a}}), ZetaPoly::zeta(2 + (t + a) % 3) * Rational(coef(rng)));
    EXPECT_EQ(log_series(exp_series(s)), s);
  }
}

TEST(Series, Substitute) {
  // exp(u) o T
  const auto expu = exp_series(RS::variable(Param::U, TruncationProfile().with(Param::U, 2)));
  const auto r = substitute(expu, RS::variable(Param::T, tp(2)));
  EXPECT_EQ(r.coeff(exponents({})), Rational(1));
  EXPECT_EQ(r.coeff(exponents({{Param::T, 1}})), Rational(1));
  EXPECT_EQ(r.coeff(exponents({{Param::T, 2}})), Rational(1, 2));

  // log(1+u) o (A - B) at orders (1,1)
  const auto ab = TruncationProfile().with(Param::A, 1).with(Param::B, 1);
  const auto one_u = RS::constant(Rational(1), TruncationProfile().with(Param::U, 2)) +
                     RS::variable(Param::U, TruncationProfile().with(Param::U, 2));
  const auto l = substitute(log_series(one_u), RS::variable(Param::A, ab) - RS::variable(Param::B, ab));
  // -(A - B)^2 / 2 leaves +A B
  EXPECT_EQ(l, RS::variable(Param::A, ab) - RS::variable(Param::B, ab) + RS::variable(Param::A, ab) * RS::variable(Param::B, ab));

  // lg o (B - T): the B T coefficient comes only from zeta(2)/2 (B - T)^2
  const auto bt = TruncationProfile().with(Param::B, 2).with(Param::T, 2);
  const auto lg = log_gamma_at(linear_series({{Param::B, Rational(1)}, {Param::T, Rational(-1)}}, bt));
  EXPECT_EQ(lg.coeff(exponents({{Param::B, 1}, {Param::T, 1}})), ZetaPoly::zeta(2) * Rational(-1));
  EXPECT_THROW(substitute(expu, RS::constant(Rational(1), tp(2))), DomainError);
}

TEST(Series, Rendering) {
  const auto s = RS::constant(Rational(2), tp(2)) - RS::variable(Param::T, tp(2)) * Rational(3);
  const std::string text = s.to_string();
  EXPECT_NE(text.find("T"), std::string::npos);
  EXPECT_EQ(text.find("+ -"), std::string::npos) << text;
}

TEST(Checks, SeriesLemmas) {
  for (const auto& r : {check_geometric_lemmas(3, 3, 2), check_harmonic_series_rules(4, 2), check_exp_log(5)}) {
    EXPECT_TRUE(r.pass) << r.check;
    EXPECT_EQ(r.max_residual, "0");
  }
}
