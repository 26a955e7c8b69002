#include <gtest/gtest.h>

#include <cmath>
#include <mpfr.h>

#include "test_util.hpp"

using namespace ohno;
using testing_helpers::dec;
using testing_helpers::to_double_abs;

namespace {

const Precision kP{160};

std::vector<Rational> bernoulli(int n) {
  std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
  b[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rational s(0);
    Integer binom(1);
    for (int k = 0; k < m; ++k) {
      s += Rational(binom) * b[static_cast<std::size_t>(k)];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    b[static_cast<std::size_t>(m)] = -s / Rational(m + 1);
  }
  return b;
}

// Euler-Maclaurin with cutoff N and K correction terms
ArbFloat zeta_em(int s, Precision p) {
  const long N = 40;
  const int K = 40;
  const auto b = bernoulli(2 * K);
  ArbFloat sum(p), t(p), n_arb(p);
  for (long n = 1; n < N; ++n) {
    mpfr_ui_pow_ui(t.raw(), static_cast<unsigned long>(n), static_cast<unsigned long>(s), MPFR_RNDN);
    mpfr_ui_div(t.raw(), 1, t.raw(), MPFR_RNDN);
    sum += t;
  }
  mpfr_set_si(n_arb.raw(), N, MPFR_RNDN);
  auto npow = [&](long e) {
    ArbFloat r(p);
    mpfr_pow_si(r.raw(), n_arb.raw(), e, MPFR_RNDN);
    return r;
  };
  sum += npow(1 - s) * Rational(1, s - 1);
  sum += npow(-s) * Rational(1, 2);
  Rational rising(s);  // s (s+1) ... (s + 2k - 2)
  Integer fact(2);     // (2k)!
  for (int k = 1; k <= K; ++k) {
    if (k > 1) {
      rising *= Rational((s + 2 * k - 3) * (s + 2 * k - 2));
      fact *= (2 * k - 1) * (2 * k);
    }
    sum += npow(-s - 2 * k + 1) * (b[static_cast<std::size_t>(2 * k)] * rising / Rational(fact));
  }
  return sum;
}

}  // namespace

TEST(Oracle, EulerMaclaurinMatchesKnownValues) {
  EXPECT_LT(to_double_abs(zeta_em(2, kP) - ArbFloat::pi(kP) * ArbFloat::pi(kP) * Rational(1, 6)), 1e-40);
  EXPECT_LT(to_double_abs(zeta_em(3, kP) - dec("1.2020569031595942853997381615114499907649862923405")), 1e-40);
}

TEST(Numeric, SingleZetaAgainstEulerMaclaurin) {
  for (int s : {2, 3, 4, 5, 7, 10}) {
    EXPECT_LT(to_double_abs(zeta_int(s, kP) - zeta_em(s, kP)), 1e-40) << s;
  }
}

TEST(Numeric, Polylogs) {
  const auto l1 = polylog(Word::parse("y"), Rational(1, 2), kP);
  EXPECT_LT(to_double_abs(l1 - ArbFloat::log2(kP)), 1e-40);
  // Li_2(1/2) = pi^2/12 - log(2)^2 / 2
  const auto pi = ArbFloat::pi(kP), lg2 = ArbFloat::log2(kP);
  const auto li2 = pi * pi * Rational(1, 12) - lg2 * lg2 * Rational(1, 2);
  EXPECT_LT(to_double_abs(polylog(Word::z(2), Rational(1, 2), kP) - li2), 1e-40);
}

TEST(Numeric, MzvExamples) {
  const auto z2 = mzv(MzvIndex({2}), kP), z3 = mzv(MzvIndex({3}), kP), z4 = mzv(MzvIndex({4}), kP);
  EXPECT_LT(to_double_abs(z2 - dec("1.6449340668482264364724151666460251892189499012068")), 1e-40);
  EXPECT_LT(to_double_abs(mzv(MzvIndex({1, 2}), kP) - z3), 1e-40);
  EXPECT_LT(to_double_abs(mzv(MzvIndex({2, 2}), kP) - (z2 * z2 - z4) * Rational(1, 2)), 1e-40);
  // zeta(1,3) = pi^4 / 360
  const auto pi = ArbFloat::pi(kP);
  EXPECT_LT(to_double_abs(mzv(MzvIndex({1, 3}), kP) - pi * pi * pi * pi * Rational(1, 360)), 1e-40);
  EXPECT_THROW(MzvIndex({2, 1}), DomainError);
  EXPECT_THROW(zeta_int(1, kP), DomainError);
}

TEST(Numeric, NaivePartialSums) {
  EXPECT_LT(std::fabs(mzv_naive(MzvIndex({2}), 10).to_double() - 1.54976773116654), 1e-13);
  const long terms = 20000;
  for (int w = 2; w <= 6; ++w)
    for (const auto& idx : admissible_indices(w)) {
      const ArbFloat full = mzv(idx, Precision{128});
      const ArbFloat naive = mzv_naive(idx, terms);
      const double lag = (full - naive).to_double();
      const double bound = std::pow(std::log(static_cast<double>(terms)) + 1, idx.depth() - 1) * 2.0 / terms;
      EXPECT_GT(lag, 0) << idx.to_string();
      EXPECT_LT(lag, bound) << idx.to_string();
    }
}

TEST(Numeric, SplitPointIndependence) {
  for (int w = 2; w <= 6; ++w)
    for (const auto& idx : admissible_indices(w)) {
      const auto base = mzv_split(idx.word(), Rational(1, 2), kP);
      for (const Rational& p : {Rational(1, 3), Rational(2, 3)})
        EXPECT_LT(to_double_abs(mzv_split(idx.word(), p, kP) - base), 1e-40) << idx.to_string() << " " << p.get_str();
    }
}

TEST(Numeric, DualityAtHighPrecision) {
  for (int w = 2; w <= 7; ++w)
    for (const auto& idx : admissible_indices(w))
      EXPECT_LT(to_double_abs(mzv(idx, kP) - mzv(idx.dual(), kP)), 1e-40) << idx.to_string();
}

TEST(Numeric, Evaluator) {
  Evaluator ev(kP);
  const MzvComb c = MzvComb(Rational(2)) + MzvComb(MzvIndex({3})) * Rational(3);
  EXPECT_LT(to_double_abs(ev(c) - dec("5.6061707094787828561992144845343499722949588770215")), 1e-40);
  EXPECT_LT(to_double_abs(ev(ZetaPoly::zeta(2) * ZetaPoly::zeta(3)) - zeta_em(2, kP) * zeta_em(3, kP)), 1e-40);
  EXPECT_THROW(ev(ZetaPoly::euler_gamma()), DomainError);
}

TEST(Checks, NumericBasics) {
  for (const auto& r : {check_euler_12(), check_duality(6), check_ohno(4, 2)}) {
    EXPECT_TRUE(r.pass) << r.check << " " << r.max_residual;
    EXPECT_FALSE(r.residuals.empty());
  }
  // a tolerance far below the working precision must fail
  NumericOptions tight;
  tight.tol = ArbFloat::from_string("1e-300", Precision{128});
  EXPECT_FALSE(check_duality(5, tight).pass);
}
