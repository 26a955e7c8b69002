#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

using namespace ohno;
using testing_helpers::P;

namespace {

// plain rational elimination
int rational_rank(std::vector<std::vector<Rational>> a) {
  int rank = 0;
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(a.size()); ++c) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[static_cast<std::size_t>(rank)]);
    const auto& p = a[static_cast<std::size_t>(rank)];
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || a[r][c] == 0) continue;
      const Rational f = a[r][c] / p[c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * p[k];
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<Rational>> as_rational(const RelationMatrix& m) {
  std::vector<std::vector<Rational>> out;
  for (const auto& row : m.rows) {
    std::vector<Rational> r;
    for (const auto& c : row.coeffs) r.emplace_back(c);
    out.push_back(r);
  }
  return out;
}

SuiteOptions small() {
  SuiteOptions o;
  o.weight = 4;
  return o;
}

}  // namespace

TEST(Relations, BareissAgreesWithRationalElimination) {
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<int> coef(-3, 3), dim(1, 6);
  for (int i = 0; i < 200; ++i) {
    const int r = dim(rng), c = dim(rng);
    std::vector<std::vector<Integer>> a(static_cast<std::size_t>(r), std::vector<Integer>(static_cast<std::size_t>(c)));
    std::vector<std::vector<Rational>> q(static_cast<std::size_t>(r), std::vector<Rational>(static_cast<std::size_t>(c)));
    for (int x = 0; x < r; ++x)
      for (int y = 0; y < c; ++y) {
        const int v = (i % 3 == 0 && x == r - 1 && r > 1) ? 0 : coef(rng);
        a[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = v;
        q[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = v;
      }
    EXPECT_EQ(bareiss_rank(a), rational_rank(q));
  }
}

TEST(Relations, NormalizeRow) {
  const auto r = normalize_row({Rational(0), Rational(-1, 2), Rational(1, 3)});
  ASSERT_EQ(r.size(), 3u);
  EXPECT_EQ(r[0], 0);
  EXPECT_EQ(r[1], 3);
  EXPECT_EQ(r[2], -2);
}

TEST(Relations, Weight3) {
  const auto m = datamine(3);
  EXPECT_EQ(m.weight, 3);
  EXPECT_EQ(m.basis.size(), 2u);
  EXPECT_EQ(m.rank, 1);
  EXPECT_EQ(m.rank, rational_rank(as_rational(m)));
  EXPECT_TRUE(max_contraction(m).is_zero() || max_contraction(m).to_double() < 1e-30);
}

TEST(Relations, DualityRowsOnly) {
  const auto m = datamine(4, 0);
  for (const auto& row : m.rows) EXPECT_EQ(row.m, 0);
  EXPECT_EQ(m.rank, 1);
}

TEST(Relations, Weight4) {
  const auto m = datamine(4);
  EXPECT_EQ(m.basis.size(), 4u);
  EXPECT_EQ(m.rank, rational_rank(as_rational(m)));
  EXPECT_LT(max_contraction(m).to_double(), 1e-25);
}

TEST(Relations, WeightRange) {
  EXPECT_THROW(datamine(2), DomainError);
  EXPECT_THROW(datamine(10), DomainError);
}

TEST(Suites, WordOrIndex) {
  EXPECT_EQ(parse_word_or_index("1,2"), P("yyx"));
  EXPECT_EQ(parse_word_or_index("3"), P("yxx"));
  EXPECT_EQ(parse_word_or_index("1"), P("1"));
  EXPECT_EQ(parse_word_or_index("yx + 2*y"), P("yx + 2*y"));
  EXPECT_THROW(parse_word_or_index("2,1"), ParseError);
  EXPECT_THROW(parse_word_or_index("xq"), std::exception);
}

TEST(Suites, Planning) {
  EXPECT_EQ(suite_names().size(), 13u);
  for (const auto& n : suite_names()) {
    const auto plan = plan_suite(n, SuiteOptions{});
    EXPECT_EQ(plan.name, n);
    EXPECT_FALSE(plan.tasks.empty()) << n;
  }
  EXPECT_THROW(plan_suite("nope", SuiteOptions{}), UnknownSuite);
  SuiteOptions w;
  w.word = "yx";
  EXPECT_THROW(plan_suite("hspecial", w), std::invalid_argument);
  EXPECT_THROW(plan_suite("duality", w), std::invalid_argument);
  w.word = "y";
  EXPECT_THROW(plan_suite("main-equiv", w), std::invalid_argument);
  EXPECT_THROW(plan_suite("ohno", w), DomainError);
}

TEST(Suites, RunAndReport) {
  const auto r = run_suite("duality", small());
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.check, "duality");
  const auto j = nlohmann::json::parse(reports_json({r}));
  for (const char* key : {"check", "params", "tolerance", "max_residual", "pass", "duration_ms", "residuals"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_TRUE(j["params"].is_object());
  EXPECT_EQ(j["params"]["max_weight"], "4");
  ASSERT_FALSE(j["residuals"].empty());
  EXPECT_TRUE(j["residuals"][0].contains("coefficient_key"));
  EXPECT_TRUE(j["residuals"][0].contains("value"));
  EXPECT_FALSE(nlohmann::json::parse(reports_json({r}, false)).contains("duration_ms"));

  const auto csv = reports_csv({r});
  EXPECT_EQ(csv.rfind("check,coefficient_key,value,tolerance,pass\n", 0), 0u);
  EXPECT_NE(reports_text({r}).find("PASS duality"), std::string::npos);
}

TEST(Suites, FailingTolerance) {
  auto o = small();
  o.tol = "1e-80";
  const auto r = run_suite("duality", o);
  EXPECT_FALSE(r.pass);
  EXPECT_NE(reports_text({r}).find("FAIL duality"), std::string::npos);
}

TEST(Suites, ParallelMatchesSerial) {
  const std::vector<std::string> names = {"duality", "ohno", "taubar", "ksine"};
  auto o = small();
  o.m = 2;
  o.t_order = 2;
  const auto serial = run_suites(names, o, 1);
  const auto parallel = run_suites(names, o, 4);
  ASSERT_EQ(serial.size(), names.size());
  EXPECT_EQ(reports_json(serial, false), reports_json(parallel, false));
  for (const auto& r : serial) EXPECT_TRUE(r.pass) << r.check;
}

TEST(Suites, ExactChecksAreExact) {
  const auto r = check_sym_harmonic_paths(4);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.tolerance, "0");
  EXPECT_TRUE(r.exact);
}
