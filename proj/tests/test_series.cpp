#include <gtest/gtest.h>

#include <random>

#include "fglschur/error.hpp"
#include "fglschur/fgl.hpp"
#include "fglschur/report.hpp"
#include "fglschur/series.hpp"

using namespace fglschur;

namespace {

const Truncation T6{6, Grading::xyb()};

Series x(int i, Truncation t = T6) { return Series::variable(var_x(i), t); }
Series y(int i, Truncation t = T6) { return Series::variable(var_y(i), t); }
Series b(int i, Truncation t = T6) { return Series::variable(var_b(i), t); }
Series c(long v, Truncation t = T6) { return Series::constant(v, t); }

Series random_poly(std::mt19937_64& rng, Truncation t) {
  std::uniform_int_distribution<int> coeff(-4, 4), pick(0, 3), deg(0, 3);
  const Variable vars[] = {var_x(1), var_x(2), var_y(1), var_b(1)};
  std::vector<Term> ts;
  for (int k = 0; k < 6; ++k) {
    std::vector<std::pair<Variable, int>> ps;
    for (int d = deg(rng); d > 0; --d) ps.emplace_back(vars[pick(rng)], 1);
    ts.push_back({Monomial::from_pairs(ps), coeff(rng)});
  }
  return Series::from_terms(std::move(ts), t);
}

}  // namespace

TEST(Series, TruncationDropsHighTerms) {
  const Truncation t3{3, Grading::xyb()};
  const Series s = mul_truncated(x(1, t3) + x(2, t3), mul_truncated(x(1, t3), mul_truncated(x(1, t3), x(1, t3))));
  EXPECT_TRUE(s.is_zero());
  EXPECT_EQ(power(x(1, t3), 3).to_string(), "x1^3");
}

TEST(Series, GradingIgnoresUngradedFamilies) {
  const Truncation xb{2, Grading::xb()};
  const Series s = mul_truncated(Series::variable(var_y(1), xb), Series::variable(var_y(2), xb));
  // y is ungraded in xb, so y1*y2 has degree 0 and survives
  EXPECT_EQ(s.to_string(), "y1*y2");
  EXPECT_EQ(s.valuation(), 0);
}

TEST(Series, RingAxiomsOnRandomPolynomials) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Series a = random_poly(rng, T6), p = random_poly(rng, T6), q = random_poly(rng, T6);
    EXPECT_EQ(mul_truncated(a, p), mul_truncated(p, a));
    EXPECT_EQ(mul_truncated(mul_truncated(a, p), q), mul_truncated(a, mul_truncated(p, q)));
    EXPECT_EQ(mul_truncated(a, p + q), mul_truncated(a, p) + mul_truncated(a, q));
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(Series, InvertUnitGeometric) {
  const Series inv = invert_unit(c(1) - x(1));
  Series want(T6);
  for (int k = 0; k <= 6; ++k) want += power(x(1), k);
  EXPECT_EQ(inv, want);
  EXPECT_TRUE(agree(mul_truncated(inv, c(1) - x(1)), c(1)));
}

TEST(Series, InvertUnitRejectsNonUnits) {
  EXPECT_THROW(invert_unit(x(1)), NotInvertibleError);
  EXPECT_THROW(invert_unit(Series(T6)), NotInvertibleError);
}

TEST(Series, ExactDivide) {
  const Series f = mul_truncated(x(1) - x(2), c(3) + x(1) * 2 + mul_truncated(x(2), b(1)));
  const Series q = exact_divide(f, x(1) - x(2));
  EXPECT_EQ(q.cutoff(), 5);
  EXPECT_TRUE(agree(q, c(3) + x(1) * 2 + mul_truncated(x(2), b(1))));
  EXPECT_THROW(exact_divide(x(1) + c(0) + mul_truncated(x(2), x(2)), x(1) - x(2)), DivisibilityError);
}

TEST(Series, SubstituteIsSimultaneous) {
  const Series f = x(1) + mul_truncated(x(2), x(2));
  const Series g = substitute(f, {{var_x(1), x(2)}, {var_x(2), x(1)}});
  EXPECT_EQ(g, x(2) + mul_truncated(x(1), x(1)));
}

TEST(Series, SubstituteRejectsDivergentBinding) {
  EXPECT_THROW(substitute(x(1), {{var_x(1), c(1) + x(2)}}), DivergenceError);
}

TEST(Series, CoefficientOfRecoversExpansion) {
  const Variable t = var_t();
  const Series tt = Series::variable(t, T6);
  std::vector<Series> basis;
  for (int k = 0; k <= 6; ++k) basis.push_back(power(tt + b(1), k));
  // f = 2 + y1 (t + b1) - (t + b1)^2
  const Series f = c(2) + mul_truncated(y(1), basis[1]) - basis[2];
  const auto cs = coefficient_of(f, basis, t);
  EXPECT_TRUE(agree(cs[0], c(2)));
  EXPECT_TRUE(agree(cs[1], y(1)));
  EXPECT_TRUE(agree(cs[2], c(-1)));
  for (int k = 3; k <= 6; ++k) EXPECT_TRUE(cs[k].is_zero());
}

TEST(Series, TrackedPrecision) {
  const Series a = x(1, {4, Grading::xyb()}), p = c(1, {2, Grading::xyb()}) + x(2, {2, Grading::xyb()});
  const Series m = mul_tracked(a, p);
  EXPECT_EQ(m.cutoff(), 3);  // a has valuation 1 and p is known to 2
  EXPECT_EQ(add_tracked(a, p).cutoff(), 2);
}

TEST(Series, FirstDifferenceWitness) {
  const auto w = first_difference(x(1) + x(2) * 3, x(1) + x(2) * 2);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->monomial.to_string(), "x2");
  EXPECT_EQ(w->lhs, 3);
  EXPECT_EQ(w->rhs, 2);
  EXPECT_FALSE(first_difference(x(1), x(1)).has_value());
}

TEST(Series, AddRequiresMatchingTruncation) {
  EXPECT_THROW(add(x(1), x(1, {5, Grading::xyb()})), ConfigurationError);
}

TEST(Series, CutoffLimit) {
  EXPECT_NO_THROW(check_cutoff(12));
  EXPECT_THROW(check_cutoff(13), ConfigurationError);
  EXPECT_NO_THROW(check_cutoff(13, true));
  EXPECT_THROW(check_cutoff(-1), ConfigurationError);
}

TEST(Series, JsonRoundTrip) {
  const Series s = x(1) * Rational(3, 4) - mul_truncated(y(2), b(1)) +
                   mul_truncated(Series::variable(var_beta(), T6), Series::variable(var_b(-1), T6));
  const Json j = series_to_json(s);
  EXPECT_EQ(series_from_json(j, T6), s);
  EXPECT_EQ(j[0]["num"], "3");
  EXPECT_EQ(j[0]["den"], "4");
  EXPECT_EQ(j[0]["monomial"]["x1"], 1);
}

TEST(Series, PrintsCanonicalText) {
  EXPECT_EQ((x(1) * 2).to_string(), "2*x1");
  EXPECT_EQ((c(1) - x(1) + mul_truncated(x(1), x(1))).to_string(), "1 - x1 + x1^2");
  EXPECT_EQ(Series(T6).to_string(), "0");
  EXPECT_EQ(Series::variable(var_b(0), T6).to_string(), "bn0");
}
