#include <gtest/gtest.h>

#include "fglschur/error.hpp"
#include "fglschur/fgl.hpp"

using namespace fglschur;

namespace {

const Truncation T6{6, Grading::xyb()};

Series x(int i) { return Series::variable(var_x(i), T6); }
Series m(int k) { return Series::variable(var_m(k), T6); }
Series beta() { return Series::variable(var_beta(), T6); }

std::vector<FglPtr> all_laws() { return {make_fgl("additive"), make_fgl("k-theory"), make_fgl("universal")}; }

}  // namespace

TEST(Fgl, AxiomsAtDegreeSix) {
  const Series zero(T6);
  for (const auto& F : all_laws()) {
    SCOPED_TRACE(F->name());
    EXPECT_EQ(F->sum(x(1), zero), x(1));
    EXPECT_EQ(F->sum(x(1), x(2)), F->sum(x(2), x(1)));
    EXPECT_EQ(F->sum(F->sum(x(1), x(2)), x(3)), F->sum(x(1), F->sum(x(2), x(3))));
    EXPECT_TRUE(F->sum(x(1), F->inverse(x(1))).is_zero());
    EXPECT_EQ(F->inverse(F->inverse(x(1))), x(1));
  }
}

TEST(Fgl, AdditiveClosedForms) {
  const auto F = make_fgl("additive");
  EXPECT_EQ(F->sum(x(1), x(2)), x(1) + x(2));
  EXPECT_EQ(F->inverse(x(1)), -x(1));
}

TEST(Fgl, KTheoryClosedForms) {
  const auto F = make_fgl("k-theory");
  EXPECT_EQ(F->sum(x(1), x(2)), x(1) + x(2) + mul_truncated(beta(), mul_truncated(x(1), x(2))));
  // ubar = -u / (1 + beta u)
  const Series want = -mul_truncated(x(1), invert_unit(Series::constant(1, T6) + mul_truncated(beta(), x(1))));
  EXPECT_EQ(F->inverse(x(1)), want);
  EXPECT_EQ(F->coefficient(1, 1, T6), beta());
  EXPECT_TRUE(F->coefficient(1, 2, T6).is_zero());
}

TEST(Fgl, RationalBeta) {
  const auto F = make_fgl("k-theory", "-1");
  EXPECT_EQ(F->sum(x(1), x(2)), x(1) + x(2) - mul_truncated(x(1), x(2)));
  EXPECT_THROW(make_fgl("k-theory", "one"), ConfigurationError);
  EXPECT_THROW(make_fgl("elliptic"), ConfigurationError);
}

TEST(Fgl, UniversalLowCoefficients) {
  const auto F = make_fgl("universal");
  EXPECT_EQ(F->coefficient(1, 1, T6), m(1) * -2);
  EXPECT_EQ(F->coefficient(1, 2, T6), mul_truncated(m(1), m(1)) * 4 - m(2) * 3);
  EXPECT_EQ(F->coefficient(1, 2, T6), F->coefficient(2, 1, T6));
}

TEST(Fgl, CoefficientNormalization) {
  for (const auto& F : all_laws()) {
    SCOPED_TRACE(F->name());
    EXPECT_EQ(F->coefficient(1, 0, T6), Series::constant(1, T6));
    for (int i = 0; i <= 5; ++i) {
      if (i != 1) EXPECT_TRUE(F->coefficient(i, 0, T6).is_zero());
      for (int j = 0; i + j <= 6; ++j) EXPECT_EQ(F->coefficient(i, j, T6), F->coefficient(j, i, T6));
    }
  }
}

TEST(Fgl, FactorialPowers) {
  for (const auto& F : all_laws()) {
    SCOPED_TRACE(F->name());
    const std::vector<Series> bs = {Series::variable(var_b(1), T6), Series::variable(var_b(2), T6)};
    EXPECT_EQ(F->factorial_power(x(1), bs, 0, false), Series::constant(1, T6));
    EXPECT_EQ(F->factorial_power(x(1), bs, 0, true), Series::constant(1, T6));
    const Series p2 = F->factorial_power(x(1), bs, 2, false);
    EXPECT_EQ(p2, mul_truncated(F->sum(x(1), bs[0]), F->sum(x(1), bs[1])));
    EXPECT_EQ(F->factorial_power(x(1), bs, 2, true), mul_truncated(F->sum(x(1), x(1)), F->sum(x(1), bs[0])));
    // [t|b]^2 vanishes at t = bbar_2
    EXPECT_TRUE(substitute(p2, {{var_x(1), F->inverse(bs[1])}}).is_zero());
  }
}

TEST(Fgl, DifferenceIsUnitMultiple) {
  for (const auto& F : all_laws()) {
    const Series q = exact_divide(F->sum(x(1), F->inverse(x(2))), x(1) - x(2));
    EXPECT_EQ(q.constant_term(), 1) << F->name();
  }
}
