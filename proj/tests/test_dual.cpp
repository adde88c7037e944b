#include <gtest/gtest.h>

#include "fglschur/dual.hpp"
#include "fglschur/error.hpp"
#include "oracles/classical.hpp"

using namespace fglschur;

namespace {

Truncation xb(int d) { return {d, Grading::xb()}; }

std::vector<FglPtr> all_laws() { return {make_fgl("additive"), make_fgl("k-theory"), make_fgl("universal")}; }

Series yv(int i, Truncation t) { return Series::variable(var_y(i), t); }

}  // namespace

TEST(Dual, KernelAdditiveOneVariable) {
  const Truncation t{3, Grading::xyb()};
  const Series k = kernel_delta(*make_fgl("additive"), 1, Alphabet{1, 0}, t);
  EXPECT_EQ(k.to_string(), "1 + 2*x1*y1");
  const Truncation wide = xb(3);
  // (1 + x y)/(1 - x y) = 1 + 2 sum (x y)^k
  const Series kk = kernel_delta(*make_fgl("additive"), 1, Alphabet{1, 0}, wide);
  const Series xy = mul_truncated(Series::variable(var_x(1), wide), yv(1, wide));
  Series want = Series::constant(1, wide);
  for (int k = 1; k <= 3; ++k) want += power(xy, k) * 2;
  EXPECT_EQ(kk, want);
  for (const auto& F : all_laws()) EXPECT_EQ(kernel_delta(*F, 2, Alphabet{2, 0}, xb(4)).constant_term(), 1);
}

TEST(Dual, KernelMinusOneDivisibleByDoubling) {
  for (const auto& F : all_laws()) {
    const Truncation t = xb(5);
    const Series tt = Series::variable(var_t(), t);
    const Series k = kernel_one(*F, var_t(), Alphabet{2, 0}, t) - Series::constant(1, t);
    EXPECT_NO_THROW(exact_divide(k, F->sum(tt, tt))) << F->name();
  }
}

// b = 0 one-row duals against the reference formulas in a11, a12
TEST(Dual, OneRowReferenceFormulas) {
  for (const auto& F : all_laws()) {
    SCOPED_TRACE(F->name());
    SchurEngine e(F);
    const Truncation t = xb(6);
    const int ny = 3;
    const auto ph = onerow_duals(e, DualKind::Phat, 3, Alphabet{ny, 0}, false, t);
    const auto qh = onerow_duals(e, DualKind::Qhat, 3, Alphabet{ny, 0}, false, t);
    const Series a11 = F->coefficient(1, 1, t), a12 = F->coefficient(1, 2, t);
    const auto ref = oracle::reference_one_row(a11, a12, ny, t);
    EXPECT_TRUE(agree(qh[0], Series::constant(1, t)));
    EXPECT_TRUE(agree(ph[0], Series::constant(1, t)));
    EXPECT_TRUE(agree(qh[1], ref.q1));
    EXPECT_TRUE(agree(qh[2], ref.q2));
    EXPECT_TRUE(agree(qh[3], ref.q3));
    EXPECT_TRUE(agree(ph[1], ref.p1));
    EXPECT_TRUE(agree(ph[3], ref.p3));
    // p2 carries -a11 h1, like q2
    const Series h1 = oracle::to_series(oracle::complete(1, ny), t, 'y');
    EXPECT_TRUE(agree(ph[2], ref.p2 - mul_truncated(a11, h1) * 2));
    if (F->kind() != FglKind::Additive) EXPECT_FALSE(agree(ph[2], ref.p2));
  }
}

TEST(Dual, KTheoryOneRowAtBetaMinusOne) {
  SchurEngine e(make_fgl("k-theory", "-1"));
  const Truncation t = xb(6);
  const auto ph = onerow_duals(e, DualKind::Phat, 2, Alphabet{1, 0}, false, t);
  const Series y1 = yv(1, t);
  EXPECT_TRUE(agree(ph[2], y1 + mul_truncated(y1, y1)));
}

TEST(Dual, AdditiveDualsAreClassical) {
  SchurEngine e(make_fgl("additive"));
  const Truncation t = xb(4);
  const int ny = 3;
  const auto ph = extract_duals(e, DualKind::Phat, required_nx(SchurKind::Q, 4), Alphabet{ny, 0}, false, t);
  const auto qh = extract_duals(e, DualKind::Qhat, required_nx(SchurKind::P, 4), Alphabet{ny, 0}, false, t);
  for (const auto& l : strict_partitions_up_to(4, 2)) {
    EXPECT_TRUE(agree(ph.at(l), oracle::to_series(oracle::classical_P(l, ny), t, 'y'))) << l.label();
    EXPECT_TRUE(agree(qh.at(l), oracle::to_series(oracle::classical_Q(l, ny), t, 'y'))) << l.label();
  }
}

TEST(Dual, CauchyReconstruction) {
  const int D = 4;
  const Truncation t = xb(D);
  const Alphabet y{4, 0};
  for (const auto& F : all_laws()) {
    SchurEngine e(F);
    const Series kernel = kernel_delta(*F, D, y, t);
    for (DualKind kind : {DualKind::Phat, DualKind::Qhat}) {
      const auto d = extract_duals(e, kind, D, y, true, t);
      EXPECT_EQ(resum(e, paired_basis(kind), d, D, true, t), kernel) << F->name() << " " << dual_kind_name(kind);
    }
  }
}

TEST(Dual, OneRowMatchesExtraction) {
  const int D = 5;
  const Truncation t = xb(D);
  const Alphabet y{2, 0};
  for (const auto& F : all_laws()) {
    SchurEngine e(F);
    for (bool fact : {false, true}) {
      const auto ph = extract_duals(e, DualKind::Phat, required_nx(SchurKind::Q, D), y, fact, t);
      const auto one = onerow_duals(e, DualKind::Phat, D, y, fact, t);
      for (int k = 1; k <= D; ++k) EXPECT_TRUE(agree(one[k], ph.at(Partition{k}))) << F->name() << " k=" << k;
    }
    const auto qh = extract_duals(e, DualKind::Qhat, required_nx(SchurKind::P, D), y, false, t);
    const auto one = onerow_duals(e, DualKind::Qhat, D, y, false, t);
    for (int k = 1; k <= D; ++k) EXPECT_TRUE(agree(one[k], qh.at(Partition{k}))) << F->name() << " k=" << k;
  }
}

TEST(Dual, FactorialOneRowQhatZero) {
  // every [t|b]^k with k >= 1 vanishes at t = bbar_1
  for (const auto& F : all_laws()) {
    SchurEngine e(F);
    const Truncation t = xb(4);
    const Alphabet y{2, 0};
    const auto one = onerow_duals(e, DualKind::Qhat, 2, y, true, t);
    const Series want = substitute(kernel_one(*F, var_t(), y, t), {{var_t(), bbar(*F, 1, t)}});
    EXPECT_TRUE(agree(one[0], want)) << F->name();
    EXPECT_FALSE(agree(one[0], Series::constant(1, t))) << F->name();
  }
}

TEST(Dual, ShatReconstruction) {
  const int D = 4;
  const Truncation t = xb(D);
  const Alphabet y{3, 0};
  for (const auto& F : all_laws()) {
    SchurEngine e(F);
    const auto sh = shat_dual(e, D, y, t);
    EXPECT_EQ(resum_type_a(e, sh, D, t), kernel_type_a(*F, D, y, t)) << F->name();
  }
}

TEST(Dual, ProductDuality) {
  // phat_l phat_m = sum over nu of chat^{l,m}_nu phat_nu, chat from the x-side coproduct
  SchurEngine e(make_fgl("k-theory"));
  const int D = 4;
  const Truncation tx{D, Grading::xyb()}, ty = xb(D);
  const auto d = extract_duals(e, DualKind::Phat, required_nx(SchurKind::Q, D), Alphabet{2, 0}, true, ty);
  std::map<std::pair<Partition, Partition>, std::map<Partition, Series>> by_pair;
  for (const auto& nu : strict_partitions_up_to(D, 2))
    for (auto& [key, c] : coproduct_basis(e, nu, SchurKind::Q, 1, true, tx)) by_pair[key].emplace(nu, c);
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; a + b <= D; ++b) {
      const Partition l{a}, m{b};
      Series rhs(ty);
      for (const auto& [nu, c] : by_pair[{l, m}])
        rhs = add_tracked(rhs, mul_tracked(c.with_truncation({c.cutoff(), Grading::xb()}), d.at(nu)));
      EXPECT_TRUE(agree(mul_tracked(d.at(l), d.at(m)), rhs)) << a << "," << b;
    }
}

TEST(Dual, ExtractionErrors) {
  SchurEngine e(make_fgl("additive"));
  const Truncation t = xb(6);
  EXPECT_EQ(required_nx(SchurKind::Q, 6), 3);
  EXPECT_EQ(required_nx(SchurKind::P, 6), 4);
  EXPECT_THROW(extract_duals(e, DualKind::Phat, 2, Alphabet{2, 0}, false, t), ConfigurationError);
  EXPECT_THROW(extract_duals(e, DualKind::Qhat, 5, Alphabet{2, 0}, false, t), ConfigurationError);
}
