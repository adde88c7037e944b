#include <gtest/gtest.h>

#include "fglschur/dual.hpp"
#include "fglschur/tableaux.hpp"
#include "oracles/classical.hpp"

using namespace fglschur;

namespace {

const Truncation T8{8, Grading::xyb()};

Series y(int i) { return Series::variable(var_y(i), T8); }
Series sq(const Series& s) { return mul_truncated(s, s); }

Series swap_y(const Series& f, int i) {
  return f.renamed([i](Variable v) {
    if (v.family == Family::Y && v.index == i) return var_y(i + 1);
    if (v.family == Family::Y && v.index == i + 1) return var_y(i);
    return v;
  });
}

}  // namespace

TEST(Tableaux, Enumeration) {
  EXPECT_EQ(enumerate_tableaux(Partition{1}, 2, false).size(), 4u);
  EXPECT_EQ(enumerate_tableaux(Partition{1}, 2, true).size(), 2u);
  const auto two = enumerate_tableaux(Partition{2}, 1, true);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].to_string(), "1' 1'");
  EXPECT_EQ(two[1].to_string(), "1' 1");
}

TEST(Tableaux, Weights) {
  const auto two = enumerate_tableaux(Partition{2}, 1, true);
  EXPECT_EQ(tableau_weight(two[0]).to_string(), "y1");
  EXPECT_EQ(tableau_weight(two[1]).to_string(), "y1^2");
  const auto cell = enumerate_tableaux(Partition{1}, 2, false);
  EXPECT_EQ(tableau_weight(cell[2]).to_string(), "y2");  // 2'
}

TEST(Tableaux, SmallPolynomials) {
  EXPECT_EQ(gp_poly(Partition{2}, 1, T8), y(1) + sq(y(1)));
  EXPECT_EQ(gq_poly(Partition{2}, 1, T8), y(1) + sq(y(1)) * 2);
  EXPECT_EQ(gp_poly(Partition{1}, 3, T8), y(1) + y(2) + y(3));
  EXPECT_EQ(gq_poly(Partition{1}, 3, T8), (y(1) + y(2) + y(3)) * 2);
  EXPECT_EQ(dual_grothendieck(Partition{1}, 3, T8), y(1) + y(2) + y(3));
  EXPECT_EQ(dual_grothendieck(Partition{2}, 1, T8), sq(y(1)));
  EXPECT_EQ(dual_grothendieck(Partition{1, 1}, 1, T8), y(1));
}

TEST(Tableaux, Symmetry) {
  for (const auto& l : strict_partitions_up_to(4))
    for (int i = 1; i <= 2; ++i) {
      const Series p = gp_poly(l, 3, T8), q = gq_poly(l, 3, T8);
      EXPECT_EQ(swap_y(p, i), p) << l.label();
      EXPECT_EQ(swap_y(q, i), q) << l.label();
    }
}

TEST(Tableaux, TopComponentIsClassical) {
  // degree |lambda| is the top degree of gp/gq; there they are P/Q
  for (const auto& l : strict_partitions_up_to(3)) {
    const int ny = 3;
    const Series p = gp_poly(l, ny, T8), q = gq_poly(l, ny, T8);
    EXPECT_EQ(p.max_degree(), l.size()) << l.label();
    EXPECT_EQ(p.homogeneous_part(l.size()), oracle::to_series(oracle::classical_P(l, ny), T8, 'y')) << l.label();
    EXPECT_EQ(q.homogeneous_part(l.size()), oracle::to_series(oracle::classical_Q(l, ny), T8, 'y')) << l.label();
  }
}

TEST(Tableaux, Stability) {
  for (const auto& l : strict_partitions_up_to(3)) {
    const Series big = gp_poly(l, 3, T8);
    EXPECT_EQ(substitute(big, {{var_y(3), Series(T8)}}), gp_poly(l, 2, T8)) << l.label();
  }
}

TEST(Tableaux, HookSum) {
  EXPECT_EQ(hook_sum(1, 3, T8), gp_poly(Partition{1}, 3, T8));
  EXPECT_EQ(hook_sum(2, 1, T8), y(1) + sq(y(1)));
  for (int k = 1; k <= 5; ++k) EXPECT_EQ(gp_poly(Partition{k}, 4, T8), hook_sum(k, 4, T8)) << k;
}

TEST(Tableaux, OneRowTheorem) {
  // gp_k = phatK_k at beta = -1, b = 0
  SchurEngine e(make_fgl("k-theory", "-1"));
  const Truncation tx{6, Grading::x_only()};
  const auto ph = onerow_duals(e, DualKind::Phat, 4, Alphabet{4, 0}, false, tx);
  for (int k = 1; k <= 4; ++k) {
    const Series gp = Series::from_terms(gp_poly(Partition{k}, 4, T8).terms(), tx);
    EXPECT_TRUE(agree(ph[k], gp)) << k;
  }
}

TEST(Tableaux, GExpansion) {
  const auto e = expand_in_dual_grothendieck(gp_poly(Partition{3}, 3, T8), 3, 3);
  ASSERT_EQ(e.size(), 3u);
  for (const auto& mu : {Partition{3}, Partition{2, 1}, Partition{1, 1, 1}})
    EXPECT_EQ(e.at(mu).to_string(), "1") << mu.label();
  const auto st = expand_in_dual_grothendieck(gp_poly(Partition{2, 1}, 3, T8), 3, 3);
  ASSERT_EQ(st.size(), 1u);
  EXPECT_EQ(st.begin()->first, (Partition{2, 1}));
}
