#include <gtest/gtest.h>

#include "fglschur/error.hpp"
#include "fglschur/partition.hpp"

using namespace fglschur;

TEST(Partition, Parse) {
  EXPECT_EQ(parse_partition("3,1", true), (Partition{3, 1}));
  EXPECT_EQ(parse_partition("", false), Partition{});
  EXPECT_EQ(parse_partition("0", true), Partition{});
  EXPECT_EQ(parse_partition("2,2", false), (Partition{2, 2}));
  EXPECT_THROW(parse_partition("2,2", true), ConfigurationError);
  EXPECT_THROW(parse_partition("1,3", false), ConfigurationError);
  EXPECT_THROW(parse_partition("a", false), ConfigurationError);
  EXPECT_THROW(parse_partition("2,,1", false), ConfigurationError);
}

TEST(Partition, Labels) {
  EXPECT_EQ((Partition{3, 1}).label(), "(3,1)");
  EXPECT_EQ(Partition{}.label(), "()");
  EXPECT_EQ(Partition{}.to_string(), "0");
}

TEST(Partition, Counts) {
  // p(n) and strict partitions q(n)
  const int p[] = {1, 1, 2, 3, 5, 7, 11};
  const int q[] = {1, 1, 1, 2, 2, 3, 4};
  for (int n = 0; n <= 6; ++n) {
    EXPECT_EQ(partitions_of(n).size(), static_cast<std::size_t>(p[n]));
    EXPECT_EQ(strict_partitions_of(n).size(), static_cast<std::size_t>(q[n]));
  }
  EXPECT_EQ(strict_partitions_up_to(4).size(), 1u + 1 + 1 + 2 + 2);
  EXPECT_EQ(partitions_of(4, 2).size(), 3u);
}

TEST(Partition, Operations) {
  EXPECT_EQ((Partition{3, 1}).conjugate(), (Partition{2, 1, 1}));
  EXPECT_TRUE((Partition{3, 1}).contains(Partition{2, 1}));
  EXPECT_FALSE((Partition{3}).contains(Partition{2, 1}));
  EXPECT_EQ(staircase(3), (Partition{3, 2, 1}));
  EXPECT_EQ(add_parts(staircase(2), Partition{1}), (Partition{3, 1}));
  EXPECT_EQ(hook(2, 4), (Partition{2, 1, 1}));
  for (const auto& l : partitions_up_to(6)) EXPECT_EQ(l.conjugate().conjugate(), l);
}
