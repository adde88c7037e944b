#pragma once

#include <compare>
#include <string>
#include <vector>

namespace fglschur {

/// Weakly decreasing sequence of positive integers. Strict partitions are the
/// same type with is_strict() true.
class Partition {
 public:
  Partition() = default;
  /// Validates weak decrease; trailing zeros are dropped.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }
  /// Part i (0-based); zero past the end.
  int operator[](int i) const { return i < length() ? parts_[i] : 0; }
  bool is_strict() const;

  Partition conjugate() const;
  /// True when every part of `lambda` fits inside this partition.
  bool contains(const Partition& lambda) const;

  /// "3,1"; the empty partition prints as "0".
  std::string to_string() const;
  /// "(3,1)"; the empty partition prints as "()".
  std::string label() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

using StrictPartition = Partition;

/// Parses "3,1" ("" or "0" is empty). Throws ConfigurationError on bad
/// syntax, increasing parts, or a non-strict partition when strict is set.
Partition parse_partition(const std::string& text, bool strict);

std::vector<Partition> partitions_of(int n, int max_length = -1);
std::vector<Partition> strict_partitions_of(int n, int max_length = -1);
/// All partitions with size <= max_size, ordered by (size, reverse lex).
std::vector<Partition> partitions_up_to(int max_size, int max_length = -1);
std::vector<Partition> strict_partitions_up_to(int max_size, int max_length = -1);

/// rho_n = (n, n-1, ..., 1).
Partition staircase(int n);
/// Partwise sum, padding the shorter with zeros.
Partition add_parts(const Partition& a, const Partition& b);

/// The hook (a, 1^(k-a)).
Partition hook(int a, int k);

}  // namespace fglschur
