#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fglschur/dual.hpp"

namespace fglschur {

/// C: generators s_0, s_1, ...; D: letter 0 stands for the extra generator
/// s_1hat = s_0 s_1 s_0; A: generators s_i for every integer i.
enum class RootSystem { C, D, A };

enum class Direction { Down, Fixed, Up };
std::string direction_name(Direction d);

struct WeylStep {
  Partition result;
  Direction direction;
};

/// Action of s_i on strict partitions. Type C treats lambda as the set of its
/// parts: s_0 toggles 1, s_i (i >= 1) exchanges i and i+1. Type D uses the
/// set {lambda_j + 1}, with 1 added when the length is odd; s_1hat toggles
/// the pair {1, 2} when both or neither are present.
WeylStep weyl_action_sp(RootSystem type, int i, const Partition& lambda);

/// Action of s_i on partitions with at most n rows, through the set
/// {j - lambda_j : j = 1..n}: s_i exchanges i and i+1. Adding a box of
/// content c is s_(-c).
WeylStep weyl_action_partition(int i, const Partition& lambda, int n);

/// A word raising the empty partition to lambda, one letter per box, applied
/// left to right. The letters come from peeling lambda down, always taking
/// the smallest (or largest) available descent.
std::vector<int> raising_word(RootSystem type, const Partition& lambda, bool smallest, int n = 0);
std::string word_to_string(RootSystem type, const std::vector<int>& word);

/// Simple reflections and divided differences acting on series in b and
/// beta. With an alphabet the operators act on representatives g of
/// g/Delta(x;y) (type A: g/Delta^A with n_a x-variables), where s_i also
/// moves the kernel and contributes a correction factor.
class DividedDifference {
 public:
  DividedDifference(FglPtr fgl, RootSystem type, std::optional<Alphabet> y = std::nullopt, int n_a = 0);

  Series reflect(int i, const Series& f) const;
  /// e(alpha_i): b_1 +_F b_1 for C at i = 0, b_1 +_F b_2 for D at i = 0,
  /// b_(i+1) +_F bbar_i otherwise. Type A reads its parameters in descending
  /// order, so there the root is b_i +_F bbar_(i+1).
  Series root(int i, Truncation t) const;
  /// e(-alpha_i) = s_i(e(alpha_i)).
  Series negative_root(int i, Truncation t) const;

  /// (s_i f - f) / e(alpha_i); DivisibilityError when the difference is not
  /// divisible.
  Series psi(int i, const Series& f) const;
  /// -s_i psi_i.
  Series hat_psi(int i, const Series& f) const;
  /// (s_i f - f) / e(-alpha_i), the generalized-cohomology form.
  Series hat_psi_alt(int i, const Series& f) const;
  /// hat_psi applied along `word`, first letter first.
  Series hat_psi_word(const std::vector<int>& word, const Series& f) const;

  RootSystem type() const { return type_; }
  const FglPtr& fgl() const { return fgl_; }

 private:
  FglPtr fgl_;
  RootSystem type_;
  std::optional<Alphabet> y_;
  int n_a_;

  Series substitute_b(int i, const Series& f) const;
  Series twist(int i, Truncation t) const;
};

/// Delta(bbar; y) = 1/Delta(b; y) for a b-variable.
Series kernel_at_inverse(const FormalGroupLaw& fgl, Variable b, Alphabet y, Truncation t);

}  // namespace fglschur
