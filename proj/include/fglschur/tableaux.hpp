#pragma once

#include <string>
#include <vector>

#include "fglschur/partition.hpp"
#include "fglschur/schur.hpp"
#include "fglschur/series.hpp"

namespace fglschur {

/// A letter of the alphabet 1' < 1 < 2' < 2 < ...
struct Letter {
  int value = 1;
  bool primed = false;

  int rank() const { return 2 * value - (primed ? 1 : 0); }
  std::string to_string() const { return std::to_string(value) + (primed ? "'" : ""); }
  bool operator==(const Letter&) const = default;
};

/// Row i (0-based) occupies columns i .. i + lambda_i - 1.
struct ShiftedTableau {
  Partition shape;
  std::vector<std::vector<Letter>> rows;

  std::string to_string() const;
};

/// Every filling with values <= max_letter whose rows and columns weakly
/// increase; with primed_rows_only the leftmost cell of each row is primed.
/// Row-major lexicographic order.
std::vector<ShiftedTableau> enumerate_tableaux(const Partition& lambda, int max_letter, bool primed_rows_only);

/// prod_i y_i^(columns containing i) * prod_i y_i^(rows containing i').
Monomial tableau_weight(const ShiftedTableau& t);

/// Sum of weights over Tab'(lambda) (gp) or Tab(lambda) (gq) with letters
/// <= n_y.
Series gp_poly(const Partition& lambda, int n_y, Truncation t);
Series gq_poly(const Partition& lambda, int n_y, Truncation t);

/// Reverse plane partition: an ordinary Young diagram with weakly increasing
/// rows and columns.
struct PlanePartition {
  Partition shape;
  std::vector<std::vector<int>> rows;
};

std::vector<PlanePartition> enumerate_plane_partitions(const Partition& lambda, int max_value);
/// prod_i y_i^(columns containing i).
Monomial plane_partition_weight(const PlanePartition& p);
/// The dual stable Grothendieck polynomial g_lambda(y_1..y_(n_y)).
Series dual_grothendieck(const Partition& lambda, int n_y, Truncation t);

/// sum_(a=1..k) g_(a,1^(k-a)).
Series hook_sum(int k, int n_y, Truncation t);

/// Coefficients of f in the g-basis over partitions of size <= max_size with
/// at most n_y rows; f must be a polynomial in y_1..y_(n_y).
BasisExpansion expand_in_dual_grothendieck(const Series& f, int max_size, int n_y);

}  // namespace fglschur
