#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "fglschur/fgl.hpp"
#include "fglschur/partition.hpp"
#include "fglschur/series.hpp"

namespace fglschur {

enum class SchurKind { P, Q, S, SDouble };

SchurKind parse_schur_kind(const std::string& name);
std::string schur_kind_name(SchurKind k);

using BasisExpansion = std::map<Partition, Series>;

/// Computes the factorial Schur functions P, Q and s over a formal group law,
/// with the parameters b_1, b_2, ... (or zero when not factorial).
///
/// Every function is produced as sum_w w(N)/w(V) with V the Vandermonde
/// product; the antisymmetrized numerator is expanded on bialternants, so the
/// division by V is exact by construction. Results are memoized per engine.
class SchurEngine {
 public:
  explicit SchurEngine(FglPtr fgl) : fgl_(std::move(fgl)) {}

  const FglPtr& fgl() const { return fgl_; }

  Series P(const Partition& lambda, int n, bool factorial, Truncation t) const;
  Series Q(const Partition& lambda, int n, bool factorial, Truncation t) const;
  /// The type A function with [x|b]^(lambda + rho_(n-1)) in the numerator.
  Series s(const Partition& lambda, int n, bool factorial, Truncation t) const;
  /// The type A function with descending parameters b_n, b_(n-1), ...
  Series s_double(const Partition& lambda, int n, Truncation t) const;
  Series function(SchurKind kind, const Partition& lambda, int n, bool factorial, Truncation t) const;

  /// [t|b]^k (doubled: [[t|b]]^k) in the variable `var`, to relative precision p.
  Series power(Variable var, int k, bool doubled, bool factorial, int p, Grading g) const;
  /// prod_(i<j) (x_i +_F x_j), or i<=j when `diagonal` is set.
  Series pair_product(int n, bool diagonal, Truncation t) const;

 private:
  FglPtr fgl_;

  using Key = std::tuple<int, std::vector<int>, int, bool, int, std::uint8_t>;
  mutable std::mutex mu_;
  mutable std::map<Key, Series> cache_;
  mutable std::map<std::tuple<int, std::uint8_t>, std::pair<Series, Series>> pair_cache_;

  Series compute(SchurKind kind, const Partition& lambda, int n, bool factorial, Truncation t) const;
  // (u +_F v at cutoff p+1, ((u +_F vbar)/(u - v))^(-1) at cutoff p)
  std::pair<Series, Series> pair_factors(int p, Grading g) const;
};

/// Divides the antisymmetrization of N in x_1..x_n by the Vandermonde
/// product. N must be exact to out.cutoff + n(n-1)/2.
Series antisymmetrize_over_vandermonde(const Series& numerator, int n, Truncation out);

/// Classical Schur polynomial s_mu(x_1..x_n), from semistandard tableaux.
Series classical_schur(const Partition& mu, int n, Truncation t);

struct SupersymmetryResult {
  bool pass = false;
  std::string detail;
};

/// Symmetry under adjacent swaps, t-freeness of f(t, tbar, x_3, ...), and for
/// `plus` divisibility of f(t, x_2, ...) - f(0, x_2, ...) by t +_F t with an
/// integral quotient (divisibility over the rationals alone is automatic).
SupersymmetryResult is_supersymmetric(const Series& f, int n, const FormalGroupLaw& fgl, bool plus);

/// Coefficients c_lambda free of x with f = sum c_lambda basis_lambda(x_1..x_n).
BasisExpansion expand_in_basis(const SchurEngine& engine, const Series& f, SchurKind basis, int n, bool factorial);

/// x_i ranges over variables x_1..x_n; b-variables start at b_1.
Variable x_var(int i);

/// f(x_1..x_n) with x_i replaced by values[i-1].
Series evaluate_at(const Series& f, const std::vector<Series>& values);

/// The formal inverse of b_i.
Series bbar(const FormalGroupLaw& fgl, int i, Truncation t);

/// Q_lambda at x = bbar_mu, or P_lambda at x = bbar_sh(mu), padded with
/// zeros to an even number of variables in the P case.
Series evaluate_vanishing(const SchurEngine& engine, const Partition& lambda, const Partition& mu, SchurKind which,
                          Truncation t);

/// The closed product for the diagonal value of evaluate_vanishing(lambda,
/// lambda). `literal` reads the P formula with r = length(lambda); otherwise
/// r is the number of substituted variables, i.e. lambda gets a zero part when
/// its length is odd.
Series vanishing_diagonal(const FormalGroupLaw& fgl, const Partition& lambda, SchurKind which, Truncation t,
                          bool literal = false);

/// s_double(lambda) at x_i = bbar_(i - mu_i), i = 1..n.
Series evaluate_vanishing_double(const SchurEngine& engine, const Partition& lambda, const Partition& mu, int n,
                                 Truncation t);
/// prod over cells (i,j) of lambda of bbar_(i - lambda_i) +_F b_(lambda'_j - j + 1).
Series vanishing_diagonal_double(const FormalGroupLaw& fgl, const Partition& lambda, Truncation t);

}  // namespace fglschur
