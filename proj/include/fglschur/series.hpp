#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "fglschur/monomial.hpp"

namespace fglschur {

using Rational = mpq_class;

inline constexpr int kDefaultCutoff = 6;
inline constexpr int kMaxCutoff = 12;
inline constexpr int kInfiniteValuation = std::numeric_limits<int>::max();

/// Throws ConfigurationError for negative cutoffs, and for cutoffs above
/// kMaxCutoff unless `allow_large` is set.
void check_cutoff(int cutoff, bool allow_large = false);

/// Where a series is cut: terms whose graded degree exceeds `cutoff` are
/// unknown and never stored.
struct Truncation {
  int cutoff = kDefaultCutoff;
  Grading grading = Grading::xyb();

  bool operator==(const Truncation&) const = default;
  Truncation with_cutoff(int c) const { return {c, grading}; }
};

struct Term {
  Monomial monomial;
  Rational coeff;
};

/// Sparse multivariate series with exact rational coefficients, truncated by
/// graded degree. Values are immutable after construction; terms are kept in
/// grlex order with no zero coefficients.
class Series {
 public:
  Series() = default;
  explicit Series(Truncation t) : trunc_(t) {}

  static Series constant(const Rational& c, Truncation t);
  static Series variable(Variable v, Truncation t);
  static Series monomial(const Monomial& m, const Rational& c, Truncation t);
  /// Normalizes: merges duplicates, drops zeros and terms beyond the cutoff.
  static Series from_terms(std::vector<Term> terms, Truncation t);

  const Truncation& truncation() const { return trunc_; }
  int cutoff() const { return trunc_.cutoff; }
  Grading grading() const { return trunc_.grading; }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const { return coefficient(Monomial{}); }
  /// Minimal graded degree of a stored term, kInfiniteValuation for zero.
  int valuation() const;
  int max_degree() const;
  Series homogeneous_part(int degree) const;
  /// Lowers the cutoff; raising it is a ConfigurationError.
  Series truncated(int cutoff) const;
  /// Relabels the truncation, dropping terms beyond the new cutoff. Raising the
  /// cutoff asserts that the stored terms are exact up to the new cutoff.
  Series with_truncation(Truncation t) const;

  bool depends_on(Variable v) const;
  bool depends_on(Family f) const;
  bool is_integral() const;

  /// Keeps terms accepted by `pred`.
  Series filtered(const std::function<bool(const Monomial&)>& pred) const;

  /// Applies an injective renaming of variables.
  Series renamed(const std::function<Variable(Variable)>& fn) const;

  Series operator-() const;
  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(const Rational& c);

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(Series a, const Rational& c) { return a *= c; }
  friend Series operator*(const Rational& c, Series a) { return a *= c; }

  /// Identical term maps and truncation.
  bool operator==(const Series& o) const;

  std::string to_string() const;

 private:
  Truncation trunc_{};
  std::vector<Term> terms_;

  friend class TermAccumulator;
};

/// Hash-map accumulator used to build series term by term.
class TermAccumulator {
 public:
  void add(const Monomial& m, const Rational& c);
  void add(Monomial&& m, const Rational& c);
  void add_product(const Monomial& m, const Rational& a, const Rational& b);
  void add_series(const Series& s, const Rational& scale = 1);
  Series finish(Truncation t) &&;

 private:
  std::unordered_map<Monomial, Rational, MonomialHash> map_;
  Rational tmp_;
};

/// Coefficient-wise sum. Cutoff mismatch is a ConfigurationError.
Series add(const Series& a, const Series& b);
/// Product with every term beyond the shared cutoff discarded.
Series mul_truncated(const Series& a, const Series& b);
/// Product truncated at `t`, ignoring the operands' own cutoffs. The caller
/// guarantees each operand is exact to `t.cutoff - valuation(other)`.
Series multiply_to(const Series& a, const Series& b, Truncation t);
Series power(const Series& a, int k);

/// Product and sum of series with possibly different cutoffs; the result
/// carries the cutoff up to which it is actually determined.
Series mul_tracked(const Series& a, const Series& b);
Series add_tracked(const Series& a, const Series& b);

/// Simultaneous substitution of series for variables, re-truncated at the
/// cutoff of `f`. Binding a graded variable to a value with a nonzero degree
/// zero part raises DivergenceError.
Series substitute(const Series& f, const std::vector<std::pair<Variable, Series>>& bindings);

/// Multiplicative inverse of a series whose degree zero part is a nonzero
/// rational constant; NotInvertibleError otherwise.
Series invert_unit(const Series& f);

/// Quotient q with f = q*g. The quotient is known to
/// min(cutoff f, cutoff g) - valuation(g). A nonzero remainder raises
/// DivisibilityError.
Series exact_divide(const Series& f, const Series& g);

/// Unique t-free coefficients c_k with f = sum c_k basis_k, found by a
/// triangular solve on the lowest-degree, highest-t-power terms.
std::vector<Series> coefficient_of(const Series& f, const std::vector<Series>& basis, Variable t);

struct Witness {
  Monomial monomial;
  Rational lhs;
  Rational rhs;
  std::string to_string() const;
};

/// First monomial (grlex) where a and b differ, compared at the smaller cutoff.
std::optional<Witness> first_difference(const Series& a, const Series& b);
/// Equality at the smaller of the two cutoffs.
inline bool agree(const Series& a, const Series& b) { return !first_difference(a, b).has_value(); }

std::string rational_to_string(const Rational& q);

}  // namespace fglschur
