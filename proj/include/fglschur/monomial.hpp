#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "fglschur/variable.hpp"

namespace fglschur {

/// Exponent vector stored sparsely as packed (variable code, exponent) words
/// sorted by variable code. Exponents are positive and below 1024.
class Monomial {
 public:
  using Storage = boost::container::small_vector<std::uint32_t, 8>;
  static constexpr int kExpBits = 10;
  static constexpr std::uint32_t kExpMask = (1u << kExpBits) - 1;

  Monomial() = default;
  explicit Monomial(Variable v, int exponent = 1);

  /// Builds from arbitrary (variable, exponent) pairs; merges duplicates.
  static Monomial from_pairs(const std::vector<std::pair<Variable, int>>& pairs);

  bool is_one() const { return words_.empty(); }
  std::size_t size() const { return words_.size(); }

  Variable variable_at(std::size_t k) const { return Variable::from_code(words_[k] >> kExpBits); }
  int exponent_at(std::size_t k) const { return static_cast<int>(words_[k] & kExpMask); }
  int exponent(Variable v) const;

  int degree(Grading g) const;
  int total_degree() const { return degree(Grading::xyb()); }
  int family_degree(Family f) const;
  int coeff_weight() const;

  std::vector<std::pair<Variable, int>> pairs() const;

  Monomial operator*(const Monomial& other) const;
  /// True when every exponent of `d` is at most the matching exponent here.
  bool divisible_by(const Monomial& d) const;
  /// Requires divisible_by(d).
  Monomial divide(const Monomial& d) const;

  /// Splits into (part over variables selected by `pred`, remaining part).
  template <class Pred>
  std::pair<Monomial, Monomial> split(Pred pred) const {
    Monomial in, out;
    for (auto w : words_) {
      if (pred(Variable::from_code(w >> kExpBits)))
        in.words_.push_back(w);
      else
        out.words_.push_back(w);
    }
    return {std::move(in), std::move(out)};
  }

  /// Applies an injective renaming of variables.
  template <class Fn>
  Monomial renamed(Fn fn) const {
    std::vector<std::pair<Variable, int>> ps;
    ps.reserve(words_.size());
    for (std::size_t k = 0; k < words_.size(); ++k) ps.emplace_back(fn(variable_at(k)), exponent_at(k));
    return from_pairs(ps);
  }

  std::string to_string() const;

  bool operator==(const Monomial& o) const { return words_ == o.words_; }
  std::size_t hash() const;

  const Storage& words() const { return words_; }

 private:
  Storage words_;
};

/// Canonical term order: total geometric degree ascending, then
/// lexicographically larger monomials first (x1 before x2).
bool grlex_less(const Monomial& a, const Monomial& b);

/// Pure lexicographic order over all variables, Coeff included.
bool lex_less(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace fglschur
