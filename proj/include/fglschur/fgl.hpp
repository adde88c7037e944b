#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "fglschur/series.hpp"

namespace fglschur {

enum class FglKind { Additive, Multiplicative, Universal };

/// A one-dimensional commutative formal group law F(u,v).
///
/// Additive: u+v. Multiplicative: u+v+beta*u*v with beta rational or the
/// symbolic Coeff variable beta. Universal: exp(log u + log v) with
/// log t = t + sum m_k t^(k+1) over the Coeff variables m_k.
class FormalGroupLaw {
 public:
  static std::shared_ptr<const FormalGroupLaw> additive();
  /// nullopt selects a symbolic beta.
  static std::shared_ptr<const FormalGroupLaw> multiplicative(std::optional<Rational> beta = std::nullopt);
  static std::shared_ptr<const FormalGroupLaw> universal();

  FglKind kind() const { return kind_; }
  bool symbolic_beta() const { return kind_ == FglKind::Multiplicative && !beta_; }
  std::string name() const;

  /// beta as a series (rational constant or the Coeff variable).
  Series beta(Truncation t) const;

  /// u +_F v. Both arguments need zero constant part.
  Series sum(const Series& u, const Series& v) const;
  /// The formal inverse: sum(u, inverse(u)) = 0.
  Series inverse(const Series& u) const;
  /// a_{i,j}, a polynomial in the Coeff variables, at truncation t.
  Series coefficient(int i, int j, Truncation t) const;

  /// [t|b]^k = prod_{i<=k} (t +_F b_i); doubled gives (t +_F t)[t|b]^(k-1).
  Series factorial_power(const Series& t, const std::vector<Series>& b, int k, bool doubled) const;

  /// F(u,v) in the scratch variables u, v up to total degree `cutoff`.
  Series law(int cutoff) const;
  /// chi(t) in the scratch variable t up to `cutoff`.
  Series inverse_series(int cutoff) const;

  FormalGroupLaw(FglKind kind, std::optional<Rational> beta) : kind_(kind), beta_(std::move(beta)) {}

 private:
  FglKind kind_;
  std::optional<Rational> beta_;

  mutable std::mutex mu_;
  mutable std::map<int, Series> law_cache_;
  mutable std::map<int, Series> inverse_cache_;

  Series compute_law(int cutoff) const;
  Series compute_inverse(int cutoff) const;
};

using FglPtr = std::shared_ptr<const FormalGroupLaw>;

/// Parses "additive", "k-theory" or "universal"; beta_text is "symbolic" or a
/// rational and only applies to k-theory.
FglPtr make_fgl(const std::string& kind, const std::string& beta_text = "symbolic");

Variable scratch_u();
Variable scratch_v();

}  // namespace fglschur
