#include "fglschur/fgl.hpp"

#include "fglschur/error.hpp"

namespace fglschur {

Variable scratch_u() { return {Family::X, kScratchU}; }
Variable scratch_v() { return {Family::X, kScratchV}; }

std::shared_ptr<const FormalGroupLaw> FormalGroupLaw::additive() {
  return std::make_shared<FormalGroupLaw>(FglKind::Additive, std::nullopt);
}

std::shared_ptr<const FormalGroupLaw> FormalGroupLaw::multiplicative(std::optional<Rational> beta) {
  return std::make_shared<FormalGroupLaw>(FglKind::Multiplicative, std::move(beta));
}

std::shared_ptr<const FormalGroupLaw> FormalGroupLaw::universal() {
  return std::make_shared<FormalGroupLaw>(FglKind::Universal, std::nullopt);
}

std::string FormalGroupLaw::name() const {
  switch (kind_) {
    case FglKind::Additive:
      return "additive";
    case FglKind::Multiplicative:
      return beta_ ? "k-theory(beta=" + beta_->get_str() + ")" : "k-theory";
    case FglKind::Universal:
      return "universal";
  }
  return "?";
}

Series FormalGroupLaw::beta(Truncation t) const {
  if (kind_ != FglKind::Multiplicative) return Series(t);
  if (beta_) return Series::constant(*beta_, t);
  return Series::variable(var_beta(), t);
}

namespace {

void require_positive_valuation(const Series& s, const char* what) {
  if (!s.is_zero() && s.valuation() == 0)
    throw DivergenceError(std::string(what) + ": argument has a nonzero degree zero part");
}

// log t = t + sum_k m_k t^(k+1) in the scratch variable `var`.
Series universal_log(Variable var, Truncation t) {
  std::vector<Term> terms{{Monomial(var), 1}};
  for (int k = 1; k + 1 <= t.cutoff; ++k) terms.push_back({Monomial(var, k + 1) * Monomial(var_m(k)), 1});
  return Series::from_terms(std::move(terms), t);
}

// Compositional inverse of the universal log in the scratch variable t.
Series universal_exp(Truncation t) {
  const Variable s = var_t();
  Series e = Series::variable(s, t);
  for (int iter = 0; iter < t.cutoff; ++iter) {
    Series next = Series::variable(s, t);
    Series pw = e;
    for (int k = 1; k + 1 <= t.cutoff; ++k) {
      pw = mul_truncated(pw, e);
      next -= pw * Series::variable(var_m(k), t);
    }
    e = std::move(next);
  }
  return e;
}

}  // namespace

Series FormalGroupLaw::compute_law(int cutoff) const {
  const Truncation t{cutoff, Grading::xyb()};
  const Series u = Series::variable(scratch_u(), t);
  const Series v = Series::variable(scratch_v(), t);
  switch (kind_) {
    case FglKind::Additive:
      return u + v;
    case FglKind::Multiplicative:
      return u + v + mul_truncated(beta(t), mul_truncated(u, v));
    case FglKind::Universal: {
      const Series arg = universal_log(scratch_u(), t) + universal_log(scratch_v(), t);
      return substitute(universal_exp(t), {{var_t(), arg}});
    }
  }
  return Series(t);
}

Series FormalGroupLaw::compute_inverse(int cutoff) const {
  const Truncation t{cutoff, Grading::xyb()};
  const Series x = Series::variable(var_t(), t);
  switch (kind_) {
    case FglKind::Additive:
      return -x;
    case FglKind::Multiplicative:
      return -mul_truncated(x, invert_unit(Series::constant(1, t) + mul_truncated(beta(t), x)));
    case FglKind::Universal: {
      // log(chi(t)) = -log(t)
      const Series arg = -universal_log(var_t(), t);
      return substitute(universal_exp(t), {{var_t(), arg}});
    }
  }
  return Series(t);
}

Series FormalGroupLaw::law(int cutoff) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = law_cache_.lower_bound(cutoff);
  if (it != law_cache_.end()) return it->second.truncated(cutoff);
  return law_cache_.emplace(cutoff, compute_law(cutoff)).first->second;
}

Series FormalGroupLaw::inverse_series(int cutoff) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = inverse_cache_.lower_bound(cutoff);
  if (it != inverse_cache_.end()) return it->second.truncated(cutoff);
  return inverse_cache_.emplace(cutoff, compute_inverse(cutoff)).first->second;
}

Series FormalGroupLaw::sum(const Series& u, const Series& v) const {
  if (!(u.truncation() == v.truncation())) throw ConfigurationError("formal sum: truncation mismatch");
  require_positive_valuation(u, "formal sum");
  require_positive_valuation(v, "formal sum");
  const Truncation t = u.truncation();
  switch (kind_) {
    case FglKind::Additive:
      return u + v;
    case FglKind::Multiplicative:
      return u + v + mul_truncated(beta(t), mul_truncated(u, v));
    case FglKind::Universal:
      return substitute(law(t.cutoff).with_truncation(t), {{scratch_u(), u}, {scratch_v(), v}});
  }
  return Series(t);
}

Series FormalGroupLaw::inverse(const Series& u) const {
  require_positive_valuation(u, "formal inverse");
  const Truncation t = u.truncation();
  if (kind_ == FglKind::Additive) return -u;
  return substitute(inverse_series(t.cutoff).with_truncation(t), {{var_t(), u}});
}

Series FormalGroupLaw::coefficient(int i, int j, Truncation t) const {
  if (i < 0 || j < 0) throw ConfigurationError("coefficient index must be nonnegative");
  const Series f = law(i + j);
  std::vector<Term> out;
  for (const auto& term : f.terms()) {
    if (term.monomial.exponent(scratch_u()) != i || term.monomial.exponent(scratch_v()) != j) continue;
    auto [uv, rest] = term.monomial.split([](Variable v) { return v == scratch_u() || v == scratch_v(); });
    out.push_back({rest, term.coeff});
  }
  return Series::from_terms(std::move(out), t);
}

Series FormalGroupLaw::factorial_power(const Series& t, const std::vector<Series>& b, int k, bool doubled) const {
  if (k < 0) throw ConfigurationError("factorial power exponent must be nonnegative");
  Series out = Series::constant(1, t.truncation());
  if (k == 0) return out;
  int start = 0;
  if (doubled) {
    out = sum(t, t);
    start = 1;
  }
  const int need = doubled ? k - 1 : k;
  if (static_cast<int>(b.size()) < need) throw ConfigurationError("factorial power: not enough parameters");
  for (int i = 0; i < k - start; ++i) out = mul_truncated(out, sum(t, b[i]));
  return out;
}

FglPtr make_fgl(const std::string& kind, const std::string& beta_text) {
  if (kind == "additive") return FormalGroupLaw::additive();
  if (kind == "universal") return FormalGroupLaw::universal();
  if (kind == "k-theory" || kind == "multiplicative") {
    if (beta_text.empty() || beta_text == "symbolic" || beta_text == "beta") return FormalGroupLaw::multiplicative();
    Rational b;
    try {
      b = Rational(beta_text);
    } catch (const std::invalid_argument&) {
      throw ConfigurationError("invalid --beta value: " + beta_text);
    }
    b.canonicalize();
    return FormalGroupLaw::multiplicative(b);
  }
  throw ConfigurationError("unknown formal group law: " + kind);
}

}  // namespace fglschur
