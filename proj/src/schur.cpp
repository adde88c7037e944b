#include "fglschur/schur.hpp"

#include <algorithm>
#include <numeric>

#include "fglschur/error.hpp"
#include "fglschur/solver.hpp"

namespace fglschur {

SchurKind parse_schur_kind(const std::string& name) {
  if (name == "P") return SchurKind::P;
  if (name == "Q") return SchurKind::Q;
  if (name == "s") return SchurKind::S;
  if (name == "s-double") return SchurKind::SDouble;
  throw ConfigurationError("unknown function family: " + name);
}

std::string schur_kind_name(SchurKind k) {
  switch (k) {
    case SchurKind::P:
      return "P";
    case SchurKind::Q:
      return "Q";
    case SchurKind::S:
      return "s";
    case SchurKind::SDouble:
      return "s-double";
  }
  return "?";
}

Variable x_var(int i) { return var_x(i); }

Series bbar(const FormalGroupLaw& fgl, int i, Truncation t) { return fgl.inverse(Series::variable(var_b(i), t)); }

// ---------------------------------------------------------------------------
// Classical Schur polynomials

namespace {

void fill_ssyt(const Partition& mu, int n, std::vector<std::vector<int>>& tab, int row, int col,
               std::vector<int>& content, std::map<std::vector<int>, long>& out) {
  if (row == mu.length()) {
    ++out[content];
    return;
  }
  int next_row = row, next_col = col + 1;
  if (next_col == mu[row]) {
    ++next_row;
    next_col = 0;
  }
  int lo = 1;
  if (col > 0) lo = std::max(lo, tab[row][col - 1]);
  if (row > 0) lo = std::max(lo, tab[row - 1][col] + 1);
  for (int v = lo; v <= n; ++v) {
    tab[row][col] = v;
    ++content[v - 1];
    fill_ssyt(mu, n, tab, next_row, next_col, content, out);
    --content[v - 1];
  }
}

const std::map<std::vector<int>, long>& schur_contents(const Partition& mu, int n) {
  static std::mutex mu_lock;
  static std::map<std::pair<std::vector<int>, int>, std::map<std::vector<int>, long>> cache;
  std::lock_guard<std::mutex> lock(mu_lock);
  auto key = std::make_pair(mu.parts(), n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::map<std::vector<int>, long> out;
  if (mu.length() <= n) {
    if (mu.empty()) {
      out[std::vector<int>(n, 0)] = 1;
    } else {
      std::vector<std::vector<int>> tab(mu.length());
      for (int r = 0; r < mu.length(); ++r) tab[r].assign(mu[r], 0);
      std::vector<int> content(n, 0);
      fill_ssyt(mu, n, tab, 0, 0, content, out);
    }
  }
  return cache.emplace(key, std::move(out)).first->second;
}

Monomial x_monomial(const std::vector<int>& exps) {
  std::vector<std::pair<Variable, int>> ps;
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i]) ps.emplace_back(var_x(static_cast<int>(i) + 1), exps[i]);
  return Monomial::from_pairs(ps);
}

}  // namespace

Series classical_schur(const Partition& mu, int n, Truncation t) {
  std::vector<Term> terms;
  for (const auto& [content, count] : schur_contents(mu, n)) terms.push_back({x_monomial(content), Rational(count)});
  return Series::from_terms(std::move(terms), t);
}

Series antisymmetrize_over_vandermonde(const Series& numerator, int n, Truncation out) {
  // Coefficient of each strictly decreasing exponent alpha in sum_w sgn(w) w(N).
  std::map<std::vector<int>, TermAccumulator> by_alpha;
  std::vector<int> e(n);
  for (const auto& term : numerator.terms()) {
    auto [xs, rest] = term.monomial.split([](Variable v) { return v.family == Family::X; });
    std::fill(e.begin(), e.end(), 0);
    for (const auto& [v, k] : xs.pairs()) {
      if (v.index < 1 || v.index > n) throw ConfigurationError("antisymmetrize: unexpected variable " + v.name());
      e[v.index - 1] = k;
    }
    int inversions = 0;
    bool repeated = false;
    for (int i = 0; i < n && !repeated; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (e[i] == e[j]) {
          repeated = true;
          break;
        }
        if (e[i] < e[j]) ++inversions;
      }
    if (repeated) continue;
    std::vector<int> alpha = e;
    std::sort(alpha.begin(), alpha.end(), std::greater<>());
    by_alpha[alpha].add(rest, (inversions % 2) ? Rational(-term.coeff) : term.coeff);
  }
  TermAccumulator acc;
  for (auto& [alpha, coeffs] : by_alpha) {
    std::vector<int> mu(n);
    for (int i = 0; i < n; ++i) mu[i] = alpha[i] - (n - 1 - i);
    const Partition shape(mu);
    const Series c = std::move(coeffs).finish(Truncation{out.cutoff, out.grading});
    if (c.is_zero()) continue;
    const int xdeg = shape.size();
    for (const auto& [content, count] : schur_contents(shape, n)) {
      const Monomial xm = x_monomial(content);
      for (const auto& ct : c.terms()) {
        if (ct.monomial.degree(out.grading) + xdeg > out.cutoff) continue;
        acc.add_product(xm * ct.monomial, ct.coeff, Rational(count));
      }
    }
  }
  return std::move(acc).finish(out);
}

// ---------------------------------------------------------------------------
// Engine

namespace {

Series rename_scratch(const Series& s, int i, int j) {
  return s.renamed([i, j](Variable v) {
    if (v.family == Family::X && (v.index == kScratchU || v.index == kScratchT)) return var_x(i);
    if (v.family == Family::X && v.index == kScratchV) return var_x(j);
    return v;
  });
}

long factorial_of(int k) {
  long f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// Running product where every factor is known to its valuation plus p.
class RelativeProduct {
 public:
  RelativeProduct(int p, Grading g) : p_(p), g_(g), value_(Series::constant(1, Truncation{p, g})) {}
  void multiply(const Series& factor, int valuation) {
    val_ += valuation;
    value_ = multiply_to(value_, factor, Truncation{val_ + p_, g_});
  }
  const Series& value() const { return value_; }
  int valuation() const { return val_; }

 private:
  int p_;
  Grading g_;
  int val_ = 0;
  Series value_;
};

}  // namespace

std::pair<Series, Series> SchurEngine::pair_factors(int p, Grading g) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = pair_cache_.find({p, g.mask()});
    if (it != pair_cache_.end()) return it->second;
  }
  const Truncation t1{p + 1, g};
  const Series u = Series::variable(scratch_u(), t1);
  const Series v = Series::variable(scratch_v(), t1);
  Series sum = fgl_->sum(u, v);
  Series diff = fgl_->sum(u, fgl_->inverse(v));
  Series unit = exact_divide(diff, u - v);
  const Series& c0 = unit;
  if (c0.constant_term() != 1) throw DivisibilityError("u +_F vbar is not (u - v) times a unit");
  auto value = std::make_pair(std::move(sum), invert_unit(unit));
  std::lock_guard<std::mutex> lock(mu_);
  return pair_cache_.emplace(std::make_tuple(p, g.mask()), std::move(value)).first->second;
}

Series SchurEngine::power(Variable var, int k, bool doubled, bool factorial, int p, Grading g) const {
  const Truncation t1{p + 1, g};
  const Series x = Series::variable(var, t1);
  RelativeProduct prod(p, g);
  if (k == 0) return Series::constant(1, Truncation{p, g});
  int plain = k;
  if (doubled) {
    prod.multiply(fgl_->sum(x, x), 1);
    plain = k - 1;
  }
  for (int i = 1; i <= plain; ++i) {
    if (factorial)
      prod.multiply(fgl_->sum(x, Series::variable(var_b(i), t1)), 1);
    else
      prod.multiply(x, 1);
  }
  return prod.value();
}

Series SchurEngine::pair_product(int n, bool diagonal, Truncation t) const {
  Series out = Series::constant(1, t);
  for (int i = 1; i <= n; ++i)
    for (int j = diagonal ? i : i + 1; j <= n; ++j)
      out = mul_truncated(out, fgl_->sum(Series::variable(var_x(i), t), Series::variable(var_x(j), t)));
  return out;
}

Series SchurEngine::compute(SchurKind kind, const Partition& lambda, int n, bool factorial, Truncation t) const {
  const int r = lambda.length();
  if (r > n) throw ConfigurationError("partition " + lambda.label() + " is longer than n = " + std::to_string(n));
  if (n < 1) throw ConfigurationError("need at least one variable");
  if ((kind == SchurKind::P || kind == SchurKind::Q) && !lambda.is_strict())
    throw ConfigurationError("P and Q need a strict partition, got " + lambda.label());
  const Grading g = t.grading;
  const int v = n * (n - 1) / 2;
  const int p = t.cutoff - lambda.size();
  if (p < 0) return Series(t);

  RelativeProduct num(p, g);
  const auto [pair_sum, unit_inv] = pair_factors(p, g);
  if (kind == SchurKind::P || kind == SchurKind::Q) {
    const bool doubled = kind == SchurKind::Q;
    for (int i = 1; i <= r; ++i)
      num.multiply(rename_scratch(power(var_t(), lambda[i - 1], doubled, factorial, p, g), i, i), lambda[i - 1]);
    for (int i = 1; i <= r; ++i)
      for (int j = i + 1; j <= n; ++j) {
        num.multiply(rename_scratch(pair_sum, i, j), 1);
        num.multiply(rename_scratch(unit_inv, i, j), 0);
      }
    for (int i = r + 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        const Truncation tx{p + 1, g};
        num.multiply(Series::variable(var_x(i), tx) - Series::variable(var_x(j), tx), 1);
      }
  } else {
    for (int i = 1; i <= n; ++i) {
      const int k = lambda[i - 1] + n - i;
      Series pw;
      if (kind == SchurKind::S) {
        pw = rename_scratch(power(var_t(), k, false, factorial, p, g), i, i);
      } else {
        const Truncation t1{p + 1, g};
        const Series x = Series::variable(var_x(i), t1);
        RelativeProduct prod(p, g);
        for (int m = 1; m <= k; ++m) prod.multiply(fgl_->sum(x, Series::variable(var_b(n + 1 - m), t1)), 1);
        pw = prod.value();
      }
      num.multiply(pw, k);
    }
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) num.multiply(rename_scratch(unit_inv, i, j), 0);
  }
  if (num.valuation() != lambda.size() + v) throw SolverError("numerator valuation bookkeeping is inconsistent");
  Series out = antisymmetrize_over_vandermonde(num.value(), n, t);
  if (kind == SchurKind::P || kind == SchurKind::Q) {
    const long nf = factorial_of(n - r);
    const bool integral = out.is_integral();
    out *= Rational(1, nf);
    if (integral && !out.is_integral())
      throw DivisibilityError("the symmetrized sum is not divisible by (n - r)! = " + std::to_string(nf));
  }
  return out;
}

Series SchurEngine::function(SchurKind kind, const Partition& lambda, int n, bool factorial, Truncation t) const {
  if (kind == SchurKind::SDouble) factorial = true;
  const Key key{static_cast<int>(kind), lambda.parts(), n, factorial, t.cutoff, t.grading.mask()};
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  Series value = compute(kind, lambda, n, factorial, t);
  std::lock_guard<std::mutex> lock(mu_);
  return cache_.emplace(key, std::move(value)).first->second;
}

Series SchurEngine::P(const Partition& lambda, int n, bool factorial, Truncation t) const {
  return function(SchurKind::P, lambda, n, factorial, t);
}
Series SchurEngine::Q(const Partition& lambda, int n, bool factorial, Truncation t) const {
  return function(SchurKind::Q, lambda, n, factorial, t);
}
Series SchurEngine::s(const Partition& lambda, int n, bool factorial, Truncation t) const {
  return function(SchurKind::S, lambda, n, factorial, t);
}
Series SchurEngine::s_double(const Partition& lambda, int n, Truncation t) const {
  return function(SchurKind::SDouble, lambda, n, true, t);
}

// ---------------------------------------------------------------------------
// Supersymmetry and expansions

SupersymmetryResult is_supersymmetric(const Series& f, int n, const FormalGroupLaw& fgl, bool plus) {
  const Truncation t = f.truncation();
  for (const auto& term : f.terms())
    for (const auto& [v, e] : term.monomial.pairs())
      if (v.family == Family::X && (v.index < 1 || v.index > n))
        return {false, "series involves " + v.name() + " outside x1..x" + std::to_string(n)};
  for (int i = 1; i < n; ++i) {
    const Series swapped = f.renamed([i](Variable v) {
      if (v == var_x(i)) return var_x(i + 1);
      if (v == var_x(i + 1)) return var_x(i);
      return v;
    });
    if (auto w = first_difference(f, swapped))
      return {false, "not symmetric under x" + std::to_string(i) + "<->x" + std::to_string(i + 1) + ": " +
                         w->to_string()};
  }
  if (n < 2) return {false, "the cancellation test needs n >= 2"};
  const Series tt = Series::variable(var_t(), t);
  const Series sub = substitute(f, {{var_x(1), tt}, {var_x(2), fgl.inverse(tt)}});
  for (const auto& term : sub.terms())
    if (term.monomial.exponent(var_t()) != 0)
      return {false, "f(t, tbar, ...) depends on t: " + term.monomial.to_string() + " has coefficient " +
                         term.coeff.get_str()};
  if (plus) {
    const Series diff = substitute(f, {{var_x(1), tt}}) - substitute(f, {{var_x(1), Series(t)}});
    Series q;
    try {
      q = exact_divide(diff, fgl.sum(tt, tt));
    } catch (const DivisibilityError& e) {
      return {false, std::string("f(t,...) - f(0,...) is not divisible by t +_F t: ") + e.what()};
    }
    if (f.is_integral() && !q.is_integral()) {
      for (const auto& term : q.terms())
        if (term.coeff.get_den() != 1)
          return {false, "quotient by t +_F t is not integral: " + term.monomial.to_string() + " has coefficient " +
                             term.coeff.get_str()};
    }
  }
  return {true, "ok"};
}

BasisExpansion expand_in_basis(const SchurEngine& engine, const Series& f, SchurKind basis, int n, bool factorial) {
  if (basis != SchurKind::P && basis != SchurKind::Q) throw ConfigurationError("expand_in_basis: basis must be P or Q");
  const Truncation t = f.truncation();
  const auto lambdas = strict_partitions_up_to(t.cutoff, n);
  std::vector<Series> elems;
  elems.reserve(lambdas.size());
  for (const auto& l : lambdas) elems.push_back(engine.function(basis, l, n, factorial, t));
  SolveOptions opts;
  opts.is_basis_variable = [](Variable v) { return v.family == Family::X; };
  const auto leads = leading_terms(elems, opts);
  auto coeffs = triangular_solve(f, elems, leads, opts);
  BasisExpansion out;
  for (std::size_t k = 0; k < lambdas.size(); ++k) out.emplace(lambdas[k], std::move(coeffs[k]));
  return out;
}

Series evaluate_at(const Series& f, const std::vector<Series>& values) {
  std::vector<std::pair<Variable, Series>> bind;
  for (std::size_t i = 0; i < values.size(); ++i) bind.emplace_back(var_x(static_cast<int>(i) + 1), values[i]);
  return substitute(f, bind);
}

// ---------------------------------------------------------------------------
// Vanishing

Series evaluate_vanishing(const SchurEngine& engine, const Partition& lambda, const Partition& mu, SchurKind which,
                          Truncation t) {
  const FormalGroupLaw& fgl = *engine.fgl();
  std::vector<int> idx;
  int n = 0;
  if (which == SchurKind::Q) {
    idx = mu.parts();
    n = std::max({lambda.length(), mu.length(), 1});
  } else if (which == SchurKind::P) {
    for (int m : mu.parts()) idx.push_back(m + 1);
    if (mu.length() % 2 == 1) idx.push_back(1);
    n = std::max({static_cast<int>(idx.size()), lambda.length(), 2});
    if (n % 2) ++n;
  } else {
    throw ConfigurationError("evaluate_vanishing: which must be P or Q");
  }
  std::vector<Series> values;
  for (int i = 0; i < n; ++i)
    values.push_back(i < static_cast<int>(idx.size()) ? bbar(fgl, idx[i], t) : Series(t));
  return evaluate_at(engine.function(which, lambda, n, true, t), values);
}

Series vanishing_diagonal(const FormalGroupLaw& fgl, const Partition& lambda, SchurKind which, Truncation t,
                          bool literal) {
  auto b = [&](int i) { return Series::variable(var_b(i), t); };
  auto bb = [&](int i) { return bbar(fgl, i, t); };
  Series out = Series::constant(1, t);
  if (which == SchurKind::Q) {
    const int r = lambda.length();
    for (int i = 1; i <= r; ++i) {
      const int li = lambda[i - 1];
      for (int j = 1; j <= li - 1; ++j) {
        bool skip = false;
        for (int q = i + 1; q <= r; ++q) skip = skip || j == lambda[q - 1];
        if (!skip) out = mul_truncated(out, fgl.sum(bb(li), b(j)));
      }
      for (int j = i; j <= r; ++j) out = mul_truncated(out, fgl.sum(bb(li), bb(lambda[j - 1])));
    }
    return out;
  }
  if (which != SchurKind::P) throw ConfigurationError("vanishing_diagonal: which must be P or Q");
  std::vector<int> parts = lambda.parts();
  if (!literal && parts.size() % 2 == 1) parts.push_back(0);
  const int r = static_cast<int>(parts.size());
  for (int i = 1; i <= r; ++i) {
    const int li = parts[i - 1];
    for (int j = 1; j <= li; ++j) {
      bool skip = false;
      for (int q = i + 1; q <= r; ++q) skip = skip || j == parts[q - 1] + 1;
      if (!skip) out = mul_truncated(out, fgl.sum(bb(li + 1), b(j)));
    }
    for (int j = i + 1; j <= r; ++j) out = mul_truncated(out, fgl.sum(bb(li + 1), bb(parts[j - 1] + 1)));
  }
  return out;
}

Series evaluate_vanishing_double(const SchurEngine& engine, const Partition& lambda, const Partition& mu, int n,
                                 Truncation t) {
  if (n < std::max(lambda.length(), mu.length())) throw ConfigurationError("evaluate_vanishing_double: n too small");
  std::vector<Series> values;
  for (int i = 1; i <= n; ++i) values.push_back(bbar(*engine.fgl(), i - mu[i - 1], t));
  return evaluate_at(engine.s_double(lambda, n, t), values);
}

Series vanishing_diagonal_double(const FormalGroupLaw& fgl, const Partition& lambda, Truncation t) {
  const Partition conj = lambda.conjugate();
  Series out = Series::constant(1, t);
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda[i - 1]; ++j)
      out = mul_truncated(out, fgl.sum(bbar(fgl, i - lambda[i - 1], t),
                                       Series::variable(var_b(conj[j - 1] - j + 1), t)));
  return out;
}

}  // namespace fglschur
