#include "fglschur/series.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "fglschur/error.hpp"
#include "fglschur/solver.hpp"

namespace fglschur {

void check_cutoff(int cutoff, bool allow_large) {
  if (cutoff < 0) throw ConfigurationError("cutoff must be nonnegative");
  if (cutoff > kMaxCutoff && !allow_large)
    throw ConfigurationError("cutoff " + std::to_string(cutoff) + " exceeds " + std::to_string(kMaxCutoff) +
                             "; pass --allow-large to override");
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------------------
// TermAccumulator

void TermAccumulator::add(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, fresh] = map_.try_emplace(m, c);
  if (!fresh) it->second += c;
}

void TermAccumulator::add(Monomial&& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, fresh] = map_.try_emplace(std::move(m), c);
  if (!fresh) it->second += c;
}

void TermAccumulator::add_product(const Monomial& m, const Rational& a, const Rational& b) {
  tmp_ = a * b;
  add(m, tmp_);
}

void TermAccumulator::add_series(const Series& s, const Rational& scale) {
  for (const auto& t : s.terms()) add_product(t.monomial, t.coeff, scale);
}

Series TermAccumulator::finish(Truncation t) && {
  Series s(t);
  s.terms_.reserve(map_.size());
  for (auto& [m, c] : map_) {
    if (sgn(c) == 0 || m.degree(t.grading) > t.cutoff) continue;
    s.terms_.push_back({m, std::move(c)});
  }
  map_.clear();
  std::sort(s.terms_.begin(), s.terms_.end(),
            [](const Term& a, const Term& b) { return grlex_less(a.monomial, b.monomial); });
  return s;
}

// ---------------------------------------------------------------------------
// Series basics

Series Series::constant(const Rational& c, Truncation t) { return monomial(Monomial{}, c, t); }

Series Series::variable(Variable v, Truncation t) { return monomial(Monomial(v), 1, t); }

Series Series::monomial(const Monomial& m, const Rational& c, Truncation t) {
  Series s(t);
  if (sgn(c) != 0 && m.degree(t.grading) <= t.cutoff) s.terms_.push_back({m, c});
  return s;
}

Series Series::from_terms(std::vector<Term> terms, Truncation t) {
  TermAccumulator acc;
  for (auto& term : terms) acc.add(std::move(term.monomial), term.coeff);
  return std::move(acc).finish(t);
}

Rational Series::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& a, const Monomial& b) { return grlex_less(a.monomial, b); });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return 0;
}

int Series::valuation() const {
  int v = kInfiniteValuation;
  for (const auto& t : terms_) v = std::min(v, t.monomial.degree(trunc_.grading));
  return v;
}

int Series::max_degree() const {
  int v = -1;
  for (const auto& t : terms_) v = std::max(v, t.monomial.degree(trunc_.grading));
  return v;
}

Series Series::homogeneous_part(int degree) const {
  Series s(trunc_);
  for (const auto& t : terms_)
    if (t.monomial.degree(trunc_.grading) == degree) s.terms_.push_back(t);
  return s;
}

Series Series::truncated(int cutoff) const {
  if (cutoff > trunc_.cutoff) throw ConfigurationError("cannot raise the cutoff of a series by truncation");
  return with_truncation(trunc_.with_cutoff(cutoff));
}

Series Series::with_truncation(Truncation t) const {
  Series s(t);
  s.terms_.reserve(terms_.size());
  for (const auto& term : terms_)
    if (term.monomial.degree(t.grading) <= t.cutoff) s.terms_.push_back(term);
  return s;
}

bool Series::depends_on(Variable v) const {
  for (const auto& t : terms_)
    if (t.monomial.exponent(v) != 0) return true;
  return false;
}

bool Series::depends_on(Family f) const {
  for (const auto& t : terms_)
    if (t.monomial.family_degree(f) != 0) return true;
  return false;
}

bool Series::is_integral() const {
  for (const auto& t : terms_)
    if (t.coeff.get_den() != 1) return false;
  return true;
}

Series Series::filtered(const std::function<bool(const Monomial&)>& pred) const {
  Series s(trunc_);
  for (const auto& t : terms_)
    if (pred(t.monomial)) s.terms_.push_back(t);
  return s;
}

Series Series::renamed(const std::function<Variable(Variable)>& fn) const {
  TermAccumulator acc;
  for (const auto& t : terms_) acc.add(t.monomial.renamed(fn), t.coeff);
  return std::move(acc).finish(trunc_);
}

Series Series::operator-() const {
  Series s = *this;
  for (auto& t : s.terms_) t.coeff = -t.coeff;
  return s;
}

namespace {

void require_same(const Truncation& a, const Truncation& b, const char* op) {
  if (!(a == b))
    throw ConfigurationError(std::string(op) + ": truncation mismatch (" + std::to_string(a.cutoff) + "/" +
                             a.grading.name() + " vs " + std::to_string(b.cutoff) + "/" + b.grading.name() + ")");
}

// Merge of two sorted term lists with a sign on the second.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool negate) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grlex_less(a[i].monomial, b[j].monomial))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || grlex_less(b[j].monomial, a[i].monomial)) {
      out.push_back({b[j].monomial, negate ? Rational(-b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      Rational c = negate ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (sgn(c) != 0) out.push_back({a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Series& Series::operator+=(const Series& o) {
  require_same(trunc_, o.trunc_, "add");
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

Series& Series::operator-=(const Series& o) {
  require_same(trunc_, o.trunc_, "sub");
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

Series& Series::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Series operator*(const Series& a, const Series& b) { return mul_truncated(a, b); }

bool Series::operator==(const Series& o) const {
  if (!(trunc_ == o.trunc_) || terms_.size() != o.terms_.size()) return false;
  for (std::size_t k = 0; k < terms_.size(); ++k)
    if (!(terms_[k].monomial == o.terms_[k].monomial) || terms_[k].coeff != o.terms_[k].coeff) return false;
  return true;
}

std::string Series::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    const bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) s += '-';
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    if (t.monomial.is_one()) {
      s += c.get_str();
    } else if (c == 1) {
      s += t.monomial.to_string();
    } else {
      s += c.get_str() + "*" + t.monomial.to_string();
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Arithmetic

Series add(const Series& a, const Series& b) { return a + b; }

Series mul_truncated(const Series& a, const Series& b) {
  require_same(a.truncation(), b.truncation(), "mul");
  return multiply_to(a, b, a.truncation());
}

Series multiply_to(const Series& a, const Series& b, Truncation t) {
  if (!(a.grading() == t.grading) || !(b.grading() == t.grading))
    throw ConfigurationError("multiply: grading mismatch");
  if (a.is_zero() || b.is_zero()) return Series(t);
  std::vector<std::pair<int, const Term*>> bs;
  bs.reserve(b.size());
  for (const auto& term : b.terms()) bs.emplace_back(term.monomial.degree(t.grading), &term);
  std::stable_sort(bs.begin(), bs.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  TermAccumulator acc;
  for (const auto& ta : a.terms()) {
    const int room = t.cutoff - ta.monomial.degree(t.grading);
    for (const auto& [db, tb] : bs) {
      if (db > room) break;
      acc.add_product(ta.monomial * tb->monomial, ta.coeff, tb->coeff);
    }
  }
  return std::move(acc).finish(t);
}

Series power(const Series& a, int k) {
  if (k < 0) throw ConfigurationError("negative power");
  Series result = Series::constant(1, a.truncation());
  Series base = a;
  while (k > 0) {
    if (k & 1) result = mul_truncated(result, base);
    k >>= 1;
    if (k) base = mul_truncated(base, base);
  }
  return result;
}

Series mul_tracked(const Series& a, const Series& b) {
  if (!(a.grading() == b.grading())) throw ConfigurationError("multiply: grading mismatch");
  long ca = a.cutoff(), cb = b.cutoff();
  if (!b.is_zero()) ca += b.valuation();
  else ca = kInfiniteValuation;
  if (!a.is_zero()) cb += a.valuation();
  else cb = kInfiniteValuation;
  long c = std::min(ca, cb);
  if (c >= kInfiniteValuation) c = std::min(a.cutoff(), b.cutoff());
  return multiply_to(a, b, Truncation{static_cast<int>(c), a.grading()});
}

Series add_tracked(const Series& a, const Series& b) {
  const int c = std::min(a.cutoff(), b.cutoff());
  return a.truncated(c) + b.truncated(c);
}

Series substitute(const Series& f, const std::vector<std::pair<Variable, Series>>& bindings) {
  const Truncation t = f.truncation();
  std::unordered_map<std::uint32_t, std::size_t> slot;
  std::vector<Series> values;
  for (const auto& [v, value] : bindings) {
    if (!(value.grading() == t.grading)) throw ConfigurationError("substitute: grading mismatch for " + v.name());
    if (value.cutoff() < t.cutoff) throw ConfigurationError("substitute: value for " + v.name() + " is too coarse");
    if (slot.count(v.code())) throw ConfigurationError("substitute: " + v.name() + " bound twice");
    Series vt = value.truncated(t.cutoff);
    if (t.grading.counts(v.family) && vt.valuation() == 0 && f.depends_on(v))
      throw DivergenceError("substitute: value for graded variable " + v.name() + " has a nonzero constant part");
    slot[v.code()] = values.size();
    values.push_back(std::move(vt));
  }
  std::vector<std::vector<Series>> powers(values.size());
  auto power_of = [&](std::size_t k, int e) -> const Series& {
    auto& ps = powers[k];
    if (ps.empty()) ps.push_back(Series::constant(1, t));
    while (static_cast<int>(ps.size()) <= e) ps.push_back(mul_truncated(ps.back(), values[k]));
    return ps[e];
  };
  std::unordered_map<Monomial, Series, MonomialHash> bound_cache;
  TermAccumulator acc;
  for (const auto& term : f.terms()) {
    auto [bound, free] = term.monomial.split([&](Variable v) { return slot.count(v.code()) != 0; });
    if (bound.is_one()) {
      acc.add(term.monomial, term.coeff);
      continue;
    }
    auto it = bound_cache.find(bound);
    if (it == bound_cache.end()) {
      Series prod = Series::constant(1, t);
      for (const auto& [v, e] : bound.pairs()) prod = mul_truncated(prod, power_of(slot[v.code()], e));
      it = bound_cache.emplace(bound, std::move(prod)).first;
    }
    const int room = t.cutoff - free.degree(t.grading);
    for (const auto& pt : it->second.terms()) {
      if (pt.monomial.degree(t.grading) > room) continue;
      acc.add_product(pt.monomial * free, pt.coeff, term.coeff);
    }
  }
  return std::move(acc).finish(t);
}

Series invert_unit(const Series& f) {
  const Truncation t = f.truncation();
  const Series f0 = f.homogeneous_part(0);
  if (f0.size() != 1 || !f0.terms()[0].monomial.is_one())
    throw NotInvertibleError("invert_unit: degree zero part is not a nonzero rational constant: " + f0.to_string());
  const Rational c0 = f0.terms()[0].coeff;
  Series g = Series::constant(1 / c0, t.with_cutoff(0));
  int prec = 0;
  while (prec < t.cutoff) {
    prec = std::min(2 * prec + 1, t.cutoff);
    const Truncation tt = t.with_cutoff(prec);
    g = g.with_truncation(tt);
    Series err = Series::constant(1, tt) - multiply_to(f.truncated(prec), g, tt);
    g += multiply_to(g, err, tt);
  }
  return g.with_truncation(t);
}

namespace {

struct LexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return lex_less(b, a); }
};

// Exact division of polynomials with g homogeneous: greedy reduction by the
// lex-leading term of g over all variables.
std::vector<Term> divide_polynomial(const std::vector<Term>& f, const std::vector<Term>& g) {
  const Term* lead = &g.front();
  for (const auto& t : g)
    if (lex_less(lead->monomial, t.monomial)) lead = &t;
  std::map<Monomial, Rational, LexGreater> rem;
  for (const auto& t : f) rem.emplace(t.monomial, t.coeff);
  std::vector<Term> q;
  Rational qc, tmp;
  while (!rem.empty()) {
    auto top = rem.begin();
    if (!top->first.divisible_by(lead->monomial))
      throw DivisibilityError("exact_divide: nonzero remainder at " + top->first.to_string() + " (coefficient " +
                              top->second.get_str() + ")");
    const Monomial qm = top->first.divide(lead->monomial);
    qc = top->second / lead->coeff;
    for (const auto& gt : g) {
      tmp = qc * gt.coeff;
      auto [it, fresh] = rem.try_emplace(qm * gt.monomial, 0);
      it->second -= tmp;
      if (sgn(it->second) == 0) rem.erase(it);
    }
    q.push_back({qm, qc});
  }
  return q;
}

}  // namespace

Series exact_divide(const Series& f, const Series& g) {
  if (!(f.grading() == g.grading())) throw ConfigurationError("exact_divide: grading mismatch");
  if (g.is_zero()) throw DivisibilityError("exact_divide: division by zero");
  const Grading gr = f.grading();
  const int d = g.valuation();
  const int cmin = std::min(f.cutoff(), g.cutoff());
  const int cq = cmin - d;
  if (cq < 0) throw ConfigurationError("exact_divide: divisor valuation exceeds the available precision");
  const Truncation tq{cq, gr};
  Series r = f.truncated(cmin);
  if (r.is_zero()) return Series(tq);
  if (r.valuation() < d)
    throw DivisibilityError("exact_divide: dividend has terms below the divisor's valuation");
  const Series gd = g.homogeneous_part(d);
  if (gd.size() == g.truncated(cmin).size()) {
    return Series::from_terms(divide_polynomial(r.terms(), gd.terms()), tq);
  }
  const Truncation tr{cmin, gr};
  const Series gc = g.truncated(cmin);
  TermAccumulator q;
  for (int k = 0; k <= cq && !r.is_zero(); ++k) {
    const Series rk = r.homogeneous_part(k + d);
    if (rk.is_zero()) continue;
    Series qk = Series::from_terms(divide_polynomial(rk.terms(), gd.terms()), tr);
    r -= multiply_to(qk, gc, tr);
    q.add_series(qk);
  }
  return std::move(q).finish(tq);
}

std::vector<Series> coefficient_of(const Series& f, const std::vector<Series>& basis, Variable t) {
  SolveOptions opts;
  opts.is_basis_variable = [t](Variable v) { return v == t; };
  // Elements truncated away entirely carry no information at this cutoff.
  std::vector<Series> live;
  std::vector<std::size_t> where;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    Series b = basis[k].truncated(std::min(basis[k].cutoff(), f.cutoff()));
    if (b.is_zero()) continue;
    live.push_back(std::move(b));
    where.push_back(k);
  }
  const auto leads = leading_terms(live, opts);
  auto solved = triangular_solve(f, live, leads, opts);
  std::vector<Series> out(basis.size(), Series(f.truncation().with_cutoff(0)));
  for (std::size_t k = 0; k < where.size(); ++k) out[where[k]] = std::move(solved[k]);
  return out;
}

// ---------------------------------------------------------------------------
// Comparison

std::string Witness::to_string() const {
  return monomial.to_string() + ": " + lhs.get_str() + " vs " + rhs.get_str();
}

std::optional<Witness> first_difference(const Series& a, const Series& b) {
  if (!(a.grading() == b.grading())) throw ConfigurationError("compare: grading mismatch");
  const Grading g = a.grading();
  const int c = std::min(a.cutoff(), b.cutoff());
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  std::size_t i = 0, j = 0;
  auto skip = [&](const std::vector<Term>& ts, std::size_t& k) {
    while (k < ts.size() && ts[k].monomial.degree(g) > c) ++k;
  };
  while (true) {
    skip(ta, i);
    skip(tb, j);
    if (i == ta.size() && j == tb.size()) return std::nullopt;
    if (j == tb.size() || (i < ta.size() && grlex_less(ta[i].monomial, tb[j].monomial)))
      return Witness{ta[i].monomial, ta[i].coeff, 0};
    if (i == ta.size() || grlex_less(tb[j].monomial, ta[i].monomial))
      return Witness{tb[j].monomial, 0, tb[j].coeff};
    if (ta[i].coeff != tb[j].coeff) return Witness{ta[i].monomial, ta[i].coeff, tb[j].coeff};
    ++i;
    ++j;
  }
}

}  // namespace fglschur
