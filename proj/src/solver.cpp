#include "fglschur/solver.hpp"

#include <map>
#include <optional>

#include "fglschur/error.hpp"

namespace fglschur {

int solve_order(const Monomial& m, Grading g, const SolveOptions& opts) {
  if (opts.weighted) return m.total_degree() + 2 * m.coeff_weight();
  return m.degree(g);
}

namespace {

struct Lead {
  int order;
  Monomial basis_part;
  Series coeff;  // sum of the matching terms with the basis part removed
};

// Lowest order, then highest basis degree, then lex-largest basis monomial.
std::optional<Lead> find_lead(const Series& r, const SolveOptions& opts, int limit) {
  const Grading g = r.grading();
  int best_order = 0, best_bdeg = -1;
  const Monomial* best = nullptr;
  std::vector<std::pair<Monomial, Monomial>> splits;
  splits.reserve(r.size());
  std::vector<int> orders;
  orders.reserve(r.size());
  for (const auto& t : r.terms()) {
    splits.push_back(t.monomial.split(opts.is_basis_variable));
    orders.push_back(solve_order(t.monomial, g, opts));
  }
  for (std::size_t k = 0; k < splits.size(); ++k) {
    const int o = orders[k];
    if (limit >= 0 && o > limit) continue;
    const Monomial& bp = splits[k].first;
    const int bd = bp.total_degree();
    bool better = false;
    if (!best || o < best_order) {
      better = true;
    } else if (o == best_order) {
      if (bd > best_bdeg) better = true;
      else if (bd == best_bdeg && lex_less(*best, bp)) better = true;
    }
    if (better) {
      best = &bp;
      best_order = o;
      best_bdeg = bd;
    }
  }
  if (!best) return std::nullopt;
  Lead lead{best_order, *best, Series(r.truncation())};
  std::vector<Term> rest;
  for (std::size_t k = 0; k < splits.size(); ++k)
    if (orders[k] == best_order && splits[k].first == *best) rest.push_back({splits[k].second, r.terms()[k].coeff});
  lead.coeff = Series::from_terms(std::move(rest), r.truncation());
  return lead;
}

}  // namespace

std::vector<LeadingTerm> leading_terms(const std::vector<Series>& basis, const SolveOptions& opts) {
  std::vector<LeadingTerm> out;
  std::map<std::vector<std::uint32_t>, std::size_t> seen;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    auto lead = find_lead(basis[k], opts, -1);
    if (!lead) throw SolverError("basis element " + std::to_string(k) + " is zero");
    const auto& c = lead->coeff;
    if (c.size() != 1 || !c.terms()[0].monomial.is_one())
      throw SolverError("basis element " + std::to_string(k) + " has non-constant leading coefficient " +
                        c.to_string() + " at " + lead->basis_part.to_string());
    std::vector<std::uint32_t> key(lead->basis_part.words().begin(), lead->basis_part.words().end());
    if (auto [it, fresh] = seen.emplace(key, k); !fresh)
      throw SolverError("basis elements " + std::to_string(it->second) + " and " + std::to_string(k) +
                        " share the leading monomial " + lead->basis_part.to_string());
    out.push_back({lead->basis_part, c.terms()[0].coeff, lead->order});
  }
  return out;
}

std::vector<Series> triangular_solve(const Series& f, const std::vector<Series>& basis,
                                     const std::vector<LeadingTerm>& leads, const SolveOptions& opts) {
  if (basis.size() != leads.size()) throw SolverError("basis and leading terms differ in length");
  const Truncation t = f.truncation();
  std::map<std::vector<std::uint32_t>, std::size_t> index;
  for (std::size_t k = 0; k < leads.size(); ++k) {
    if (!(basis[k].grading() == t.grading)) throw ConfigurationError("solve: basis grading mismatch");
    if (!opts.weighted && basis[k].cutoff() < t.cutoff)
      throw ConfigurationError("solve: basis element is coarser than the target");
    index.emplace(std::vector<std::uint32_t>(leads[k].monomial.words().begin(), leads[k].monomial.words().end()), k);
  }
  std::vector<TermAccumulator> acc(basis.size());
  const int limit = opts.weighted ? opts.weight_cutoff : -1;
  Series r = f;
  while (!r.is_zero()) {
    auto lead = find_lead(r, opts, limit);
    if (!lead) break;
    auto it = index.find(std::vector<std::uint32_t>(lead->basis_part.words().begin(), lead->basis_part.words().end()));
    if (it == index.end())
      throw NotInSpanError("residual leading monomial " + lead->basis_part.to_string() + " with coefficient " +
                           lead->coeff.to_string() + " matches no basis element");
    const std::size_t k = it->second;
    const int room = t.cutoff - leads[k].monomial.degree(t.grading);
    Series c = lead->coeff.with_truncation(t.with_cutoff(room));
    c *= Rational(1 / leads[k].coeff);
    r -= multiply_to(c, basis[k], t);
    acc[k].add_series(c);
  }
  std::vector<Series> out;
  out.reserve(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const int room = t.cutoff - leads[k].monomial.degree(t.grading);
    Series c = std::move(acc[k]).finish(t.with_cutoff(std::max(room, 0)));
    if (opts.weighted) {
      const int wroom = opts.weight_cutoff - leads[k].order;
      c = c.filtered([&](const Monomial& m) { return solve_order(m, t.grading, opts) <= wroom; });
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace fglschur
