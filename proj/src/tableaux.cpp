#include "fglschur/tableaux.hpp"

#include <set>

#include "fglschur/error.hpp"
#include "fglschur/solver.hpp"

namespace fglschur {

std::string ShiftedTableau::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) out += " / ";
    for (std::size_t c = 0; c < rows[r].size(); ++c) out += (c ? " " : "") + rows[r][c].to_string();
  }
  return out;
}

namespace {

struct ShiftedFill {
  const Partition& shape;
  int max_rank;
  bool primed_rows_only;
  ShiftedTableau cur;
  std::vector<ShiftedTableau>* out;

  void run(int r, int k) {
    if (r == shape.length()) {
      out->push_back(cur);
      return;
    }
    if (k == shape[r]) {
      run(r + 1, 0);
      return;
    }
    // column of cell k in row r is r + k; the cell above is index k+1 of row r-1
    int lo = 1;
    if (k > 0) lo = std::max(lo, cur.rows[r][k - 1].rank());
    if (r > 0) lo = std::max(lo, cur.rows[r - 1][k + 1].rank());
    for (int rank = lo; rank <= max_rank; ++rank) {
      const Letter l{(rank + 1) / 2, rank % 2 == 1};
      if (primed_rows_only && k == 0 && !l.primed) continue;
      cur.rows[r][k] = l;
      run(r, k + 1);
    }
  }
};

struct PlaneFill {
  const Partition& shape;
  int max_value;
  PlanePartition cur;
  std::vector<PlanePartition>* out;

  void run(int r, int c) {
    if (r == shape.length()) {
      out->push_back(cur);
      return;
    }
    if (c == shape[r]) {
      run(r + 1, 0);
      return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, cur.rows[r][c - 1]);
    if (r > 0) lo = std::max(lo, cur.rows[r - 1][c]);
    for (int v = lo; v <= max_value; ++v) {
      cur.rows[r][c] = v;
      run(r, c + 1);
    }
  }
};

Series weight_sum(const std::vector<Monomial>& ms, Truncation t) {
  TermAccumulator acc;
  for (const auto& m : ms) acc.add(m, 1);
  return std::move(acc).finish(t);
}

}  // namespace

std::vector<ShiftedTableau> enumerate_tableaux(const Partition& lambda, int max_letter, bool primed_rows_only) {
  if (!lambda.is_strict()) throw ConfigurationError("shifted tableaux need a strict shape, got " + lambda.label());
  if (max_letter < 1) throw ConfigurationError("max_letter must be at least 1");
  std::vector<ShiftedTableau> out;
  ShiftedFill fill{lambda, 2 * max_letter, primed_rows_only, {lambda, {}}, &out};
  for (int p : lambda.parts()) fill.cur.rows.emplace_back(p);
  fill.run(0, 0);
  return out;
}

Monomial tableau_weight(const ShiftedTableau& t) {
  std::set<std::pair<int, int>> columns, rows;  // (value, column) and (value, row)
  for (std::size_t r = 0; r < t.rows.size(); ++r)
    for (std::size_t k = 0; k < t.rows[r].size(); ++k) {
      const Letter& l = t.rows[r][k];
      if (l.primed) rows.emplace(l.value, static_cast<int>(r));
      else columns.emplace(l.value, static_cast<int>(r + k));
    }
  std::vector<std::pair<Variable, int>> ps;
  for (const auto& c : columns) ps.emplace_back(var_y(c.first), 1);
  for (const auto& r : rows) ps.emplace_back(var_y(r.first), 1);
  return Monomial::from_pairs(ps);
}

Series gp_poly(const Partition& lambda, int n_y, Truncation t) {
  std::vector<Monomial> ms;
  for (const auto& tab : enumerate_tableaux(lambda, n_y, true)) ms.push_back(tableau_weight(tab));
  return weight_sum(ms, t);
}

Series gq_poly(const Partition& lambda, int n_y, Truncation t) {
  std::vector<Monomial> ms;
  for (const auto& tab : enumerate_tableaux(lambda, n_y, false)) ms.push_back(tableau_weight(tab));
  return weight_sum(ms, t);
}

std::vector<PlanePartition> enumerate_plane_partitions(const Partition& lambda, int max_value) {
  if (max_value < 1) throw ConfigurationError("max_value must be at least 1");
  std::vector<PlanePartition> out;
  PlaneFill fill{lambda, max_value, {lambda, {}}, &out};
  for (int p : lambda.parts()) fill.cur.rows.emplace_back(p);
  fill.run(0, 0);
  return out;
}

Monomial plane_partition_weight(const PlanePartition& p) {
  std::set<std::pair<int, int>> columns;
  for (const auto& row : p.rows)
    for (std::size_t c = 0; c < row.size(); ++c) columns.emplace(row[c], static_cast<int>(c));
  std::vector<std::pair<Variable, int>> ps;
  for (const auto& c : columns) ps.emplace_back(var_y(c.first), 1);
  return Monomial::from_pairs(ps);
}

Series dual_grothendieck(const Partition& lambda, int n_y, Truncation t) {
  std::vector<Monomial> ms;
  for (const auto& p : enumerate_plane_partitions(lambda, n_y)) ms.push_back(plane_partition_weight(p));
  return weight_sum(ms, t);
}

Series hook_sum(int k, int n_y, Truncation t) {
  if (k < 1) throw ConfigurationError("hook sums start at k = 1");
  Series out(t);
  for (int a = 1; a <= k; ++a) out += dual_grothendieck(hook(a, k), n_y, t);
  return out;
}

BasisExpansion expand_in_dual_grothendieck(const Series& f, int max_size, int n_y) {
  const Truncation t{max_size, Grading::xyb()};
  for (const auto& term : f.terms())
    if (term.monomial.total_degree() > max_size)
      throw ConfigurationError("g-expansion: input has degree above " + std::to_string(max_size));
  // g_mu = s_mu + lower degree terms, so peel off top degrees first
  Series r = Series::from_terms(f.terms(), t);
  SolveOptions opts;
  opts.is_basis_variable = [](Variable v) { return v.family == Family::Y; };
  BasisExpansion out;
  for (int d = max_size; d >= 0; --d) {
    const Series top = r.homogeneous_part(d);
    if (top.is_zero()) continue;
    const auto mus = partitions_of(d, n_y);
    std::vector<Series> schur;
    for (const auto& mu : mus)
      schur.push_back(classical_schur(mu, n_y, t).renamed([](Variable v) {
        return v.family == Family::X ? var_y(v.index) : v;
      }));
    const auto coeffs = triangular_solve(top, schur, leading_terms(schur, opts), opts);
    for (std::size_t k = 0; k < mus.size(); ++k) {
      if (coeffs[k].is_zero()) continue;
      r -= multiply_to(coeffs[k], dual_grothendieck(mus[k], n_y, t), t);
      out.emplace(mus[k], coeffs[k]);
    }
  }
  if (!r.is_zero()) throw NotInSpanError("g-expansion left residual " + r.to_string());
  return out;
}

}  // namespace fglschur
