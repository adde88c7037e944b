#include "fglschur/dual.hpp"

#include "fglschur/error.hpp"
#include "fglschur/solver.hpp"

namespace fglschur {

DualKind parse_dual_kind(const std::string& name) {
  if (name == "phat") return DualKind::Phat;
  if (name == "qhat") return DualKind::Qhat;
  throw ConfigurationError("unknown dual family: " + name);
}

std::string dual_kind_name(DualKind k) { return k == DualKind::Phat ? "phat" : "qhat"; }

SchurKind paired_basis(DualKind k) { return k == DualKind::Phat ? SchurKind::Q : SchurKind::P; }

Series shift_y(const Series& f, int shift) {
  return f.renamed([shift](Variable v) { return v.family == Family::Y ? var_y(v.index + shift) : v; });
}

namespace {

Series rename_t(const Series& f, Variable from, Variable to) {
  return f.renamed([from, to](Variable v) { return v == from ? to : v; });
}

Series inverse_pole(const Series& x, const Series& y) {
  const Truncation t = x.truncation();
  return invert_unit(Series::constant(1, t) - mul_truncated(x, y));
}

}  // namespace

Series kernel_one(const FormalGroupLaw& fgl, Variable t, Alphabet y, Truncation trunc) {
  const Series tt = Series::variable(t, trunc);
  const Series tbar = fgl.inverse(tt);
  const Series one = Series::constant(1, trunc);
  Series out = one;
  for (int j = 1; j <= y.n_y; ++j) {
    const Series yj = Series::variable(var_y(y.offset + j), trunc);
    out = mul_truncated(out, one - mul_truncated(tbar, yj));
    out = mul_truncated(out, inverse_pole(tt, yj));
  }
  return out;
}

Series kernel_delta(const FormalGroupLaw& fgl, int n_x, Alphabet y, Truncation trunc) {
  if (n_x < 1 || y.n_y < 1) throw ConfigurationError("kernel needs n_x, n_y >= 1");
  const Series one = kernel_one(fgl, var_t(), y, trunc);
  Series out = Series::constant(1, trunc);
  for (int i = 1; i <= n_x; ++i) out = mul_truncated(out, rename_t(one, var_t(), var_x(i)));
  return out;
}

Series kernel_type_a(const FormalGroupLaw& fgl, int n_x, Alphabet y, Truncation trunc) {
  if (n_x < 1 || y.n_y < 1) throw ConfigurationError("kernel needs n_x, n_y >= 1");
  const Series one = Series::constant(1, trunc);
  Series out = one;
  for (int i = 1; i <= n_x; ++i) {
    const Series xi = Series::variable(var_x(i), trunc);
    const Series bi = bbar(fgl, i, trunc);
    for (int j = 1; j <= y.n_y; ++j) {
      const Series yj = Series::variable(var_y(y.offset + j), trunc);
      out = mul_truncated(out, one - mul_truncated(bi, yj));
      out = mul_truncated(out, inverse_pole(xi, yj));
    }
  }
  return out;
}

std::vector<Series> onerow_duals(const SchurEngine& engine, DualKind kind, int max_k, Alphabet y, bool factorial,
                                 Truncation trunc) {
  const Series f = kernel_one(*engine.fgl(), var_t(), y, trunc);
  std::vector<Series> basis;
  // the solve needs every t-power up to the cutoff even when fewer are wanted
  for (int k = 0; k <= trunc.cutoff; ++k)
    basis.push_back(engine.power(var_t(), k, kind == DualKind::Phat, factorial, trunc.cutoff - k, trunc.grading));
  auto out = coefficient_of(f, basis, var_t());
  out.resize(std::min<std::size_t>(out.size(), max_k + 1));
  for (int k = static_cast<int>(out.size()); k <= max_k; ++k) out.push_back(Series(trunc.with_cutoff(0)));
  return out;
}

int required_nx(SchurKind basis, int cutoff) {
  int len = 0;
  while ((len + 1) * (len + 2) / 2 <= cutoff) ++len;
  len = std::max(len, 1);
  if (basis == SchurKind::P && len % 2) ++len;
  return len;
}

BasisExpansion extract_duals(const SchurEngine& engine, DualKind kind, int n_x, Alphabet y, bool factorial,
                             Truncation trunc) {
  const SchurKind basis = paired_basis(kind);
  const int need = required_nx(basis, trunc.cutoff);
  if (n_x < need)
    throw ConfigurationError("dual extraction at cutoff " + std::to_string(trunc.cutoff) + " needs n >= " +
                             std::to_string(need));
  if (basis == SchurKind::P && n_x % 2)
    throw ConfigurationError("qhat extraction pairs with P and needs an even number of x-variables");
  const Series delta = kernel_delta(*engine.fgl(), n_x, y, trunc);
  return expand_in_basis(engine, delta, basis, n_x, factorial);
}

Series resum(const SchurEngine& engine, SchurKind basis, const BasisExpansion& duals, int n_x, bool factorial,
             Truncation trunc) {
  Series out(trunc);
  for (const auto& [lambda, dual] : duals) {
    if (lambda.length() > n_x) continue;
    out += multiply_to(engine.function(basis, lambda, n_x, factorial, trunc), dual, trunc);
  }
  return out;
}

BasisExpansion shat_dual(const SchurEngine& engine, int n_x, Alphabet y, Truncation trunc) {
  const Series f = kernel_type_a(*engine.fgl(), n_x, y, trunc);
  const auto lambdas = partitions_up_to(trunc.cutoff, n_x);
  std::vector<Series> elems;
  for (const auto& l : lambdas) elems.push_back(engine.s_double(l, n_x, trunc));
  SolveOptions opts;
  opts.is_basis_variable = [](Variable v) { return v.family == Family::X; };
  const auto leads = leading_terms(elems, opts);
  auto coeffs = triangular_solve(f, elems, leads, opts);
  BasisExpansion out;
  for (std::size_t k = 0; k < lambdas.size(); ++k) out.emplace(lambdas[k], std::move(coeffs[k]));
  return out;
}

Series resum_type_a(const SchurEngine& engine, const BasisExpansion& duals, int n_x, Truncation trunc) {
  Series out(trunc);
  for (const auto& [lambda, dual] : duals) out += multiply_to(engine.s_double(lambda, n_x, trunc), dual, trunc);
  return out;
}

BasisExpansion structure_constants(const SchurEngine& engine, const Partition& lambda, const Partition& mu,
                                   SchurKind basis, int n_x, bool factorial, Truncation trunc) {
  const Series prod = mul_truncated(engine.function(basis, lambda, n_x, factorial, trunc),
                                    engine.function(basis, mu, n_x, factorial, trunc));
  return expand_in_basis(engine, prod, basis, n_x, factorial);
}

namespace {

std::vector<Series> solve_in(const Series& f, const std::vector<Series>& elems, const SolveOptions& opts) {
  const auto leads = leading_terms(elems, opts);
  return triangular_solve(f, elems, leads, opts);
}

}  // namespace

PairExpansion coproduct_basis(const SchurEngine& engine, const Partition& nu, SchurKind basis, int k, bool factorial,
                              Truncation trunc) {
  if (basis == SchurKind::P && k % 2) throw ConfigurationError("P coproducts need an even half-alphabet");
  const Series f = engine.function(basis, nu, 2 * k, factorial, trunc);
  const auto lambdas = strict_partitions_up_to(trunc.cutoff, k);
  std::vector<Series> first;
  for (const auto& l : lambdas) first.push_back(engine.function(basis, l, k, factorial, trunc));
  SolveOptions o1;
  o1.is_basis_variable = [k](Variable v) { return v.family == Family::X && v.index <= k; };
  const auto c1 = solve_in(f, first, o1);
  SolveOptions o2;
  o2.is_basis_variable = [k](Variable v) { return v.family == Family::X && v.index > k; };
  PairExpansion out;
  for (std::size_t a = 0; a < lambdas.size(); ++a) {
    if (c1[a].is_zero()) continue;
    const Truncation t2 = c1[a].truncation();
    const auto mus = strict_partitions_up_to(t2.cutoff, k);
    std::vector<Series> second;
    for (const auto& m : mus)
      second.push_back(engine.function(basis, m, k, factorial, t2).renamed([k](Variable v) {
        return v.family == Family::X ? var_x(v.index + k) : v;
      }));
    const auto c2 = solve_in(c1[a], second, o2);
    for (std::size_t b = 0; b < mus.size(); ++b)
      if (!c2[b].is_zero()) out.emplace(std::make_pair(lambdas[a], mus[b]), c2[b]);
  }
  return out;
}

PairExpansion coproduct_dual(const SchurEngine& engine, const Partition& nu, DualKind kind, int n_x, int m,
                             bool factorial, Truncation trunc) {
  const auto big = extract_duals(engine, kind, n_x, Alphabet{2 * m, 0}, factorial, trunc);
  const auto small = extract_duals(engine, kind, n_x, Alphabet{m, 0}, factorial, trunc);
  auto it = big.find(nu);
  if (it == big.end()) throw ConfigurationError("partition " + nu.label() + " is beyond the cutoff");
  std::vector<Partition> lambdas;
  std::vector<Series> first, second;
  for (const auto& [l, d] : small) {
    if (l.length() > m) continue;
    lambdas.push_back(l);
    first.push_back(d);
    second.push_back(shift_y(d, m));
  }
  SolveOptions o1;
  o1.weighted = true;
  o1.weight_cutoff = trunc.cutoff;
  o1.is_basis_variable = [m](Variable v) { return v.family == Family::Y && v.index <= m; };
  const auto l1 = leading_terms(first, o1);
  const auto c1 = triangular_solve(it->second, first, l1, o1);
  SolveOptions o2 = o1;
  o2.is_basis_variable = [m](Variable v) { return v.family == Family::Y && v.index > m; };
  const auto l2 = leading_terms(second, o2);
  PairExpansion out;
  for (std::size_t a = 0; a < lambdas.size(); ++a) {
    if (c1[a].is_zero()) continue;
    o2.weight_cutoff = trunc.cutoff - l1[a].order;
    const auto c2 = triangular_solve(c1[a], second, l2, o2);
    for (std::size_t b = 0; b < lambdas.size(); ++b)
      if (!c2[b].is_zero()) out.emplace(std::make_pair(lambdas[a], lambdas[b]), c2[b]);
  }
  return out;
}

}  // namespace fglschur
