#include "fglschur/suites.hpp"

#include <atomic>
#include <map>
#include <random>
#include <thread>

#include "fglschur/dual.hpp"
#include "fglschur/error.hpp"
#include "fglschur/schur.hpp"
#include "fglschur/tableaux.hpp"
#include "fglschur/weyl.hpp"

namespace fglschur {

Json RunConfig::to_json() const {
  Json j{{"fgl", fgls}, {"beta", beta}, {"ny", n_y}, {"seed", seed}};
  if (degree) j["degree"] = *degree;
  if (n) j["n"] = *n;
  if (max_size) j["max_size"] = *max_size;
  if (factorial) j["factorial"] = *factorial ? "on" : "off";
  return j;
}

const std::vector<SuiteInfo>& suite_list() {
  static const std::vector<SuiteInfo> list = {
      {"fgl-axioms", "unit, commutativity, associativity and inverse of each formal group law; a_ij symmetry"},
      {"supersymmetry", "P and Q pass the supersymmetry test (Q with the divisibility condition); stability"},
      {"factorization", "P and Q of staircase-shifted shapes factor as pair products times s"},
      {"vanishing", "P and Q vanish at bbar_sh(mu), bbar_mu unless mu contains lambda; diagonal products"},
      {"cauchy", "kernel reconstruction from the P/qhat and Q/phat duals; kernel supersymmetry; one-row duals"},
      {"duality", "the four product/coproduct duality statements, both sides computed independently"},
      {"k-recursion", "K-theory divided differences: recursion, word formula, GQ property, type A analogue"},
      {"appendix-vanishing", "type A vanishing and diagonal products; shat kernel reconstruction"},
      {"hook-sum", "gp_k equals the sum of g over hooks of size k"},
  };
  return list;
}

std::vector<CheckResult> run_cells(const std::vector<Cell>& cells, int jobs) {
  std::vector<std::vector<CheckResult>> out(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < cells.size();) {
      try {
        out[k] = cells[k].run();
      } catch (const std::exception& e) {
        out[k] = {CheckResult::fail(cells[k].name, std::string("error: ") + e.what())};
      }
    }
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(cells.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::vector<CheckResult> flat;
  for (auto& v : out)
    for (auto& c : v) flat.push_back(std::move(c));
  return flat;
}

namespace {

const std::vector<std::string> kAllLaws = {"additive", "k-theory", "universal"};

std::vector<FglPtr> laws(const RunConfig& cfg, const std::vector<std::string>& fallback = kAllLaws) {
  std::vector<FglPtr> out;
  for (const auto& name : cfg.fgls.empty() ? fallback : cfg.fgls) out.push_back(make_fgl(name, cfg.beta));
  return out;
}

std::vector<bool> factorial_modes(const RunConfig& cfg) {
  if (cfg.factorial) return {*cfg.factorial};
  return {false, true};
}

std::string fact_tag(bool f) { return f ? "factorial" : "b=0"; }

std::vector<int> n_values(const RunConfig& cfg, std::vector<int> fallback) {
  if (cfg.n) return {*cfg.n};
  return fallback;
}

Truncation xyb(int d) { return {d, Grading::xyb()}; }
Truncation xb(int d) { return {d, Grading::xb()}; }

Series relabel(const Series& s, Grading g) { return s.with_truncation({s.cutoff(), g}); }

// Random series with zero constant term in the given variables.
Series random_series(std::mt19937_64& rng, const std::vector<Variable>& vars, Truncation t, int terms) {
  std::uniform_int_distribution<int> coeff(-3, 3), var(0, static_cast<int>(vars.size()) - 1), deg(1, 3);
  std::vector<Term> ts;
  for (int k = 0; k < terms; ++k) {
    std::vector<std::pair<Variable, int>> ps;
    const int d = deg(rng);
    for (int e = 0; e < d; ++e) ps.emplace_back(vars[var(rng)], 1);
    ts.push_back({Monomial::from_pairs(ps), coeff(rng)});
  }
  return Series::from_terms(std::move(ts), t);
}

// ---------------------------------------------------------------------------

SuiteReport fgl_axioms(const RunConfig& cfg) {
  const int D = cfg.degree.value_or(6);
  const Truncation t = xyb(D);
  std::vector<Cell> cells;
  for (const auto& F : laws(cfg)) {
    const std::string tag = F->name();
    cells.push_back({tag + " axioms", [F, t, tag, &cfg] {
                       std::vector<CheckResult> out;
                       const Series u = Series::variable(var_x(1), t), v = Series::variable(var_x(2), t),
                                    w = Series::variable(var_x(3), t), zero(t);
                       out.push_back(CheckResult::compare(tag + ": F(u,0) = u", F->sum(u, zero), u));
                       out.push_back(CheckResult::compare(tag + ": F(0,v) = v", F->sum(zero, v), v));
                       out.push_back(CheckResult::compare(tag + ": F(u,v) = F(v,u)", F->sum(u, v), F->sum(v, u)));
                       out.push_back(CheckResult::compare(tag + ": F(F(u,v),w) = F(u,F(v,w))",
                                                          F->sum(F->sum(u, v), w), F->sum(u, F->sum(v, w))));
                       out.push_back(CheckResult::compare(tag + ": u +_F ubar = 0", F->sum(u, F->inverse(u)), zero));
                       out.push_back(CheckResult::compare(tag + ": ubar bar = u", F->inverse(F->inverse(u)), u));
                       // a_ij symmetric, a_10 = 1, a_i0 = 0
                       bool sym = true, unit = true;
                       for (int i = 0; i <= t.cutoff; ++i)
                         for (int j = 0; i + j <= t.cutoff; ++j) {
                           const Series a = F->coefficient(i, j, t);
                           if (!agree(a, F->coefficient(j, i, t))) sym = false;
                           if (j == 0 && !agree(a, Series::constant(i == 1 ? 1 : 0, t))) unit = false;
                         }
                       out.push_back(sym ? CheckResult::ok(tag + ": a_ij = a_ji") : CheckResult::fail(tag + ": a_ij = a_ji", "asymmetric"));
                       out.push_back(unit ? CheckResult::ok(tag + ": a_10 = 1, a_i0 = 0")
                                          : CheckResult::fail(tag + ": a_10 = 1, a_i0 = 0", "violated"));
                       if (F->kind() != FglKind::Universal) {
                         bool ok = true;
                         for (int i = 1; i <= t.cutoff; ++i)
                           for (int j = 1; i + j <= t.cutoff; ++j) {
                             const Series want = (i == 1 && j == 1 && F->kind() == FglKind::Multiplicative)
                                                     ? F->beta(t)
                                                     : zero;
                             if (!agree(F->coefficient(i, j, t), want)) ok = false;
                           }
                         out.push_back(ok ? CheckResult::ok(tag + ": a_ij for i,j >= 1 match the closed form")
                                          : CheckResult::fail(tag + ": a_ij for i,j >= 1 match the closed form", "mismatch"));
                       }
                       // t +_F sbar = (t - s) * unit with constant term 1
                       const Series q = exact_divide(F->sum(u, F->inverse(v)), u - v);
                       out.push_back(q.constant_term() == 1
                                         ? CheckResult::ok(tag + ": u +_F vbar = (u - v) * unit")
                                         : CheckResult::fail(tag + ": u +_F vbar = (u - v) * unit",
                                                             "constant term " + q.constant_term().get_str()));
                       // [t|b]^k vanishes at t = bbar_k
                       for (int k = 1; k <= std::min(3, t.cutoff - 1); ++k) {
                         std::vector<Series> bs;
                         for (int i = 1; i <= k; ++i) bs.push_back(Series::variable(var_b(i), t));
                         const Series p = F->factorial_power(u, bs, k, false);
                         out.push_back(CheckResult::compare(tag + ": [t|b]^" + std::to_string(k) + " at t = bbar_" +
                                                                std::to_string(k),
                                                            substitute(p, {{var_x(1), bbar(*F, k, t)}}), zero));
                       }
                       // the same axioms on random arguments
                       std::mt19937_64 rng(cfg.seed);
                       const std::vector<Variable> vars = {var_x(1), var_x(2), var_b(1)};
                       for (int trial = 0; trial < 3; ++trial) {
                         const Series a = random_series(rng, vars, t, 4), b = random_series(rng, vars, t, 4),
                                      c = random_series(rng, vars, t, 4);
                         const std::string s = tag + ": random trial " + std::to_string(trial) + ": ";
                         out.push_back(CheckResult::compare(s + "commutativity", F->sum(a, b), F->sum(b, a)));
                         out.push_back(CheckResult::compare(s + "associativity", F->sum(F->sum(a, b), c),
                                                            F->sum(a, F->sum(b, c))));
                         out.push_back(CheckResult::compare(s + "inverse", F->sum(a, F->inverse(a)), zero));
                       }
                       return out;
                     }});
  }
  SuiteReport r{"fgl-axioms", cfg.to_json(), run_cells(cells, cfg.jobs), {}};
  r.config["degree"] = D;
  return r;
}

// ---------------------------------------------------------------------------

SuiteReport supersymmetry(const RunConfig& cfg) {
  const int D = cfg.degree.value_or(4), M = cfg.max_size.value_or(4);
  std::vector<Cell> cells;
  for (const auto& F : laws(cfg)) {
    auto engine = std::make_shared<SchurEngine>(F);
    for (bool fact : factorial_modes(cfg))
      for (int n : n_values(cfg, {2, 3, 4})) {
        const std::string tag = F->name() + " " + fact_tag(fact) + " n=" + std::to_string(n);
        cells.push_back({tag, [=] {
                           std::vector<CheckResult> out;
                           for (const auto& l : strict_partitions_up_to(M, n)) {
                             const Truncation t = xyb(l.size() + D);
                             const auto rp = is_supersymmetric(engine->P(l, n, fact, t), n, *F, false);
                             out.push_back(rp.pass ? CheckResult::ok(tag + ": P" + l.label() + " supersymmetric")
                                                   : CheckResult::fail(tag + ": P" + l.label() + " supersymmetric",
                                                                       rp.detail));
                             const auto rq = is_supersymmetric(engine->Q(l, n, fact, t), n, *F, true);
                             out.push_back(rq.pass ? CheckResult::ok(tag + ": Q" + l.label() + " supersymmetric (+)")
                                                   : CheckResult::fail(tag + ": Q" + l.label() + " supersymmetric (+)",
                                                                       rq.detail));
                           }
                           return out;
                         }});
      }
    // stability: P from n to n+2 and Q from n to n+1 with the new variables set to 0
    for (bool fact : factorial_modes(cfg)) {
      const std::string tag = F->name() + " " + fact_tag(fact) + " stability";
      cells.push_back({tag, [=] {
                         std::vector<CheckResult> out;
                         for (const auto& l : strict_partitions_up_to(M, 2)) {
                           const Truncation t = xyb(l.size() + D);
                           const Series p4 = engine->P(l, 4, fact, t);
                           const Series p2 = engine->P(l, 2, fact, t);
                           out.push_back(CheckResult::compare(
                               tag + ": P" + l.label() + " n=4 -> 2",
                               substitute(p4, {{var_x(3), Series(t)}, {var_x(4), Series(t)}}), p2));
                           for (int n = 2; n <= 3; ++n) {
                             if (l.length() > n) continue;
                             const Series big = engine->Q(l, n + 1, fact, t);
                             out.push_back(CheckResult::compare(
                                 tag + ": Q" + l.label() + " n=" + std::to_string(n + 1) + " -> " + std::to_string(n),
                                 substitute(big, {{var_x(n + 1), Series(t)}}), engine->Q(l, n, fact, t)));
                           }
                         }
                         return out;
                       }});
    }
  }
  SuiteReport r{"supersymmetry", cfg.to_json(), run_cells(cells, cfg.jobs), {}};
  r.config["degree"] = D;
  r.config["max_size"] = M;
  return r;
}

// ---------------------------------------------------------------------------

SuiteReport factorization(const RunConfig& cfg) {
  // the identities are homogeneous in the staircase part, so the cutoff is
  // counted above the degree of the left-hand side
  const int D = cfg.degree.value_or(4), M = cfg.max_size.value_or(2);
  std::vector<Cell> cells;
  for (const auto& F : laws(cfg)) {
    auto engine = std::make_shared<SchurEngine>(F);
    for (bool fact : factorial_modes(cfg))
      for (int n : n_values(cfg, {2, 3}))
        for (const auto& l : partitions_up_to(M, n)) {
          const std::string tag = F->name() + " " + fact_tag(fact) + " n=" + std::to_string(n) + " lambda=" + l.label();
          cells.push_back({tag, [=] {
                             std::vector<CheckResult> out;
                             const Partition pl = add_parts(staircase(n - 1), l);
                             const Truncation tp = xyb(pl.size() + D);
                             const Series lhs_p = engine->P(pl, n, fact, tp);
                             const Series rhs_p = mul_truncated(engine->pair_product(n, false, tp), engine->s(l, n, fact, tp));
                             out.push_back(CheckResult::compare(tag + ": P" + pl.label() + " = prod(i<j) * s", lhs_p, rhs_p));
                             const Partition ql = add_parts(staircase(n), l);
                             const Truncation tq = xyb(ql.size() + D);
                             const Series lhs_q = engine->Q(ql, n, fact, tq);
                             const Series rhs_q = mul_truncated(engine->pair_product(n, true, tq), engine->s(l, n, fact, tq));
                             out.push_back(CheckResult::compare(tag + ": Q" + ql.label() + " = prod(i<=j) * s", lhs_q, rhs_q));
                             return out;
                           }});
        }
  }
  SuiteReport r{"factorization", cfg.to_json(), run_cells(cells, cfg.jobs), {}};
  r.config["degree"] = D;
  r.config["max_size"] = M;
  r.notes.push_back("cutoff counted relative to the degree of the left-hand side");
  return r;
}

// ---------------------------------------------------------------------------

SuiteReport vanishing(const RunConfig& cfg) {
  const int D = cfg.degree.value_or(4), M = cfg.max_size.value_or(4), MD = std::min(M, 3);
  std::vector<Cell> cells;
  const auto sps = strict_partitions_up_to(M);
  for (const auto& F : laws(cfg)) {
    auto engine = std::make_shared<SchurEngine>(F);
    for (SchurKind which : {SchurKind::P, SchurKind::Q})
      for (const auto& l : sps) {
        const std::string tag = F->name() + " " + schur_kind_name(which) + l.label();
        cells.push_back({tag, [=] {
                           std::vector<CheckResult> out;
                           const Truncation t = xyb(l.size() + D);
                           for (const auto& mu : sps) {
                             if (mu.contains(l)) continue;
                             out.push_back(CheckResult::compare(tag + " at mu=" + mu.label() + " vanishes",
                                                                evaluate_vanishing(*engine, l, mu, which, t), Series(t)));
                           }
                           if (l.size() <= MD) {
                             out.push_back(CheckResult::compare(tag + " diagonal product",
                                                                evaluate_vanishing(*engine, l, l, which, t),
                                                                vanishing_diagonal(*F, l, which, t)));
                             if (which == SchurKind::P && l.length() % 2 == 1) {
                               const auto lit = CheckResult::compare(
                                   tag + " diagonal product, r = length(lambda) reading",
                                   evaluate_vanishing(*engine, l, l, which, t), vanishing_diagonal(*F, l, which, t, true));
                               out.push_back(CheckResult::info(lit.name, lit.pass, lit.detail));
                             }
                           }
                           return out;
                         }});
      }
  }
  SuiteReport r{"vanishing", cfg.to_json(), run_cells(cells, cfg.jobs), {}};
  r.config["degree"] = D;
  r.config["max_size"] = M;
  r.notes.push_back("P diagonal products pad lambda with a zero part when its length is odd; the unpadded reading is "
                    "listed as informational");
  return r;
}

// ---------------------------------------------------------------------------

SuiteReport cauchy(const RunConfig& cfg) {
  const int D = cfg.degree.value_or(4);
  const Truncation t = xb(D);
  const Alphabet y{cfg.n_y, 0};
  std::vector<Cell> cells;
  for (const auto& F : laws(cfg)) {
    auto engine = std::make_shared<SchurEngine>(F);
    for (bool fact : factorial_modes(cfg))
      for (DualKind kind : {DualKind::Phat, DualKind::Qhat}) {
        const SchurKind basis = paired_basis(kind);
        int nx = cfg.n.value_or(std::max(D, required_nx(basis, D)));
        if (basis == SchurKind::P && nx % 2) ++nx;
        const std::string tag = F->name() + " " + fact_tag(fact) + " " + schur_kind_name(basis) + "/" +
                                dual_kind_name(kind) + " n_x=" + std::to_string(nx);
        cells.push_back({tag, [=] {
                           std::vector<CheckResult> out;
                           const auto duals = extract_duals(*engine, kind, nx, y, fact, t);
                           const Series kernel = kernel_delta(*F, nx, y, t);
                           out.push_back(CheckResult::compare(tag + ": reconstruction residual is zero",
                                                              resum(*engine, basis, duals, nx, fact, t), kernel));
                           const auto one = onerow_duals(*engine, kind, D, y, fact, t);
                           // with b != 0 every [t|b]^k, k >= 1, vanishes at t = bbar_1, so the
                           // [t|b]-expansion has qhat_0 = Delta(bbar_1;y) and cannot match the
                           // P-coefficients; reported only
                           const bool shifted = fact && kind == DualKind::Qhat;
                           for (int k = 0; k <= D; ++k) {
                             const Partition p = k ? Partition{k} : Partition{};
                             auto c = CheckResult::compare(
                                 tag + ": one-row " + dual_kind_name(kind) + std::to_string(k) + " agrees", one[k],
                                 duals.at(p));
                             out.push_back(shifted ? CheckResult::info(c.name, c.pass, c.detail) : c);
                           }
                           if (shifted)
                             out.push_back(CheckResult::compare(
                                 tag + ": one-row qhat0 = Delta(bbar_1;y)", one[0],
                                 substitute(kernel_one(*F, var_t(), y, t), {{var_t(), bbar(*F, 1, t)}})));
                           return out;
                         }});
      }
    cells.push_back({F->name() + " kernel", [=] {
                       std::vector<CheckResult> out;
                       for (int n = 2; n <= 3; ++n) {
                         const auto r = is_supersymmetric(kernel_delta(*F, n, Alphabet{2, 0}, t), n, *F, true);
                         const std::string name = F->name() + " kernel n_x=" + std::to_string(n) + " supersymmetric (+)";
                         out.push_back(r.pass ? CheckResult::ok(name) : CheckResult::fail(name, r.detail));
                       }
                       return out;
                     }});
  }
  SuiteReport r{"cauchy", cfg.to_json(), run_cells(cells, cfg.jobs), {}};
  r.config["degree"] = D;
  return r;
}

// ---------------------------------------------------------------------------

// Sum of coeff * left(y') * right(y'') over a pair expansion with tracked precision.
Series pair_sum(const std::map<std::pair<Partition, Partition>, Series>& coeffs, const BasisExpansion& left,
                const BasisExpansion& right, Truncation t) {
  Series acc(t);
  for (const auto& [key, c] : coeffs) {
    auto a = left.find(key.first), b = right.find(key.second);
    if (a == left.end() || b == right.end()) continue;
    acc = add_tracked(acc, mul_tracked(mul_tracked(relabel(c, t.grading), a->second), b->second));
  }
  return acc;
}

SuiteReport duality(const RunConfig& cfg) {
  const int D = cfg.degree.value_or(6), M = cfg.max_size.value_or(3), m = std::max(1, cfg.n_y / 2);
  const Truncation tx = xyb(D), ty = xb(D);
  std::vector<Cell> cells;
  for (const auto& F : laws(cfg, {"additive", "k-theory"})) {
    auto engine = std::make_shared<SchurEngine>(F);
    for (bool fact : cfg.factorial ? std::vector<bool>{*cfg.factorial} : std::vector<bool>{true})
      for (DualKind kind : {DualKind::Phat, DualKind::Qhat}) {
        const SchurKind basis = paired_basis(kind);
        const int k = required_nx(basis, D);
        const std::string tag = F->name() + " " + fact_tag(fact) + " " + schur_kind_name(basis) + "/" + dual_kind_name(kind);
        const std::string st_prod = kind == DualKind::Phat ? "(1)" : "(3)";
        const std::string st_coprod = kind == DualKind::Phat ? "(2)" : "(4)";
        cells.push_back({tag, [=] {
                           std::vector<CheckResult> out;
                           const auto sps = strict_partitions_up_to(D, k);
                           const auto d1 = extract_duals(*engine, kind, k, Alphabet{m, 0}, fact, ty);
                           const auto d2 = extract_duals(*engine, kind, k, Alphabet{m, m}, fact, ty);
                           const auto dd = extract_duals(*engine, kind, k, Alphabet{2 * m, 0}, fact, ty);
                           // x-side structure constants, regrouped by nu
                           std::map<Partition, std::map<std::pair<Partition, Partition>, Series>> by_nu;
                           for (const auto& l : sps)
                             for (const auto& mu : sps)
                               for (auto& [nu, c] : structure_constants(*engine, l, mu, basis, k, fact, tx))
                                 if (!c.is_zero()) by_nu[nu].emplace(std::make_pair(l, mu), c);
                           for (const auto& nu : strict_partitions_up_to(M, k)) {
                             const Series lhs = dd.at(nu);
                             const Series rhs = pair_sum(by_nu[nu], d1, d2, ty);
                             out.push_back(CheckResult::compare(tag + " " + st_prod + ": coproduct of " +
                                                                    dual_kind_name(kind) + nu.label(),
                                                                lhs, rhs));
                           }
                           // x-side coproduct constants, regrouped by (lambda, mu)
                           std::map<std::pair<Partition, Partition>, std::map<Partition, Series>> by_pair;
                           // only lambda, mu of length <= kc enter; stability makes the smaller
                           // split give the same constants
                           int kc = 1;
                           for (const auto& l : strict_partitions_up_to(M)) kc = std::max(kc, l.length());
                           if (basis == SchurKind::P && kc % 2) ++kc;
                           for (const auto& nu : strict_partitions_up_to(D, 2 * kc))
                             for (auto& [key, c] : coproduct_basis(*engine, nu, basis, kc, fact, tx)) by_pair[key].emplace(nu, c);
                           // the expansion needs duals up to |lambda| + |mu|
                           for (const auto& l : strict_partitions_up_to(M, k))
                             for (const auto& mu : strict_partitions_up_to(M, k)) {
                               if (l.size() + mu.size() > D) continue;
                               const Series lhs = mul_tracked(d1.at(l), d1.at(mu));
                               Series rhs(ty);
                               for (const auto& [nu, c] : by_pair[{l, mu}])
                                 rhs = add_tracked(rhs, mul_tracked(relabel(c, ty.grading), d1.at(nu)));
                               out.push_back(CheckResult::compare(tag + " " + st_coprod + ": product " +
                                                                      dual_kind_name(kind) + l.label() + " * " +
                                                                      dual_kind_name(kind) + mu.label(),
                                                                  lhs, rhs));
                             }
                           return out;
                         }});
      }
    // the y-side two-stage solve agrees with the x-side constants at b = 0
    cells.push_back({F->name() + " y-side coproduct", [=] {
                       std::vector<CheckResult> out;
                       const int k = required_nx(SchurKind::Q, D);
                       for (const auto& nu : strict_partitions_up_to(M, k)) {
                         const auto cop = coproduct_dual(*engine, nu, DualKind::Phat, k, m, false, ty);
                         bool ok = true;
                         std::string detail;
                         const auto sps = strict_partitions_up_to(D, k);
                         for (const auto& l : sps)
                           for (const auto& mu : sps) {
                             const auto sc = structure_constants(*engine, l, mu, SchurKind::Q, k, false, tx);
                             auto it = sc.find(nu);
                             const Series want = it == sc.end() ? Series(tx) : it->second;
                             auto got = cop.find({l, mu});
                             const Series have = got == cop.end() ? Series(ty) : got->second;
                             // both are constants here
                             if (want.constant_term() != have.constant_term() || want.size() > 1 || have.size() > 1) {
                               ok = false;
                               detail = l.label() + mu.label() + ": " + have.to_string() + " vs " + want.to_string();
                             }
                           }
                         const std::string name = F->name() + " b=0: y-side coproduct of phat" + nu.label() +
                                                  " equals Q structure constants";
                         out.push_back(ok ? CheckResult::ok(name) : CheckResult::fail(name, detail));
                       }
                       return out;
                     }});
  }
  SuiteReport r{"duality", cfg.to_json(), run_cells(cells, cfg.jobs), {}};
  r.config["degree"] = D;
  r.config["max_size"] = M;
  r.notes.push_back("y' = y1..y" + std::to_string(m) + ", y'' = y" + std::to_string(m + 1) + "..y" +
                    std::to_string(2 * m) + "; comparisons at the precision both sides determine");
  return r;
}

// ---------------------------------------------------------------------------

SuiteReport k_recursion(const RunConfig& cfg) {
  const int D = cfg.degree.value_or(4), M = cfg.max_size.value_or(3), nx = cfg.n.value_or(4);
  const Alphabet y{cfg.n_y, 0};
  const Truncation t = xb(D);
  FglPtr K = make_fgl("k-theory", cfg.beta);
  if (!cfg.fgls.empty() && (cfg.fgls.size() != 1 || cfg.fgls[0] != "k-theory"))
    throw ConfigurationError("k-recursion runs on the k-theory law only");
  auto engine = std::make_shared<SchurEngine>(K);
  std::vector<Cell> cells;
  const auto sps = strict_partitions_up_to(M);
  cells.push_back({"recursion", [=] {
                     std::vector<CheckResult> out;
                     const auto ph = extract_duals(*engine, DualKind::Phat, required_nx(SchurKind::Q, D), y, true, t);
                     const DividedDifference dd(K, RootSystem::C, y);
                     for (const auto& l : sps)
                       for (int i = 0; i <= 3; ++i) {
                         const auto step = weyl_action_sp(RootSystem::C, i, l);
                         const Series& p = ph.at(l);
                         const Series lhs = dd.hat_psi(i, p);
                         Series rhs = step.direction == Direction::Down  ? mul_truncated(K->beta(p.truncation()), p)
                                      : step.direction == Direction::Fixed ? Series(lhs.truncation())
                                                                          : ph.at(step.result);
                         out.push_back(CheckResult::compare("hat psi_" + std::to_string(i) + " phat" + l.label() + " (" +
                                                                direction_name(step.direction) + ")",
                                                            lhs, rhs));
                         out.push_back(CheckResult::compare("hat psi_" + std::to_string(i) + " phat" + l.label() +
                                                                ": -s psi = (s f - f)/e(-alpha)",
                                                            lhs, dd.hat_psi_alt(i, p)));
                       }
                     for (const auto& l : sps) {
                       const auto w1 = raising_word(RootSystem::C, l, true), w2 = raising_word(RootSystem::C, l, false);
                       const Series one = Series::constant(1, t);
                       const Series g1 = dd.hat_psi_word(w1, one);
                       out.push_back(CheckResult::compare("word [" + word_to_string(RootSystem::C, w1) + "] gives phat" +
                                                              l.label(),
                                                          g1, ph.at(l)));
                       if (w1 != w2)
                         out.push_back(CheckResult::compare("words [" + word_to_string(RootSystem::C, w1) + "] and [" +
                                                                word_to_string(RootSystem::C, w2) + "] agree",
                                                            g1, dd.hat_psi_word(w2, one)));
                     }
                     return out;
                   }});
  cells.push_back({"GQ property", [=] {
                     std::vector<CheckResult> out;
                     const DividedDifference dc(K, RootSystem::C);
                     for (const auto& l : sps)
                       for (int i = 0; i <= 3; ++i) {
                         const Truncation tq = xb(l.size() + D);
                         const auto step = weyl_action_sp(RootSystem::C, i, l);
                         const Series f = engine->Q(l, nx, true, tq);
                         Series sf;
                         if (i == 0) {
                           // s_0 also inserts b_1 as an extra x-variable
                           const Series big = engine->Q(l, nx + 1, true, tq);
                           sf = substitute(big, {{var_x(nx + 1), Series::variable(var_b(1), tq)}, {var_b(1), bbar(*K, 1, tq)}});
                         } else {
                           sf = dc.reflect(i, f);
                         }
                         const Series lhs = exact_divide(sf - f, dc.root(i, tq));
                         const Series rhs = step.direction == Direction::Down
                                                ? engine->Q(step.result, nx, true, tq) + mul_truncated(K->beta(tq), f)
                                                : Series(tq);
                         out.push_back(CheckResult::compare("psi_" + std::to_string(i) + " Q" + l.label() + " (" +
                                                                direction_name(step.direction) + ")",
                                                            lhs, rhs));
                       }
                     return out;
                   }});
  cells.push_back({"operator identities", [=] {
                     std::vector<CheckResult> out;
                     std::mt19937_64 rng(cfg.seed);
                     const Truncation tb = xb(D);
                     const std::vector<Variable> bvars = {var_b(1), var_b(2), var_b(3), var_b(4), var_beta()};
                     const DividedDifference dc(K, RootSystem::C), dt(K, RootSystem::C, y);
                     auto word = [](const DividedDifference& d, std::vector<int> w, int reps, Series f) {
                       for (int r = 0; r < reps; ++r)
                         for (int i : w) f = d.reflect(i, f);
                       return f;
                     };
                     for (int trial = 0; trial < 2; ++trial) {
                       const Series f = Series::constant(1, tb) + random_series(rng, bvars, tb, 5);
                       const Series g = random_series(rng, bvars, tb, 5);
                       const std::string s = "random trial " + std::to_string(trial) + ": ";
                       out.push_back(CheckResult::compare(s + "(s0 s1)^4 = 1", word(dc, {0, 1}, 4, f), f));
                       out.push_back(CheckResult::compare(s + "(s1 s2)^3 = 1", word(dc, {1, 2}, 3, f), f));
                       out.push_back(CheckResult::compare(s + "(s0 s2)^2 = 1", word(dc, {0, 2}, 2, f), f));
                       out.push_back(CheckResult::compare(s + "(s1 s3)^2 = 1", word(dc, {1, 3}, 2, f), f));
                       const Series gy = g + random_series(rng, {var_b(1), var_b(2), var_y(1), var_y(2)}, tb, 4);
                       out.push_back(CheckResult::compare(s + "on kernel quotients (s0 s1)^4 = 1", word(dt, {0, 1}, 4, gy), gy));
                       for (int i = 0; i <= 2; ++i) {
                         const Series lhs = dc.psi(i, mul_truncated(f, g));
                         const Series rhs = add_tracked(mul_tracked(dc.psi(i, f), dc.reflect(i, g)), mul_tracked(f, dc.psi(i, g)));
                         out.push_back(CheckResult::compare(s + "Leibniz rule for psi_" + std::to_string(i), lhs, rhs));
                         const Series inv = mul_truncated(f, dc.reflect(i, f)) + mul_truncated(g, dc.reflect(i, g));
                         out.push_back(CheckResult::compare(s + "psi_" + std::to_string(i) + " kills s_" +
                                                                std::to_string(i) + "-invariants",
                                                            dc.psi(i, inv), Series(xb(D - 1))));
                       }
                     }
                     return out;
                   }});
  cells.push_back({"type A", [=] {
                     std::vector<CheckResult> out;
                     const int na = std::max(D, 2);
                     const auto sh = shat_dual(*engine, na, y, t);
                     const DividedDifference da(K, RootSystem::A, y, na);
                     for (const auto& l : partitions_up_to(std::min(M, 2), na)) {
                       const auto w = raising_word(RootSystem::A, l, true, na);
                       out.push_back(CheckResult::compare("type A word [" + word_to_string(RootSystem::A, w) + "] gives shat" +
                                                              l.label(),
                                                          da.hat_psi_word(w, Series::constant(1, t)), sh.at(l)));
                     }
                     return out;
                   }});
  cells.push_back({"type D", [=] {
                     std::vector<CheckResult> out;
                     const auto qh = extract_duals(*engine, DualKind::Qhat, required_nx(SchurKind::P, D), y, true, t);
                     const DividedDifference dd(K, RootSystem::D, y);
                     for (const auto& l : sps) {
                       const auto w = raising_word(RootSystem::D, l, true);
                       const auto c = CheckResult::compare("type D word [" + word_to_string(RootSystem::D, w) +
                                                               "] gives qhat" + l.label(),
                                                           dd.hat_psi_word(w, Series::constant(1, t)), qh.at(l));
                       out.push_back(CheckResult::info(c.name, c.pass, c.detail));
                     }
                     return out;
                   }});
  SuiteReport r{"k-recursion", cfg.to_json(), run_cells(cells, cfg.jobs), {}};
  r.config["degree"] = D;
  r.config["max_size"] = M;
  r.notes.push_back("type D conventions (s1^ = s0 s1 s0, root b1 +_F b2) are not fixed by the source; report only");
  return r;
}

// ---------------------------------------------------------------------------

SuiteReport appendix_vanishing(const RunConfig& cfg) {
  const int D = cfg.degree.value_or(4), M = cfg.max_size.value_or(3), n = cfg.n.value_or(M);
  std::vector<Cell> cells;
  const auto ps = partitions_up_to(M, n);
  for (const auto& F : laws(cfg)) {
    auto engine = std::make_shared<SchurEngine>(F);
    for (const auto& l : ps) {
      const std::string tag = F->name() + " s" + l.label() + " n=" + std::to_string(n);
      cells.push_back({tag, [=] {
                         std::vector<CheckResult> out;
                         const Truncation t = xyb(l.size() + D);
                         for (const auto& mu : ps) {
                           if (mu.contains(l)) continue;
                           out.push_back(CheckResult::compare(tag + " at mu=" + mu.label() + " vanishes",
                                                              evaluate_vanishing_double(*engine, l, mu, n, t), Series(t)));
                         }
                         out.push_back(CheckResult::compare(tag + " diagonal product",
                                                            evaluate_vanishing_double(*engine, l, l, n, t),
                                                            vanishing_diagonal_double(*F, l, t)));
                         return out;
                       }});
    }
    cells.push_back({F->name() + " shat", [=] {
                       const Truncation t = xb(D);
                       const int nx = std::max(D, 1);
                       const Alphabet y{cfg.n_y, 0};
                       const auto sh = shat_dual(*engine, nx, y, t);
                       return std::vector<CheckResult>{
                           CheckResult::compare(F->name() + " shat reconstruction residual is zero n_x=" + std::to_string(nx),
                                                resum_type_a(*engine, sh, nx, t), kernel_type_a(*F, nx, y, t))};
                     }});
  }
  SuiteReport r{"appendix-vanishing", cfg.to_json(), run_cells(cells, cfg.jobs), {}};
  r.config["degree"] = D;
  r.config["max_size"] = M;
  return r;
}

// ---------------------------------------------------------------------------

SuiteReport hook_sum_suite(const RunConfig& cfg) {
  const int M = cfg.max_size.value_or(5);
  std::vector<Cell> cells;
  for (int k = 1; k <= M; ++k)
    cells.push_back({"k=" + std::to_string(k), [k, &cfg] {
                       const Truncation t = xyb(k);
                       return std::vector<CheckResult>{CheckResult::compare(
                           "gp_" + std::to_string(k) + " = sum of g over hooks (n_y=" + std::to_string(cfg.n_y) + ")",
                           gp_poly(Partition{k}, cfg.n_y, t), hook_sum(k, cfg.n_y, t))};
                     }});
  SuiteReport r{"hook-sum", cfg.to_json(), run_cells(cells, cfg.jobs), {}};
  r.config["max_size"] = M;
  return r;
}

}  // namespace

SuiteReport run_suite(const std::string& name, const RunConfig& cfg) {
  if (name == "fgl-axioms") return fgl_axioms(cfg);
  if (name == "supersymmetry") return supersymmetry(cfg);
  if (name == "factorization") return factorization(cfg);
  if (name == "vanishing") return vanishing(cfg);
  if (name == "cauchy") return cauchy(cfg);
  if (name == "duality") return duality(cfg);
  if (name == "k-recursion") return k_recursion(cfg);
  if (name == "appendix-vanishing") return appendix_vanishing(cfg);
  if (name == "hook-sum") return hook_sum_suite(cfg);
  throw ConfigurationError("unknown suite: " + name + " (see verify --list)");
}

// ---------------------------------------------------------------------------

namespace {

// (-1)^(deg - |lambda|) * f(beta = 1), deg the y-degree of each term.
Series normalized_plus(const Series& f, int size) {
  const Series at1 = substitute(f, {{var_beta(), Series::constant(1, f.truncation())}});
  std::vector<Term> ts;
  for (const auto& t : at1.terms()) {
    const int d = t.monomial.family_degree(Family::Y) - size;
    ts.push_back({t.monomial, d % 2 ? Rational(-t.coeff) : t.coeff});
  }
  return Series::from_terms(std::move(ts), f.truncation());
}

std::string g_expansion_text(const BasisExpansion& e) {
  std::string s;
  for (const auto& [mu, c] : e) s += (s.empty() ? "" : " + ") + ("(" + c.to_string() + ")g" + mu.label());
  return s.empty() ? "0" : s;
}

}  // namespace

SuiteReport run_conjecture(const std::string& kind, const RunConfig& cfg) {
  if (kind != "gp" && kind != "gq" && kind != "staircase")
    throw ConfigurationError("unknown conjecture: " + kind + " (gp, gq or staircase)");
  const int M = cfg.max_size.value_or(6);
  const int D = std::max(cfg.degree.value_or(M), M);
  const int ny = cfg.n_y;
  const Truncation ty = xyb(D);
  SuiteReport r{"conjecture " + kind, cfg.to_json(), {}, {}};
  r.config["max_size"] = M;
  r.config["degree"] = D;
  if (kind == "staircase") {
    for (int k = 1; staircase(k).size() <= M; ++k) {
      const Partition rho = staircase(k);
      auto c = CheckResult::compare("gp" + rho.label() + " = g" + rho.label() + " (n_y=" + std::to_string(ny) + ")",
                                    gp_poly(rho, ny, ty), dual_grothendieck(rho, ny, ty));
      if (c.pass) c.detail = "exact";
      r.checks.push_back(CheckResult::info(c.name, c.pass, c.detail));
    }
    r.notes.push_back("conjectural statement: reported, not asserted");
    return r;
  }
  const bool is_gp = kind == "gp";
  if (!cfg.fgls.empty() && (cfg.fgls.size() != 1 || cfg.fgls[0] != "k-theory"))
    throw ConfigurationError("conjecture scans compare against the k-theory duals");
  // b = 0 duals are polynomials in y, exact at any X-only cutoff >= |lambda|
  const Truncation tx{D, Grading::x_only()};
  SchurEngine engine(make_fgl("k-theory", "symbolic"));
  const DualKind dk = is_gp ? DualKind::Phat : DualKind::Qhat;
  const auto duals = extract_duals(engine, dk, required_nx(paired_basis(dk), D), Alphabet{ny, 0}, false, tx);
  int one_row_minus = 0, one_row_plus = 0, one_row = 0;
  for (const auto& l : strict_partitions_up_to(M)) {
    const Series tab = Series::from_terms((is_gp ? gp_poly(l, ny, ty) : gq_poly(l, ny, ty)).terms(), tx);
    const Series& dual = duals.at(l);
    const Series minus = substitute(dual, {{var_beta(), Series::constant(-1, tx)}});
    const Series plus = normalized_plus(dual, l.size());
    auto cm = CheckResult::compare(kind + l.label() + " = " + dual_kind_name(dk) + "K" + l.label() + " at beta=-1", tab, minus);
    if (cm.pass) cm.detail = "exact";
    const bool plus_ok = agree(tab, plus);
    cm.detail += plus_ok ? "; beta=+1 with (-1)^(deg-|lambda|) also matches"
                         : "; beta=+1 with (-1)^(deg-|lambda|) differs";
    // the g expansion is unique only with at least |lambda| variables
    const int ng = std::max(ny, l.size());
    const Series wide = is_gp ? gp_poly(l, ng, ty) : gq_poly(l, ng, ty);
    const auto gexp = expand_in_dual_grothendieck(wide, D, ng);
    cm.detail += "; " + kind + " = " + g_expansion_text(gexp);
    if (l.length() <= 1) {
      ++one_row;
      one_row_minus += cm.pass;
      one_row_plus += plus_ok;
      r.checks.push_back(cm);
    } else {
      r.checks.push_back(CheckResult::info(cm.name, cm.pass, cm.detail));
    }
  }
  r.notes.push_back("one-row cases asserted with beta=-1: " + std::to_string(one_row_minus) + "/" +
                    std::to_string(one_row) + " match; beta=+1 normalized: " + std::to_string(one_row_plus) + "/" +
                    std::to_string(one_row));
  r.notes.push_back("multi-row cases are conjectural and reported only");
  return r;
}

}  // namespace fglschur
