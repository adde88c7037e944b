#pragma once

// Independent classical oracles. Nothing here calls the library's Schur or
// dual code; results are plain integer polynomials turned into series only at
// the end for comparison.

#include <algorithm>
#include <map>
#include <vector>

#include "fglschur/partition.hpp"
#include "fglschur/series.hpp"

namespace oracle {

using fglschur::Partition;
using Exps = std::vector<int>;
using Poly = std::map<Exps, long>;

inline void add_to(Poly& p, const Exps& e, long c) {
  if ((p[e] += c) == 0) p.erase(e);
}

inline Poly mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exps e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      add_to(out, e, ca * cb);
    }
  return out;
}

// family: 'x' or 'y'
inline fglschur::Series to_series(const Poly& p, fglschur::Truncation t, char family = 'x') {
  std::vector<fglschur::Term> terms;
  for (const auto& [e, c] : p) {
    std::vector<std::pair<fglschur::Variable, int>> ps;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) ps.emplace_back(family == 'x' ? fglschur::var_x(i + 1) : fglschur::var_y(i + 1), e[i]);
    terms.push_back({fglschur::Monomial::from_pairs(ps), c});
  }
  return fglschur::Series::from_terms(std::move(terms), t);
}

// Marked shifted tableaux: alphabet 1' < 1 < 2' < 2 ..., rank 2k-1 for k',
// 2k for k. Rows and columns weakly increase, a primed letter repeats in no
// row, an unprimed letter repeats in no column. Q allows primes on the main
// diagonal, P does not.
namespace detail {

struct Shifted {
  const Partition& shape;
  int n;
  bool q;
  std::vector<std::vector<int>> rank;  // rank[r][k], cell (r, r + k)
  Poly* out;

  int at(int r, int col) const {
    const int k = col - r;
    if (r < 0 || k < 0 || k >= static_cast<int>(rank[r].size())) return 0;
    return rank[r][k];
  }

  void fill(int r, int k) {
    if (r == shape.length()) {
      Exps e(n, 0);
      for (const auto& row : rank)
        for (int v : row) ++e[(v + 1) / 2 - 1];
      add_to(*out, e, 1);
      return;
    }
    if (k == shape[r]) return fill(r + 1, 0);
    const int col = r + k;
    const int left = k > 0 ? rank[r][k - 1] : 0;
    const int up = at(r - 1, col);
    for (int v = std::max({1, left, up}); v <= 2 * n; ++v) {
      const bool primed = v % 2 == 1;
      if (primed && v == left) continue;   // primed twice in a row
      if (!primed && v == up) continue;    // unprimed twice in a column
      if (primed && k == 0 && !q) continue;
      rank[r][k] = v;
      fill(r, k + 1);
    }
    rank[r][k] = 0;
  }
};

}  // namespace detail

inline Poly shifted_tableau_sum(const Partition& lambda, int n, bool q) {
  Poly out;
  detail::Shifted s{lambda, n, q, {}, &out};
  for (int p : lambda.parts()) s.rank.emplace_back(p, 0);
  s.fill(0, 0);
  return out;
}

inline Poly classical_Q(const Partition& lambda, int n) { return shifted_tableau_sum(lambda, n, true); }
inline Poly classical_P(const Partition& lambda, int n) { return shifted_tableau_sum(lambda, n, false); }

// det(x_i^(e_j)) over all permutations.
inline Poly alternant(const std::vector<int>& exps, int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  Poly out;
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inv;
    Exps e(n, 0);
    for (int i = 0; i < n; ++i) e[perm[i]] = exps[i];
    add_to(out, e, inv % 2 ? -1 : 1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// a_(lambda + delta) and a_delta; s_lambda * a_delta = a_(lambda + delta).
inline std::pair<Poly, Poly> bialternant(const Partition& lambda, int n) {
  std::vector<int> top(n), bottom(n);
  for (int j = 0; j < n; ++j) {
    top[j] = lambda[j] + n - 1 - j;
    bottom[j] = n - 1 - j;
  }
  return {alternant(top, n), alternant(bottom, n)};
}

// h_k in n variables.
inline Poly complete(int k, int n) {
  Poly out;
  Exps e(n, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == n - 1) {
      e[i] = left;
      add_to(out, e, 1);
      e[i] = 0;
      return;
    }
    for (int a = 0; a <= left; ++a) {
      e[i] = a;
      self(self, i + 1, left - a);
    }
    e[i] = 0;
  };
  if (k == 0) out[e] = 1;
  else rec(rec, 0, k);
  return out;
}

inline Poly elementary(int k, int n) {
  Poly out;
  for (int mask = 0; mask < (1 << n); ++mask)
    if (__builtin_popcount(mask) == k) {
      Exps e(n, 0);
      for (int i = 0; i < n; ++i) e[i] = (mask >> i) & 1;
      add_to(out, e, 1);
    }
  return out;
}

// q_k = sum e_i h_(k-i), the one-row Q-function.
inline Poly one_row_Q(int k, int n) {
  Poly out;
  for (int i = 0; i <= k && i <= n; ++i)
    for (const auto& [e, c] : mul(elementary(i, n), complete(k - i, n))) add_to(out, e, c);
  return out;
}

// Reference one-row formulas at b = 0 in terms of a11 and a12. The p2 and p3
// entries carry the +a11 sign as usually quoted; the kernel gives -a11 for p2.
struct OneRow {
  fglschur::Series p1, p2, p3, q1, q2, q3;
};

inline OneRow reference_one_row(const fglschur::Series& a11, const fglschur::Series& a12, int n,
                              fglschur::Truncation t) {
  using fglschur::mul_truncated;
  auto y = [&](const Poly& p) { return to_series(p, t, 'y'); };
  const auto h1 = y(complete(1, n)), h2 = y(complete(2, n)), h1sq = mul_truncated(h1, h1);
  const auto Q1 = y(one_row_Q(1, n)), Q2 = y(one_row_Q(2, n)), Q3 = y(one_row_Q(3, n));
  const fglschur::Rational half(1, 2);
  const auto P1 = Q1 * half, P2 = Q2 * half, P3 = Q3 * half;
  OneRow r;
  r.p1 = P1;
  r.p2 = P2 + mul_truncated(a11, h1);
  r.p3 = P3 + mul_truncated(a11, h2) - mul_truncated(a11, h1sq) * 2 +
         mul_truncated(mul_truncated(a11, a11) - a12, h1);
  r.q1 = Q1;
  r.q2 = Q2 - mul_truncated(a11, h1);
  r.q3 = Q3 + mul_truncated(a11, h2) * 2 - mul_truncated(a11, h1sq) * 3 + mul_truncated(mul_truncated(a11, a11), h1);
  return r;
}

}  // namespace oracle
