#pragma once

#include <map>
#include <utility>
#include <vector>

#include "fglschur/schur.hpp"

namespace fglschur {

/// phat pairs with the Q-basis, qhat with the P-basis.
enum class DualKind { Phat, Qhat };

DualKind parse_dual_kind(const std::string& name);
std::string dual_kind_name(DualKind k);
SchurKind paired_basis(DualKind k);

/// Y-variables y_(offset+1) .. y_(offset+n_y).
struct Alphabet {
  int n_y = 1;
  int offset = 0;
};

/// Delta(t; y) = prod_j (1 - tbar y_j)/(1 - t y_j) in the variable `t`.
Series kernel_one(const FormalGroupLaw& fgl, Variable t, Alphabet y, Truncation trunc);
/// prod over x_1..x_(n_x) of Delta(x_i; y).
Series kernel_delta(const FormalGroupLaw& fgl, int n_x, Alphabet y, Truncation trunc);
/// prod_i prod_j (1 - bbar_i y_j)/(1 - x_i y_j).
Series kernel_type_a(const FormalGroupLaw& fgl, int n_x, Alphabet y, Truncation trunc);

/// One-row duals k = 0..max_k from the expansion of Delta(t;y) in [t|b]^k
/// (qhat) or [[t|b]]^k (phat).
std::vector<Series> onerow_duals(const SchurEngine& engine, DualKind kind, int max_k, Alphabet y, bool factorial,
                                 Truncation trunc);

/// Smallest number of x-variables for which every strict partition of size
/// <= cutoff fits, rounded up to even for the P-basis.
int required_nx(SchurKind basis, int cutoff);

/// Duals of every strict partition of size <= cutoff, read off the x-side
/// expansion of Delta(x_1..x_(n_x); y) in the paired basis.
BasisExpansion extract_duals(const SchurEngine& engine, DualKind kind, int n_x, Alphabet y, bool factorial,
                             Truncation trunc);

/// sum_lambda basis_lambda(x|b) dual_lambda(y|b).
Series resum(const SchurEngine& engine, SchurKind basis, const BasisExpansion& duals, int n_x, bool factorial,
             Truncation trunc);

/// Type A duals: x-side expansion of kernel_type_a in s_double(lambda, n_x).
BasisExpansion shat_dual(const SchurEngine& engine, int n_x, Alphabet y, Truncation trunc);
Series resum_type_a(const SchurEngine& engine, const BasisExpansion& duals, int n_x, Truncation trunc);

/// Coefficients of basis_lambda * basis_mu in the same basis.
BasisExpansion structure_constants(const SchurEngine& engine, const Partition& lambda, const Partition& mu,
                                   SchurKind basis, int n_x, bool factorial, Truncation trunc);

using PairExpansion = std::map<std::pair<Partition, Partition>, Series>;

/// basis_nu(x' u x'') expanded in basis_lambda(x') basis_mu(x''), with
/// x' = x_1..x_k and x'' = x_(k+1)..x_(2k).
PairExpansion coproduct_basis(const SchurEngine& engine, const Partition& nu, SchurKind basis, int k, bool factorial,
                              Truncation trunc);

/// dual_nu(y' u y'') expanded in dual_lambda(y') dual_mu(y'') by a weighted
/// two-stage solve; y' = y_1..y_m, y'' = y_(m+1)..y_(2m). The weight cutoff is
/// the truncation cutoff.
PairExpansion coproduct_dual(const SchurEngine& engine, const Partition& nu, DualKind kind, int n_x, int m,
                             bool factorial, Truncation trunc);

/// Moves y_i to y_(i+shift).
Series shift_y(const Series& f, int shift);

}  // namespace fglschur
