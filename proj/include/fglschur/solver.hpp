#pragma once

#include <functional>
#include <vector>

#include "fglschur/series.hpp"

namespace fglschur {

/// Controls the order used to pick leading terms during triangular solves.
///
/// Plain mode ranks terms by graded degree. Weighted mode ranks them by
/// total X/Y/B degree plus twice the Coeff weight and stops once every
/// remaining term is heavier than `weight_cutoff`; it is used for y-side
/// expansions, where graded degree is not triangular.
struct SolveOptions {
  std::function<bool(Variable)> is_basis_variable;
  bool weighted = false;
  int weight_cutoff = -1;
};

struct LeadingTerm {
  Monomial monomial;  // over basis variables only
  Rational coeff;
  int order = 0;
};

int solve_order(const Monomial& m, Grading g, const SolveOptions& opts);

/// Leading term of every basis element. Throws SolverError when a leading
/// coefficient is not a rational constant or two leads coincide.
std::vector<LeadingTerm> leading_terms(const std::vector<Series>& basis, const SolveOptions& opts);

/// Coefficients c_k, free of basis variables, with f = sum c_k basis_k.
/// Throws NotInSpanError with the offending monomial when the residual has a
/// lead no basis element matches.
std::vector<Series> triangular_solve(const Series& f, const std::vector<Series>& basis,
                                     const std::vector<LeadingTerm>& leads, const SolveOptions& opts);

}  // namespace fglschur
