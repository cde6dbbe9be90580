#pragma once

#include <utility>

#include "entdetect/bloch.hpp"
#include "entdetect/criteria.hpp"
#include "entdetect/observables.hpp"

namespace entdetect {
namespace lft {

// Filter normal form: rho_tilde has maximally mixed marginals and equals
// (F_A x F_B) rho (F_A x F_B)^dag renormalized.
struct NormalFormResult {
  BipartiteState rho_tilde;
  ComplexMatrix filter_a;
  ComplexMatrix filter_b;
  int iterations = 0;
  double residual = 0.0;  // max-norm deviation of the marginals from I/d
};

// Ranks of the reduced states at eigenvalue cutoff 1e-10.
std::pair<int, int> local_ranks(const BipartiteState& state);

// Alternating local whitening: F <- rho_reduced^{-1/2} / sqrt(d) on each side
// in turn until both marginals are within tol of I/d in max-norm. Throws
// NotFullLocalRankError if a marginal eigenvalue drops below 1e-10 at any
// sweep, NoConvergenceError (carrying the residual) after max_iter sweeps.
NormalFormResult normal_form(const BipartiteState& state, double tol = 1e-10,
                             int max_iter = 1000);

// Post-filter trace-norm criterion for balanced tuples:
// trace_norm(sqrt(A) T_tilde sqrt(B)) <= kappa_A kappa_B - |tA||tB|/(dA dB).
criteria::CriterionReport theorem2_check(const BipartiteState& state,
                                         const MeasurementTuple& a,
                                         const MeasurementTuple& b);

// Simplex-tuple form: ||T_tilde||_tr <= kappa(tA, tB).
double observation3_kappa(int dim_a, int dim_b, double t_a, double t_b);
// Strongest choice, attained at tA = tB = 0: 2 sqrt((dA-1)(dB-1)/(dA dB)).
double observation3_kappa_min(int dim_a, int dim_b);

criteria::CriterionReport observation3_check(const BipartiteState& state,
                                             double t_a, double t_b);

// Full route: project rank-deficient states onto the product of the marginal
// supports (once), then normal form and the kappa(tA, tB) check. Rank-1
// marginals short-circuit to Inconclusive (such states are product states on
// the support).
criteria::CriterionReport pipeline(const BipartiteState& state,
                                   double t_a = 0.0, double t_b = 0.0);

}  // namespace lft
}  // namespace entdetect
