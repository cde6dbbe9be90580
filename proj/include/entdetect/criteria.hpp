#pragma once

#include <string>

#include "entdetect/bloch.hpp"
#include "entdetect/observables.hpp"

namespace entdetect {
namespace criteria {

// Margins above this flag a state as entangled.
inline constexpr double kVerdictTol = 1e-9;

enum class Verdict { Entangled, Inconclusive };

std::string to_string(Verdict v);

// C_mu_nu = Tr[rho (A_mu x B_nu)], together with the tuples that produced it.
struct CorrelationMatrix {
  RealMatrix c;
  MeasurementTuple tuple_a;
  MeasurementTuple tuple_b;
};

struct CriterionReport {
  std::string criterion;
  double statistic = 0.0;
  double bound = 0.0;
  // statistic - bound, except for lower-bound style checks where it is
  // bound - statistic; Entangled exactly when margin > kVerdictTol.
  double margin = 0.0;
  Verdict verdict = Verdict::Inconclusive;
};

// Fast path: C = M_A^T chi M_B over the product generator basis.
CorrelationMatrix correlation_matrix(const BipartiteState& state,
                                     const MeasurementTuple& a,
                                     const MeasurementTuple& b);

// Independent slow path, entrywise Tr[rho (A_mu x B_nu)] with materialized
// operators; kept as the oracle for the fast path.
RealMatrix correlation_matrix_direct(const BipartiteState& state,
                                     const MeasurementTuple& a,
                                     const MeasurementTuple& b);

// Trace-norm criterion ||C||_tr <= kappa_A kappa_B for balanced tuples.
CriterionReport theorem1_check(const BipartiteState& state,
                               const MeasurementTuple& a,
                               const MeasurementTuple& b);

// Simplex-tuple specialization: bound sqrt(tA^2 + 2dA/(dA+1)) * (B side).
// tA = ccnr_trace(dA) recovers CCNR, tA = esic_trace(dA) recovers ESIC.
CriterionReport observation1_check(const BipartiteState& state, double t_a,
                                   double t_b);

// Equal-dimension pair of bounds evaluated on simplex tuples: the trace-norm
// upper bound and the matrix-trace lower bound Tr[C] >= t^2 - 2d/(d^2-1).
struct Observation2Report {
  CriterionReport upper;  // ||C||_tr vs t^2 + 2d/(d+1)
  CriterionReport lower;  // Tr[C] vs t^2 - 2d/(d^2-1), margin = bound - statistic
  Verdict verdict = Verdict::Inconclusive;
};

Observation2Report observation2_check(const BipartiteState& state, double t);

CriterionReport sarbicki_check(const BipartiteState& state, double h_a,
                               double h_b);

// Positivity of the partial transpose; baseline oracle, not part of the
// trace-norm criterion family.
double ppt_min_eigenvalue(const BipartiteState& state);
Verdict ppt_check(const BipartiteState& state);

}  // namespace criteria
}  // namespace entdetect
