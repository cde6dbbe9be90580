#include "entdetect/criteria.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "entdetect/errors.hpp"

namespace entdetect {
namespace criteria {

std::string to_string(Verdict v) {
  return v == Verdict::Entangled ? "Entangled" : "Inconclusive";
}

namespace {

std::string fmt(double x) {
  std::ostringstream out;
  out << x;
  return out.str();
}

void require_dims(const BipartiteState& state, const MeasurementTuple& a,
                  const MeasurementTuple& b) {
  if (state.dim_a != a.dim || state.dim_b != b.dim) {
    throw DimensionMismatchError(
        "correlation_matrix: state is " + std::to_string(state.dim_a) + "x" +
        std::to_string(state.dim_b) + " but tuples act on " +
        std::to_string(a.dim) + " and " + std::to_string(b.dim));
  }
}

CriterionReport upper_bound_report(std::string label, double statistic,
                                   double bound) {
  CriterionReport report;
  report.criterion = std::move(label);
  report.statistic = statistic;
  report.bound = bound;
  report.margin = statistic - bound;
  report.verdict =
      report.margin > kVerdictTol ? Verdict::Entangled : Verdict::Inconclusive;
  return report;
}

}  // namespace

CorrelationMatrix correlation_matrix(const BipartiteState& state,
                                     const MeasurementTuple& a,
                                     const MeasurementTuple& b) {
  require_dims(state, a, b);
  const bloch::BipartiteBloch coeffs = bloch::decompose_bipartite(state);
  CorrelationMatrix out;
  out.c = a.m_matrix().transpose() * coeffs.chi * b.m_matrix();
  out.tuple_a = a;
  out.tuple_b = b;
  return out;
}

RealMatrix correlation_matrix_direct(const BipartiteState& state,
                                     const MeasurementTuple& a,
                                     const MeasurementTuple& b) {
  require_dims(state, a, b);
  const std::vector<ComplexMatrix> ops_a = a.operators();
  const std::vector<ComplexMatrix> ops_b = b.operators();
  RealMatrix c(a.size(), b.size());
  for (int mu = 0; mu < a.size(); ++mu) {
    for (int nu = 0; nu < b.size(); ++nu) {
      c(mu, nu) =
          (state.rho * linalg::kron(ops_a[mu], ops_b[nu])).trace().real();
    }
  }
  return c;
}

CriterionReport theorem1_check(const BipartiteState& state,
                               const MeasurementTuple& a,
                               const MeasurementTuple& b) {
  const MibsScale scale_a = observables::beta_bound(a);
  const MibsScale scale_b = observables::beta_bound(b);
  const CorrelationMatrix c = correlation_matrix(state, a, b);
  return upper_bound_report("theorem1", linalg::trace_norm(c.c),
                            scale_a.kappa * scale_b.kappa);
}

CriterionReport observation1_check(const BipartiteState& state, double t_a,
                                   double t_b) {
  CriterionReport report =
      theorem1_check(state, observables::tuple_simplex(state.dim_a, t_a),
                     observables::tuple_simplex(state.dim_b, t_b));
  report.criterion = "obs1:tA=" + fmt(t_a) + ",tB=" + fmt(t_b);
  return report;
}

Observation2Report observation2_check(const BipartiteState& state, double t) {
  if (state.dim_a != state.dim_b) {
    throw DimensionMismatchError("observation2_check: requires dA == dB");
  }
  const double d = state.dim_a;
  const MeasurementTuple tuple = observables::tuple_simplex(state.dim_a, t);
  const CorrelationMatrix c = correlation_matrix(state, tuple, tuple);

  Observation2Report out;
  out.upper = upper_bound_report("obs2-upper:t=" + fmt(t),
                                 linalg::trace_norm(c.c),
                                 t * t + 2.0 * d / (d + 1.0));
  out.lower.criterion = "obs2-lower:t=" + fmt(t);
  out.lower.statistic = c.c.trace();
  out.lower.bound = t * t - 2.0 * d / (d * d - 1.0);
  out.lower.margin = out.lower.bound - out.lower.statistic;
  out.lower.verdict = out.lower.margin > kVerdictTol ? Verdict::Entangled
                                                     : Verdict::Inconclusive;
  out.verdict = (out.upper.verdict == Verdict::Entangled ||
                 out.lower.verdict == Verdict::Entangled)
                    ? Verdict::Entangled
                    : Verdict::Inconclusive;
  return out;
}

CriterionReport sarbicki_check(const BipartiteState& state, double h_a,
                               double h_b) {
  CriterionReport report =
      theorem1_check(state, observables::tuple_sarbicki(state.dim_a, h_a),
                     observables::tuple_sarbicki(state.dim_b, h_b));
  report.criterion = "sarbicki:hA=" + fmt(h_a) + ",hB=" + fmt(h_b);
  return report;
}

double ppt_min_eigenvalue(const BipartiteState& state) {
  const ComplexMatrix pt = linalg::partial_transpose(
      state.rho, state.dim_a, state.dim_b, Subsystem::B);
  return linalg::hermitian_eig(pt).eigenvalues.minCoeff();
}

Verdict ppt_check(const BipartiteState& state) {
  return ppt_min_eigenvalue(state) < -1e-10 ? Verdict::Entangled
                                            : Verdict::Inconclusive;
}

}  // namespace criteria
}  // namespace entdetect
