#include "entdetect/lft.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "entdetect/errors.hpp"

namespace entdetect {
namespace lft {

namespace {

constexpr double kRankCutoff = 1e-10;

std::string fmt(double x) {
  std::ostringstream out;
  out << x;
  return out.str();
}

int eig_rank(const ComplexMatrix& h) {
  const RealVector vals = linalg::hermitian_eig(h).eigenvalues;
  int rank = 0;
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    if (vals[i] > kRankCutoff) {
      ++rank;
    }
  }
  return rank;
}

double marginal_residual(const BipartiteState& state) {
  const ComplexMatrix red_a =
      linalg::partial_trace(state.rho, state.dim_a, state.dim_b, Subsystem::B);
  const ComplexMatrix red_b =
      linalg::partial_trace(state.rho, state.dim_a, state.dim_b, Subsystem::A);
  const ComplexMatrix dev_a =
      red_a - ComplexMatrix::Identity(state.dim_a, state.dim_a) / state.dim_a;
  const ComplexMatrix dev_b =
      red_b - ComplexMatrix::Identity(state.dim_b, state.dim_b) / state.dim_b;
  return std::max(dev_a.cwiseAbs().maxCoeff(), dev_b.cwiseAbs().maxCoeff());
}

// Whitening filter rho_reduced^{-1/2} / sqrt(d); throws NotFullLocalRankError
// below the rank cutoff.
ComplexMatrix whitening_filter(const ComplexMatrix& reduced) {
  const int d = static_cast<int>(reduced.rows());
  ComplexMatrix inv_sqrt;
  try {
    inv_sqrt = linalg::psd_inv_sqrt(reduced, kRankCutoff);
  } catch (const SingularBelowCutoffError&) {
    throw NotFullLocalRankError(
        "normal_form: a marginal lost full rank during iteration");
  }
  return inv_sqrt / std::sqrt(static_cast<double>(d));
}

}  // namespace

std::pair<int, int> local_ranks(const BipartiteState& state) {
  const ComplexMatrix red_a =
      linalg::partial_trace(state.rho, state.dim_a, state.dim_b, Subsystem::B);
  const ComplexMatrix red_b =
      linalg::partial_trace(state.rho, state.dim_a, state.dim_b, Subsystem::A);
  return {eig_rank(red_a), eig_rank(red_b)};
}

NormalFormResult normal_form(const BipartiteState& state, double tol,
                             int max_iter) {
  const int da = state.dim_a;
  const int db = state.dim_b;
  ComplexMatrix filter_a = ComplexMatrix::Identity(da, da);
  ComplexMatrix filter_b = ComplexMatrix::Identity(db, db);
  ComplexMatrix rho = state.rho;

  int iterations = 0;
  double residual = 0.0;
  while (true) {
    if (iterations >= max_iter) {
      throw NoConvergenceError(
          "normal_form: residual " + fmt(residual) + " after " +
              std::to_string(max_iter) + " iterations",
          residual);
    }
    ++iterations;

    const ComplexMatrix la =
        whitening_filter(linalg::partial_trace(rho, da, db, Subsystem::B));
    rho = linalg::kron(la, ComplexMatrix::Identity(db, db)) * rho *
          linalg::kron(la.adjoint(), ComplexMatrix::Identity(db, db));
    rho /= rho.trace().real();
    filter_a = la * filter_a;

    const ComplexMatrix lb =
        whitening_filter(linalg::partial_trace(rho, da, db, Subsystem::A));
    rho = linalg::kron(ComplexMatrix::Identity(da, da), lb) * rho *
          linalg::kron(ComplexMatrix::Identity(da, da), lb.adjoint());
    rho /= rho.trace().real();
    filter_b = lb * filter_b;

    residual = marginal_residual({da, db, rho});
    if (residual < tol) {
      break;
    }
  }

  // Recompute from the original state with the accumulated filters so the
  // result is exactly (F_A x F_B) rho (F_A x F_B)^dag renormalized.
  ComplexMatrix big = linalg::kron(filter_a, filter_b);
  ComplexMatrix rho_tilde = big * state.rho * big.adjoint();
  rho_tilde /= rho_tilde.trace().real();

  NormalFormResult result;
  result.rho_tilde = make_state(da, db, std::move(rho_tilde));
  result.filter_a = std::move(filter_a);
  result.filter_b = std::move(filter_b);
  result.iterations = iterations;
  result.residual = marginal_residual(result.rho_tilde);
  return result;
}

criteria::CriterionReport theorem2_check(const BipartiteState& state,
                                         const MeasurementTuple& a,
                                         const MeasurementTuple& b) {
  const MibsScale scale_a = observables::beta_bound(a);
  const MibsScale scale_b = observables::beta_bound(b);
  const NormalFormResult nf = normal_form(state);
  const RealMatrix t_tilde = bloch::decompose_bipartite(nf.rho_tilde).t;

  const RealMatrix gram_a = a.bloch_columns * a.bloch_columns.transpose();
  const RealMatrix gram_b = b.bloch_columns * b.bloch_columns.transpose();
  const RealMatrix filtered =
      linalg::psd_sqrt(gram_a) * t_tilde * linalg::psd_sqrt(gram_b);
  const double statistic = linalg::trace_norm(filtered);
  const double bound =
      scale_a.kappa * scale_b.kappa -
      a.traces.norm() * b.traces.norm() / (state.dim_a * state.dim_b);

  criteria::CriterionReport report;
  report.criterion = "theorem2";
  report.statistic = statistic;
  report.bound = bound;
  report.margin = statistic - bound;
  report.verdict = report.margin > criteria::kVerdictTol
                       ? criteria::Verdict::Entangled
                       : criteria::Verdict::Inconclusive;
  return report;
}

double observation3_kappa(int dim_a, int dim_b, double t_a, double t_b) {
  const double da = dim_a;
  const double db = dim_b;
  const double prefactor =
      std::sqrt((da * da - 1.0) * (db * db - 1.0)) / (da * db);
  return prefactor * (std::sqrt(t_a * t_a + 2.0 * da / (da + 1.0)) *
                          std::sqrt(t_b * t_b + 2.0 * db / (db + 1.0)) -
                      std::abs(t_a * t_b));
}

double observation3_kappa_min(int dim_a, int dim_b) {
  const double da = dim_a;
  const double db = dim_b;
  return 2.0 * std::sqrt((da - 1.0) * (db - 1.0) / (da * db));
}

criteria::CriterionReport observation3_check(const BipartiteState& state,
                                             double t_a, double t_b) {
  const NormalFormResult nf = normal_form(state);
  const RealMatrix t_tilde = bloch::decompose_bipartite(nf.rho_tilde).t;

  criteria::CriterionReport report;
  report.criterion = "obs3:tA=" + fmt(t_a) + ",tB=" + fmt(t_b);
  report.statistic = linalg::trace_norm(t_tilde);
  report.bound = observation3_kappa(state.dim_a, state.dim_b, t_a, t_b);
  report.margin = report.statistic - report.bound;
  report.verdict = report.margin > criteria::kVerdictTol
                       ? criteria::Verdict::Entangled
                       : criteria::Verdict::Inconclusive;
  return report;
}

namespace {

// Isometry onto the support of a reduced state (columns = eigenvectors with
// eigenvalue above the cutoff).
ComplexMatrix support_isometry(const ComplexMatrix& reduced) {
  const linalg::HermitianEig eig = linalg::hermitian_eig(reduced);
  const int d = static_cast<int>(reduced.rows());
  int rank = 0;
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
    if (eig.eigenvalues[i] > kRankCutoff) {
      ++rank;
    }
  }
  // Eigenvalues are ascending; the support spans the last `rank` columns.
  return eig.eigenvectors.rightCols(rank);
}

}  // namespace

criteria::CriterionReport pipeline(const BipartiteState& state, double t_a,
                                   double t_b) {
  const auto [rank_a, rank_b] = local_ranks(state);
  if (rank_a == state.dim_a && rank_b == state.dim_b) {
    criteria::CriterionReport report = observation3_check(state, t_a, t_b);
    report.criterion = "pipeline-" + report.criterion;
    return report;
  }

  if (rank_a == 1 || rank_b == 1) {
    // A pure marginal forces a product structure across that cut.
    criteria::CriterionReport report;
    report.criterion = "pipeline-rank1";
    report.verdict = criteria::Verdict::Inconclusive;
    return report;
  }

  const ComplexMatrix va = support_isometry(
      linalg::partial_trace(state.rho, state.dim_a, state.dim_b, Subsystem::B));
  const ComplexMatrix vb = support_isometry(
      linalg::partial_trace(state.rho, state.dim_a, state.dim_b, Subsystem::A));
  const ComplexMatrix big = linalg::kron(va, vb);
  ComplexMatrix projected = big.adjoint() * state.rho * big;
  projected /= projected.trace().real();

  criteria::CriterionReport report = observation3_check(
      make_state(static_cast<int>(va.cols()), static_cast<int>(vb.cols()),
                 std::move(projected)),
      t_a, t_b);
  report.criterion = "pipeline-projected-" + report.criterion;
  return report;
}

}  // namespace lft
}  // namespace entdetect
