#include "entdetect/observables.hpp"

#include <cmath>
#include <string>

namespace entdetect {

bool MeasurementTuple::balanced(double tol) const {
  if (size() == 0) {
    return true;
  }
  return (bloch_columns * traces).cwiseAbs().maxCoeff() <= tol;
}

RealMatrix MeasurementTuple::m_matrix() const {
  RealMatrix m(dim * dim, size());
  m.row(0) = traces.transpose() / std::sqrt(2.0 * dim);
  m.bottomRows(dim * dim - 1) = bloch_columns;
  return m;
}

std::vector<ComplexMatrix> MeasurementTuple::operators() const {
  std::vector<ComplexMatrix> ops;
  ops.reserve(size());
  for (int mu = 0; mu < size(); ++mu) {
    ops.push_back(bloch::bloch_to_observable(traces[mu], bloch_columns.col(mu), dim));
  }
  return ops;
}

namespace observables {

RealMatrix simplex_vertices(int n) {
  if (n < 1) {
    throw InvalidArgumentError("simplex_vertices: n must be >= 1");
  }
  RealMatrix vertices = RealMatrix::Zero(n, n + 1);
  const double np1 = n + 1.0;
  for (int k = 1; k <= n + 1; ++k) {
    for (int i = 1; i < k && i <= n; ++i) {
      vertices(i - 1, k - 1) =
          -std::sqrt(np1) / std::sqrt(n * (n - i + 1.0) * (n - i + 2.0));
    }
    if (k <= n) {
      vertices(k - 1, k - 1) =
          std::sqrt(np1 * (n - k + 1.0)) / std::sqrt(n * (n - k + 2.0));
    }
  }
  return vertices;
}

double ccnr_trace(int d) { return std::sqrt(2.0 * d / (d * d - 1.0)); }

double esic_trace(int d) { return std::sqrt(2.0 * d / (d - 1.0)); }

MeasurementTuple tuple_vicente(int d) {
  if (d < 2) {
    throw InvalidArgumentError("tuple_vicente: d must be >= 2");
  }
  MeasurementTuple tuple;
  tuple.dim = d;
  tuple.kind = TupleKind::Vicente;
  tuple.traces = RealVector::Zero(d * d);
  tuple.bloch_columns = RealMatrix::Zero(d * d - 1, d * d);
  tuple.bloch_columns.rightCols(d * d - 1) =
      RealMatrix::Identity(d * d - 1, d * d - 1);
  return tuple;
}

MeasurementTuple tuple_sarbicki(int d, double h) {
  MeasurementTuple tuple = tuple_vicente(d);
  tuple.kind = TupleKind::Sarbicki;
  tuple.traces[0] = std::sqrt(2.0 * d) * h;
  return tuple;
}

MeasurementTuple tuple_simplex(int d, double t) {
  if (d < 2) {
    throw InvalidArgumentError("tuple_simplex: d must be >= 2");
  }
  MeasurementTuple tuple;
  tuple.dim = d;
  tuple.kind = TupleKind::Simplex;
  tuple.traces = RealVector::Constant(d * d, t);
  tuple.bloch_columns = simplex_vertices(d * d - 1);
  return tuple;
}

RealMatrix omega_matrix(const MeasurementTuple& tuple) {
  return 2.0 * tuple.bloch_columns.transpose() * tuple.bloch_columns;
}

MibsScale beta_bound(const MeasurementTuple& tuple) {
  if (!tuple.balanced()) {
    throw NotBalancedError("beta_bound: sum t_mu a_mu != 0");
  }
  const double d = tuple.dim;
  MibsScale scale;
  switch (tuple.kind) {
    case TupleKind::Vicente:
    case TupleKind::Sarbicki:
      scale.beta = 2.0 * (d - 1.0) / d;
      scale.beta_is_exact = true;
      break;
    case TupleKind::Simplex:
      scale.beta = 2.0 * d / (d + 1.0);
      scale.beta_is_exact = true;
      break;
    case TupleKind::Custom: {
      // Hyper-ellipsoid bound with the pure-state purity Tr[rho^2] = 1.
      Eigen::SelfAdjointEigenSolver<RealMatrix> solver(omega_matrix(tuple),
                                                       Eigen::EigenvaluesOnly);
      scale.beta = (d - 1.0) / d * solver.eigenvalues().maxCoeff();
      scale.beta_is_exact = false;
      break;
    }
  }
  scale.kappa = std::sqrt(tuple.traces.squaredNorm() / (d * d) + scale.beta);
  return scale;
}

RealVector mibv(const ComplexMatrix& rho_subsystem, const MeasurementTuple& tuple) {
  if (rho_subsystem.rows() != tuple.dim) {
    throw DimensionMismatchError("mibv: state dimension " +
                                 std::to_string(rho_subsystem.rows()) +
                                 " does not match tuple dimension " +
                                 std::to_string(tuple.dim));
  }
  const bloch::BlochState r = bloch::state_to_bloch(rho_subsystem);
  return tuple.bloch_columns.transpose() * r.r;
}

RealMatrix moore_penrose_inverse(const RealMatrix& m, double cutoff) {
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(0.5 * (m + m.transpose()));
  RealVector inv = solver.eigenvalues();
  for (Eigen::Index i = 0; i < inv.size(); ++i) {
    inv[i] = std::abs(inv[i]) > cutoff ? 1.0 / inv[i] : 0.0;
  }
  return solver.eigenvectors() * inv.asDiagonal() * solver.eigenvectors().transpose();
}

}  // namespace observables
}  // namespace entdetect
