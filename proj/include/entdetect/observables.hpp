#pragma once

#include <vector>

#include "entdetect/bloch.hpp"
#include "entdetect/linalg.hpp"

namespace entdetect {

enum class TupleKind { Vicente, Sarbicki, Simplex, Custom };

// An m-tuple of observables in Bloch form: traces t_mu plus the matrix whose
// columns are the traceless-part coordinates a_mu.
struct MeasurementTuple {
  int dim = 0;
  TupleKind kind = TupleKind::Custom;
  RealVector traces;        // length m
  RealMatrix bloch_columns; // (d^2 - 1) x m

  int size() const { return static_cast<int>(traces.size()); }

  // True when sum_mu t_mu a_mu = 0 (hypothesis of the trace-norm criteria).
  bool balanced(double tol = 1e-10) const;

  // The d^2 x m parameter matrix: first row t_mu / sqrt(2 d), then a_mu.
  RealMatrix m_matrix() const;

  // Materializes the observables A_mu = (t_mu / d) I + a_mu . pi.
  std::vector<ComplexMatrix> operators() const;
};

// Scale parameters of the measurement-induced Bloch space.
struct MibsScale {
  double beta = 0.0;
  bool beta_is_exact = false;
  double kappa = 0.0;  // sqrt(|t|^2 / d^2 + beta)
};

namespace observables {

// Vertices of the regular n-simplex as unit columns of an n x (n+1) matrix;
// Gram matrix ((n+1) delta - 1) / n, columns sum to zero.
RealMatrix simplex_vertices(int n);

// Trace presets recovering the named criteria from the simplex family.
double ccnr_trace(int d);  // sqrt(2d / (d^2 - 1))
double esic_trace(int d);  // sqrt(2d / (d - 1))

MeasurementTuple tuple_vicente(int d);
MeasurementTuple tuple_sarbicki(int d, double h);
MeasurementTuple tuple_simplex(int d, double t);

// Gram matrix of the traceless parts, Omega = 2 A^T A.
RealMatrix omega_matrix(const MeasurementTuple& tuple);

// Exact beta for the named tuple families, otherwise the hyper-ellipsoid
// upper bound (d-1)/d * lambda_max(Omega); kappa follows either way.
MibsScale beta_bound(const MeasurementTuple& tuple);

// Measurement-induced Bloch vector alpha_mu = r . a_mu of a single-system state.
RealVector mibv(const ComplexMatrix& rho_subsystem, const MeasurementTuple& tuple);

// Moore-Penrose inverse of a symmetric PSD matrix via eigendecomposition,
// exposed for ellipsoid membership tests.
RealMatrix moore_penrose_inverse(const RealMatrix& m, double cutoff = 1e-12);

}  // namespace observables
}  // namespace entdetect
