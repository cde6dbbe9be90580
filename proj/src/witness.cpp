#include "entdetect/witness.hpp"

#include <cmath>
#include <utility>
#include <vector>

#include "entdetect/errors.hpp"

namespace entdetect {
namespace witness {

MeasurementTuple pad_tuple(const MeasurementTuple& tuple, int m) {
  if (tuple.size() > m) {
    throw InvalidArgumentError("pad_tuple: tuple already larger than target");
  }
  MeasurementTuple out = tuple;
  if (tuple.size() == m) {
    return out;
  }
  out.traces = RealVector::Zero(m);
  out.traces.head(tuple.size()) = tuple.traces;
  out.bloch_columns = RealMatrix::Zero(tuple.bloch_columns.rows(), m);
  out.bloch_columns.leftCols(tuple.size()) = tuple.bloch_columns;
  return out;
}

namespace {

// M' = M O for orthogonal O: traces' = O^T t, columns' = A O. Padding and
// rotation preserve |t|, the MIBS (hence beta and kappa), and balancedness,
// so the tuple kind is kept.
MeasurementTuple rotate_tuple(const MeasurementTuple& tuple,
                              const RealMatrix& o) {
  MeasurementTuple out = tuple;
  out.traces = o.transpose() * tuple.traces;
  out.bloch_columns = tuple.bloch_columns * o;
  return out;
}

}  // namespace

std::pair<MeasurementTuple, MeasurementTuple> optimal_observables(
    const criteria::CorrelationMatrix& c) {
  const int m = std::max(c.tuple_a.size(), c.tuple_b.size());
  const MeasurementTuple a = pad_tuple(c.tuple_a, m);
  const MeasurementTuple b = pad_tuple(c.tuple_b, m);
  RealMatrix padded = RealMatrix::Zero(m, m);
  padded.topLeftCorner(c.c.rows(), c.c.cols()) = c.c;
  const linalg::RealSvd svd = linalg::svd_real(padded);
  return {rotate_tuple(a, svd.u), rotate_tuple(b, svd.v)};
}

Witness build_witness(const BipartiteState& state, const MeasurementTuple& a,
                      const MeasurementTuple& b) {
  const MibsScale scale_a = observables::beta_bound(a);
  const MibsScale scale_b = observables::beta_bound(b);
  const criteria::CorrelationMatrix c =
      criteria::correlation_matrix(state, a, b);

  const int m = std::max(a.size(), b.size());
  RealMatrix padded = RealMatrix::Zero(m, m);
  padded.topLeftCorner(c.c.rows(), c.c.cols()) = c.c;
  const linalg::RealSvd svd = linalg::svd_real(padded);

  Witness out;
  out.kappa = scale_a.kappa * scale_b.kappa;
  out.optimal_a = rotate_tuple(pad_tuple(a, m), svd.u);
  out.optimal_b = rotate_tuple(pad_tuple(b, m), svd.v);
  out.rank = 0;
  for (Eigen::Index i = 0; i < svd.singular_values.size(); ++i) {
    if (svd.singular_values[i] > kRankCutoff) {
      ++out.rank;
    }
  }

  const std::vector<ComplexMatrix> ops_a = out.optimal_a.operators();
  const std::vector<ComplexMatrix> ops_b = out.optimal_b.operators();
  const int n = state.dim();
  out.op = out.kappa * ComplexMatrix::Identity(n, n);
  for (int mu = 0; mu < out.rank; ++mu) {
    out.op -= linalg::kron(ops_a[mu], ops_b[mu]);
  }
  return out;
}

double witness_expectation(const ComplexMatrix& w,
                           const BipartiteState& state) {
  if (w.rows() != state.dim() || w.cols() != state.dim()) {
    throw DimensionMismatchError(
        "witness_expectation: operator does not match state dimension");
  }
  const Complex value = (w * state.rho).trace();
  if (std::abs(value.imag()) >= 1e-10) {
    throw NotHermitianError(
        "witness_expectation: expectation has an imaginary part");
  }
  return value.real();
}

}  // namespace witness
}  // namespace entdetect
