#pragma once

#include <Eigen/Dense>

#include "entdetect/linalg.hpp"
#include "entdetect/rng.hpp"

namespace testutil {

using entdetect::Complex;
using entdetect::ComplexMatrix;
using entdetect::CounterRng;
using entdetect::RealMatrix;
using entdetect::RealVector;

inline ComplexMatrix random_complex(int rows, int cols, CounterRng& rng) {
  ComplexMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      m(i, j) = rng.next_complex_gaussian();
    }
  }
  return m;
}

inline RealMatrix random_real(int rows, int cols, CounterRng& rng) {
  RealMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      m(i, j) = rng.next_gaussian();
    }
  }
  return m;
}

inline ComplexMatrix random_hermitian(int d, CounterRng& rng) {
  const ComplexMatrix g = random_complex(d, d, rng);
  return 0.5 * (g + g.adjoint());
}

inline ComplexMatrix random_psd(int d, CounterRng& rng) {
  const ComplexMatrix g = random_complex(d, d, rng);
  return g * g.adjoint();
}

inline ComplexMatrix random_density(int d, CounterRng& rng) {
  ComplexMatrix p = random_psd(d, rng);
  p /= p.trace().real();
  return p;
}

inline RealMatrix random_orthogonal(int n, CounterRng& rng) {
  const RealMatrix g = random_real(n, n, rng);
  Eigen::HouseholderQR<RealMatrix> qr(g);
  RealMatrix q = qr.householderQ();
  // Fix the sign convention so Q is a deterministic function of g.
  const RealMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i) {
    if (r(i, i) < 0) {
      q.col(i) *= -1.0;
    }
  }
  return q;
}

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.cwiseAbs().maxCoeff();
}

}  // namespace testutil
