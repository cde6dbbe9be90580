#pragma once

#include <complex>
#include <utility>

#include <Eigen/Dense>

#include "entdetect/errors.hpp"

namespace entdetect {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// Which subsystem of a bipartite composite an operation acts on.
// Composite index convention, fixed project-wide: row = i_A * d_B + i_B.
enum class Subsystem { A, B };

// Tolerance below which a matrix is accepted as Hermitian (max-norm of H - H^dag).
inline constexpr double kHermitianTol = 1e-10;
// Eigenvalues in [-kPsdClampTol, 0) are clamped to zero; anything lower is an error.
inline constexpr double kPsdClampTol = 1e-10;

namespace linalg {

struct HermitianEig {
  RealVector eigenvalues;     // ascending
  ComplexMatrix eigenvectors; // columns, orthonormal
};

struct RealSvd {
  RealMatrix u;               // m x m orthogonal
  RealVector singular_values; // descending, length min(m, n)
  RealMatrix v;               // n x n orthogonal; m = u * sigma * v^T
};

// Eigendecomposition of a Hermitian matrix. The input is symmetrized as
// (H + H^dag)/2 first; asymmetry above kHermitianTol is an error.
HermitianEig hermitian_eig(const ComplexMatrix& h);

RealSvd svd_real(const RealMatrix& m);

// Sum of singular values, Tr[sqrt(M^T M)].
double trace_norm(const RealMatrix& m);
double trace_norm(const ComplexMatrix& m);

// Principal square root of a positive semidefinite Hermitian matrix.
// Eigenvalues in [-kPsdClampTol, 0) are treated as zero.
ComplexMatrix psd_sqrt(const ComplexMatrix& h);
RealMatrix psd_sqrt(const RealMatrix& s);

// Inverse square root; every eigenvalue must exceed `cutoff`.
ComplexMatrix psd_inv_sqrt(const ComplexMatrix& h, double cutoff = 1e-10);

ComplexMatrix kron(const ComplexMatrix& x, const ComplexMatrix& y);

// Traces out the subsystem named by `side` (side = B keeps the A factor).
ComplexMatrix partial_trace(const ComplexMatrix& rho, int dim_a, int dim_b,
                            Subsystem side);

// Transposes the subsystem named by `side`.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, int dim_a, int dim_b,
                                Subsystem side);

}  // namespace linalg
}  // namespace entdetect
