#include "entdetect/linalg.hpp"

#include <cmath>
#include <string>

namespace entdetect {
namespace linalg {

namespace {

void require_finite(const RealMatrix& m, const char* op) {
  if (!m.allFinite()) {
    throw InvalidArgumentError(std::string(op) + ": non-finite entries");
  }
}

void require_finite(const ComplexMatrix& m, const char* op) {
  if (!m.allFinite()) {
    throw InvalidArgumentError(std::string(op) + ": non-finite entries");
  }
}

void require_composite(const ComplexMatrix& rho, int dim_a, int dim_b,
                       const char* op) {
  const Eigen::Index n = static_cast<Eigen::Index>(dim_a) * dim_b;
  if (dim_a < 1 || dim_b < 1 || rho.rows() != n || rho.cols() != n) {
    throw DimensionMismatchError(std::string(op) + ": expected " +
                                 std::to_string(dim_a) + "x" +
                                 std::to_string(dim_b) + " composite");
  }
}

}  // namespace

HermitianEig hermitian_eig(const ComplexMatrix& h) {
  require_finite(h, "hermitian_eig");
  if (h.rows() != h.cols()) {
    throw NonSquareError("hermitian_eig: matrix is " +
                         std::to_string(h.rows()) + "x" +
                         std::to_string(h.cols()));
  }
  const double asym = (h - h.adjoint()).cwiseAbs().maxCoeff();
  if (asym > kHermitianTol) {
    throw NotHermitianError("hermitian_eig: asymmetry " + std::to_string(asym));
  }
  const ComplexMatrix sym = 0.5 * (h + h.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw Error("hermitian_eig: eigensolver failed to converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

RealSvd svd_real(const RealMatrix& m) {
  require_finite(m, "svd_real");
  Eigen::JacobiSVD<RealMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return {svd.matrixU(), svd.singularValues(), svd.matrixV()};
}

double trace_norm(const RealMatrix& m) {
  require_finite(m, "trace_norm");
  Eigen::JacobiSVD<RealMatrix> svd(m);
  return svd.singularValues().sum();
}

double trace_norm(const ComplexMatrix& m) {
  require_finite(m, "trace_norm");
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues().sum();
}

ComplexMatrix psd_sqrt(const ComplexMatrix& h) {
  HermitianEig eig = hermitian_eig(h);
  RealVector roots(eig.eigenvalues.size());
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
    const double lambda = eig.eigenvalues[i];
    if (lambda < -kPsdClampTol) {
      throw NotPsdError("psd_sqrt: eigenvalue " + std::to_string(lambda));
    }
    roots[i] = std::sqrt(std::max(lambda, 0.0));
  }
  return eig.eigenvectors * roots.asDiagonal() * eig.eigenvectors.adjoint();
}

RealMatrix psd_sqrt(const RealMatrix& s) {
  return psd_sqrt(ComplexMatrix(s.cast<Complex>())).real();
}

ComplexMatrix psd_inv_sqrt(const ComplexMatrix& h, double cutoff) {
  HermitianEig eig = hermitian_eig(h);
  RealVector roots(eig.eigenvalues.size());
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
    const double lambda = eig.eigenvalues[i];
    if (lambda <= cutoff) {
      throw SingularBelowCutoffError("psd_inv_sqrt: eigenvalue " +
                                     std::to_string(lambda) + " below cutoff " +
                                     std::to_string(cutoff));
    }
    roots[i] = 1.0 / std::sqrt(lambda);
  }
  return eig.eigenvectors * roots.asDiagonal() * eig.eigenvectors.adjoint();
}

ComplexMatrix kron(const ComplexMatrix& x, const ComplexMatrix& y) {
  ComplexMatrix out(x.rows() * y.rows(), x.cols() * y.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, int dim_a, int dim_b,
                            Subsystem side) {
  require_composite(rho, dim_a, dim_b, "partial_trace");
  if (side == Subsystem::B) {
    ComplexMatrix out = ComplexMatrix::Zero(dim_a, dim_a);
    for (int ia = 0; ia < dim_a; ++ia) {
      for (int ja = 0; ja < dim_a; ++ja) {
        Complex sum = 0.0;
        for (int k = 0; k < dim_b; ++k) {
          sum += rho(ia * dim_b + k, ja * dim_b + k);
        }
        out(ia, ja) = sum;
      }
    }
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(dim_b, dim_b);
  for (int ib = 0; ib < dim_b; ++ib) {
    for (int jb = 0; jb < dim_b; ++jb) {
      Complex sum = 0.0;
      for (int k = 0; k < dim_a; ++k) {
        sum += rho(k * dim_b + ib, k * dim_b + jb);
      }
      out(ib, jb) = sum;
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, int dim_a, int dim_b,
                                Subsystem side) {
  require_composite(rho, dim_a, dim_b, "partial_transpose");
  ComplexMatrix out(rho.rows(), rho.cols());
  for (int ia = 0; ia < dim_a; ++ia) {
    for (int ja = 0; ja < dim_a; ++ja) {
      for (int ib = 0; ib < dim_b; ++ib) {
        for (int jb = 0; jb < dim_b; ++jb) {
          if (side == Subsystem::B) {
            out(ia * dim_b + jb, ja * dim_b + ib) = rho(ia * dim_b + ib, ja * dim_b + jb);
          } else {
            out(ja * dim_b + ib, ia * dim_b + jb) = rho(ia * dim_b + ib, ja * dim_b + jb);
          }
        }
      }
    }
  }
  return out;
}

}  // namespace linalg
}  // namespace entdetect
