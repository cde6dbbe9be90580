#include "entdetect/bloch.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <string>

namespace entdetect {

BipartiteState make_state(int dim_a, int dim_b, ComplexMatrix rho) {
  BipartiteState state{dim_a, dim_b, std::move(rho)};
  validate_state(state);
  return state;
}

void validate_state(const BipartiteState& state, double tol) {
  const Eigen::Index n = static_cast<Eigen::Index>(state.dim_a) * state.dim_b;
  if (state.dim_a < 1 || state.dim_b < 1 || state.rho.rows() != n ||
      state.rho.cols() != n) {
    throw InvalidStateError("state: dimension mismatch");
  }
  if (!state.rho.allFinite()) {
    throw InvalidStateError("state: non-finite entries");
  }
  if (std::abs(state.rho.trace().real() - 1.0) > tol ||
      std::abs(state.rho.trace().imag()) > tol) {
    throw InvalidStateError("state: trace differs from 1");
  }
  const double asym = (state.rho - state.rho.adjoint()).cwiseAbs().maxCoeff();
  if (asym > tol) {
    throw InvalidStateError("state: not Hermitian, asymmetry " +
                            std::to_string(asym));
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(
      state.rho, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -tol) {
    throw InvalidStateError("state: negative eigenvalue " +
                            std::to_string(solver.eigenvalues().minCoeff()));
  }
}

namespace bloch {

namespace {

GeneratorBasis build_generators(int d) {
  GeneratorBasis basis;
  basis.dim = d;
  basis.generators.reserve(static_cast<size_t>(d) * d - 1);
  const Complex i_unit(0.0, 1.0);
  // Symmetric pairs: E_jk + E_kj for j < k.
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      ComplexMatrix g = ComplexMatrix::Zero(d, d);
      g(j, k) = 1.0;
      g(k, j) = 1.0;
      basis.generators.push_back(std::move(g));
    }
  }
  // Antisymmetric pairs: -i (E_jk - E_kj) for j < k.
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      ComplexMatrix g = ComplexMatrix::Zero(d, d);
      g(j, k) = -i_unit;
      g(k, j) = i_unit;
      basis.generators.push_back(std::move(g));
    }
  }
  // Diagonal: sqrt(2/(l(l+1))) (sum_{j<l} E_jj - l E_ll).
  for (int l = 1; l < d; ++l) {
    ComplexMatrix g = ComplexMatrix::Zero(d, d);
    const double scale = std::sqrt(2.0 / (static_cast<double>(l) * (l + 1)));
    for (int j = 0; j < l; ++j) {
      g(j, j) = scale;
    }
    g(l, l) = -scale * l;
    basis.generators.push_back(std::move(g));
  }
  return basis;
}

// Columns are vec(Pi_mu) with vec index j*d + i for entry (j, i); used to
// evaluate Tr[rho (X x Y)] as a bilinear form over the realigned state.
const ComplexMatrix& vec_basis(int d) {
  static std::mutex mutex;
  static std::map<int, ComplexMatrix> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(d);
  if (it != cache.end()) {
    return it->second;
  }
  const GeneratorBasis& basis = su_generators(d);
  ComplexMatrix w(d * d, d * d);
  const double pi0 = std::sqrt(2.0 / d);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) {
      w(j * d + i, 0) = (i == j) ? pi0 : 0.0;
    }
  }
  for (int mu = 1; mu < d * d; ++mu) {
    const ComplexMatrix& g = basis.generators[mu - 1];
    for (int j = 0; j < d; ++j) {
      for (int i = 0; i < d; ++i) {
        w(j * d + i, mu) = g(j, i);
      }
    }
  }
  it = cache.emplace(d, std::move(w)).first;
  return it->second;
}

// R[(jA dA + iA), (jB dB + iB)] = rho[(iA dB + iB), (jA dB + jB)]
ComplexMatrix realign(const ComplexMatrix& rho, int dim_a, int dim_b) {
  ComplexMatrix r(dim_a * dim_a, dim_b * dim_b);
  for (int ja = 0; ja < dim_a; ++ja) {
    for (int ia = 0; ia < dim_a; ++ia) {
      for (int jb = 0; jb < dim_b; ++jb) {
        for (int ib = 0; ib < dim_b; ++ib) {
          r(ja * dim_a + ia, jb * dim_b + ib) =
              rho(ia * dim_b + ib, ja * dim_b + jb);
        }
      }
    }
  }
  return r;
}

void require_hermitian(const ComplexMatrix& m, const char* op) {
  if (m.rows() != m.cols()) {
    throw NonSquareError(std::string(op) + ": non-square input");
  }
  const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (asym > kHermitianTol) {
    throw NotHermitianError(std::string(op) + ": asymmetry " +
                            std::to_string(asym));
  }
}

}  // namespace

const GeneratorBasis& su_generators(int d) {
  if (d < 2) {
    throw InvalidArgumentError("su_generators: d must be >= 2");
  }
  static std::mutex mutex;
  static std::map<int, GeneratorBasis> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(d);
  if (it == cache.end()) {
    it = cache.emplace(d, build_generators(d)).first;
  }
  return it->second;
}

BlochState state_to_bloch(const ComplexMatrix& rho) {
  require_hermitian(rho, "state_to_bloch");
  const int d = static_cast<int>(rho.rows());
  if (std::abs(rho.trace().real() - 1.0) > 1e-8) {
    throw InvalidStateError("state_to_bloch: trace differs from 1");
  }
  const GeneratorBasis& basis = su_generators(d);
  RealVector r(d * d - 1);
  for (int mu = 0; mu < d * d - 1; ++mu) {
    r[mu] = (rho * basis.generators[mu]).trace().real();
  }
  return {d, std::move(r)};
}

ComplexMatrix bloch_to_state(const RealVector& r, int d) {
  if (r.size() != static_cast<Eigen::Index>(d) * d - 1) {
    throw DimensionMismatchError("bloch_to_state: wrong vector length");
  }
  const GeneratorBasis& basis = su_generators(d);
  ComplexMatrix rho = ComplexMatrix::Identity(d, d) / static_cast<double>(d);
  for (int mu = 0; mu < d * d - 1; ++mu) {
    rho += 0.5 * r[mu] * basis.generators[mu];
  }
  return rho;
}

std::pair<double, RealVector> observable_to_bloch(const ComplexMatrix& a) {
  require_hermitian(a, "observable_to_bloch");
  const int d = static_cast<int>(a.rows());
  const GeneratorBasis& basis = su_generators(d);
  const double t = a.trace().real();
  RealVector coeffs(d * d - 1);
  for (int mu = 0; mu < d * d - 1; ++mu) {
    coeffs[mu] = 0.5 * (a * basis.generators[mu]).trace().real();
  }
  return {t, std::move(coeffs)};
}

ComplexMatrix bloch_to_observable(double t, const RealVector& a, int d) {
  if (a.size() != static_cast<Eigen::Index>(d) * d - 1) {
    throw DimensionMismatchError("bloch_to_observable: wrong vector length");
  }
  const GeneratorBasis& basis = su_generators(d);
  ComplexMatrix out = ComplexMatrix::Identity(d, d) * (t / d);
  for (int mu = 0; mu < d * d - 1; ++mu) {
    out += a[mu] * basis.generators[mu];
  }
  return out;
}

BipartiteBloch decompose_bipartite(const BipartiteState& state) {
  const int da = state.dim_a;
  const int db = state.dim_b;
  if (state.rho.rows() != static_cast<Eigen::Index>(da) * db) {
    throw DimensionMismatchError("decompose_bipartite: dimension mismatch");
  }
  const ComplexMatrix r = realign(state.rho, da, db);
  const ComplexMatrix chi_c =
      vec_basis(da).transpose() * r * vec_basis(db);
  BipartiteBloch out;
  out.dim_a = da;
  out.dim_b = db;
  out.chi = chi_c.real();
  out.a = out.chi.block(1, 0, da * da - 1, 1) * std::sqrt(db / 2.0);
  out.b = out.chi.block(0, 1, 1, db * db - 1).transpose() * std::sqrt(da / 2.0);
  out.t = out.chi.block(1, 1, da * da - 1, db * db - 1);
  return out;
}

ComplexMatrix compose_bipartite(const BipartiteBloch& coeffs) {
  const int da = coeffs.dim_a;
  const int db = coeffs.dim_b;
  // Invert the realignment of chi = W_A^T R W_B using W^T W = 2 I.
  const ComplexMatrix r = vec_basis(da).conjugate() * coeffs.chi.cast<Complex>() *
                          vec_basis(db).adjoint() / 4.0;
  ComplexMatrix rho(da * db, da * db);
  for (int ja = 0; ja < da; ++ja) {
    for (int ia = 0; ia < da; ++ia) {
      for (int jb = 0; jb < db; ++jb) {
        for (int ib = 0; ib < db; ++ib) {
          rho(ia * db + ib, ja * db + jb) =
              r(ja * da + ia, jb * db + ib);
        }
      }
    }
  }
  return rho;
}

}  // namespace bloch
}  // namespace entdetect
