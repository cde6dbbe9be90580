#include "entdetect/states.hpp"

#include <cmath>
#include <string>

#include "entdetect/errors.hpp"

namespace entdetect {
namespace states {

BipartiteState werner(int d, double phi) {
  if (d < 2) {
    throw InvalidArgumentError("werner: d must be >= 2");
  }
  if (phi < -1.0 || phi > 1.0) {
    throw InvalidArgumentError("werner: phi must lie in [-1, 1]");
  }
  const bloch::GeneratorBasis& basis = bloch::su_generators(d);
  const int n = d * d;
  const double coeff = 2.0 * (d * phi - 1.0) / (d * (d * d - 1.0));
  ComplexMatrix rho = ComplexMatrix::Identity(n, n) / static_cast<double>(n);
  for (const ComplexMatrix& g : basis.generators) {
    rho += 0.25 * coeff * linalg::kron(g, g);
  }
  return make_state(d, d, std::move(rho));
}

BipartiteState horodecki(double s, double p) {
  if (s < 0.0 || s > 1.0 || p < 0.0 || p > 1.0) {
    throw InvalidArgumentError("horodecki: s and p must lie in [0, 1]");
  }
  ComplexMatrix core = ComplexMatrix::Zero(9, 9);
  for (int i = 0; i < 9; ++i) {
    core(i, i) = s;
  }
  for (int i : {0, 4, 8}) {
    for (int j : {0, 4, 8}) {
      core(i, j) = s;
    }
  }
  core(6, 6) = 0.5 * (1.0 + s);
  core(8, 8) = 0.5 * (1.0 + s);
  core(6, 8) = 0.5 * std::sqrt(1.0 - s * s);
  core(8, 6) = core(6, 8);
  core /= 8.0 * s + 1.0;
  ComplexMatrix rho =
      p * core + (1.0 - p) / 9.0 * ComplexMatrix::Identity(9, 9);
  return make_state(3, 3, std::move(rho));
}

BipartiteState upb_tiles(double p) {
  if (p < 0.0 || p > 1.0) {
    throw InvalidArgumentError("upb_tiles: p must lie in [0, 1]");
  }
  const double r2 = 1.0 / std::sqrt(2.0);
  Eigen::VectorXcd psi[5];
  for (auto& v : psi) {
    v = Eigen::VectorXcd::Zero(9);
  }
  psi[0][0] = r2;          // |0>(|0> - |1>)
  psi[0][1] = -r2;
  psi[1][2] = r2;          // (|0> - |1>)|2>
  psi[1][5] = -r2;
  psi[2][7] = r2;          // |2>(|1> - |2>)
  psi[2][8] = -r2;
  psi[3][3] = r2;          // (|1> - |2>)|0>
  psi[3][6] = -r2;
  psi[4] = Eigen::VectorXcd::Constant(9, 1.0 / 3.0);
  ComplexMatrix core = ComplexMatrix::Identity(9, 9);
  for (const auto& v : psi) {
    core -= v * v.adjoint();
  }
  core /= 4.0;
  ComplexMatrix rho =
      p * core + (1.0 - p) / 9.0 * ComplexMatrix::Identity(9, 9);
  return make_state(3, 3, std::move(rho));
}

BipartiteState chessboard(double m, double n, double a, double b, double c,
                          double dd) {
  if (m == 0.0 || n == 0.0) {
    throw ZeroDenominatorError("chessboard: m and n must be nonzero");
  }
  Eigen::VectorXd v1(9), v2(9), v3(9), v4(9);
  v1 << m, 0, a * c / n, 0, n, 0, 0, 0, 0;
  v2 << 0, a, 0, b, 0, c, 0, 0, 0;
  v3 << n, 0, 0, 0, -m, 0, a * dd / m, 0, 0;
  v4 << 0, b, 0, -a, 0, 0, 0, dd, 0;
  RealMatrix sum = v1 * v1.transpose() + v2 * v2.transpose() +
                   v3 * v3.transpose() + v4 * v4.transpose();
  const double norm = v1.squaredNorm() + v2.squaredNorm() + v3.squaredNorm() +
                      v4.squaredNorm();
  if (norm == 0.0) {
    throw InvalidArgumentError("chessboard: all kets vanish");
  }
  return make_state(3, 3, (sum / norm).cast<Complex>());
}

BipartiteState random_chessboard(std::uint64_t seed, std::uint64_t index) {
  CounterRng rng(seed, stream::kChessboard, index);
  while (true) {
    const double m = rng.next_gaussian();
    const double n = rng.next_gaussian();
    const double a = rng.next_gaussian();
    const double b = rng.next_gaussian();
    const double c = rng.next_gaussian();
    const double dd = rng.next_gaussian();
    if (std::abs(m) < 1e-6 || std::abs(n) < 1e-6) {
      continue;
    }
    return chessboard(m, n, a, b, c, dd);
  }
}

BipartiteState random_hs(int dim_a, int dim_b, std::uint64_t seed,
                         std::uint64_t index) {
  if (dim_a < 2 || dim_b < 2) {
    throw InvalidArgumentError("random_hs: dimensions must be >= 2");
  }
  const int n = dim_a * dim_b;
  CounterRng rng(seed, stream::kHilbertSchmidt, index);
  ComplexMatrix g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      g(i, j) = rng.next_complex_gaussian();
    }
  }
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return make_state(dim_a, dim_b, std::move(rho));
}

ComplexMatrix random_pure(int d, CounterRng& rng) {
  Eigen::VectorXcd psi(d);
  for (int i = 0; i < d; ++i) {
    psi[i] = rng.next_complex_gaussian();
  }
  psi.normalize();
  return psi * psi.adjoint();
}

BipartiteState random_separable(int dim_a, int dim_b, int k, std::uint64_t seed,
                                std::uint64_t index) {
  if (k < 1) {
    throw InvalidArgumentError("random_separable: k must be >= 1");
  }
  CounterRng rng(seed, stream::kSeparable, index);
  // Dirichlet(1, ..., 1) weights via normalized exponentials.
  RealVector weights(k);
  for (int i = 0; i < k; ++i) {
    const double u = (static_cast<double>(rng.next_u64() >> 11) + 1.0) * 0x1.0p-53;
    weights[i] = -std::log(u);
  }
  weights /= weights.sum();
  const int n = dim_a * dim_b;
  ComplexMatrix rho = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < k; ++i) {
    const ComplexMatrix factor_a = random_pure(dim_a, rng);
    const ComplexMatrix factor_b = random_pure(dim_b, rng);
    rho += weights[i] * linalg::kron(factor_a, factor_b);
  }
  return make_state(dim_a, dim_b, std::move(rho));
}

BipartiteState max_entangled(int d) {
  if (d < 2) {
    throw InvalidArgumentError("max_entangled: d must be >= 2");
  }
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(d * d);
  for (int i = 0; i < d; ++i) {
    psi[i * d + i] = 1.0 / std::sqrt(static_cast<double>(d));
  }
  return make_state(d, d, psi * psi.adjoint());
}

}  // namespace states
}  // namespace entdetect
