#pragma once

#include <utility>
#include <vector>

#include "entdetect/linalg.hpp"

namespace entdetect {

// A bipartite density matrix together with its subsystem dimensions.
// Composite index convention: row = i_A * dim_b + i_B.
struct BipartiteState {
  int dim_a = 0;
  int dim_b = 0;
  ComplexMatrix rho;

  int dim() const { return dim_a * dim_b; }
};

// Validates trace 1, Hermiticity, and positivity (to tolerance); throws
// InvalidStateError otherwise.
BipartiteState make_state(int dim_a, int dim_b, ComplexMatrix rho);
void validate_state(const BipartiteState& state, double tol = 1e-10);

namespace bloch {

// d^2 - 1 traceless Hermitian generators with Tr[pi_mu pi_nu] = 2 delta.
// Ordering is frozen: symmetric pairs (j,k), j < k, lexicographic; then the
// antisymmetric pairs in the same order; then the d - 1 diagonal generators.
// All Bloch coordinates and golden files depend on this ordering.
struct GeneratorBasis {
  int dim;
  std::vector<ComplexMatrix> generators;
};

// Cached per dimension; the returned reference stays valid for program
// lifetime and is safe to share across threads.
const GeneratorBasis& su_generators(int d);

struct BlochState {
  int dim;
  RealVector r;  // length d^2 - 1, r_mu = Tr[rho pi_mu]
};

BlochState state_to_bloch(const ComplexMatrix& rho);
ComplexMatrix bloch_to_state(const RealVector& r, int d);

// Observable convention differs from the state one by a factor 2:
// A = (t/d) I + a . pi with t = Tr[A], a_nu = Tr[A pi_nu] / 2.
std::pair<double, RealVector> observable_to_bloch(const ComplexMatrix& a);
ComplexMatrix bloch_to_observable(double t, const RealVector& a, int d);

// Coefficients of a bipartite state over the product basis Pi_mu x Pi_nu,
// where Pi_0 = sqrt(2/d) I and Pi_mu = pi_mu for mu >= 1.
struct BipartiteBloch {
  int dim_a;
  int dim_b;
  RealMatrix chi;  // dA^2 x dB^2, chi(0,0) = 2/sqrt(dA dB)
  RealVector a;    // local Bloch vector of A, length dA^2 - 1
  RealVector b;    // local Bloch vector of B, length dB^2 - 1
  RealMatrix t;    // dA^2-1 x dB^2-1, T_mu_nu = Tr[rho pi_mu x pi_nu]
};

BipartiteBloch decompose_bipartite(const BipartiteState& state);

// Reconstructs rho = 1/4 sum chi_mu_nu Pi_mu x Pi_nu (inverse of the above).
ComplexMatrix compose_bipartite(const BipartiteBloch& coeffs);

}  // namespace bloch
}  // namespace entdetect
