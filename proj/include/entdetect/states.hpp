#pragma once

#include <cstdint>

#include "entdetect/bloch.hpp"
#include "entdetect/rng.hpp"

namespace entdetect {
namespace states {

// Werner state: (1/d^2) I x I + (1/4) sum_mu c(phi) pi_mu x pi_mu with
// c = 2 (d phi - 1) / (d (d^2 - 1)); separable iff phi >= 0.
BipartiteState werner(int d, double phi);

// Horodecki 3x3 bound entangled state mixed with white noise:
// p rho_H(s) + (1 - p) I/9.
BipartiteState horodecki(double s, double p);

// Tiles-UPB 3x3 bound entangled state mixed with white noise.
BipartiteState upb_tiles(double p);

// Chessboard 3x3 state from six real parameters; divides by m and n.
BipartiteState chessboard(double m, double n, double a, double b, double c,
                          double dd);

// Chessboard state with parameters drawn from the standard normal
// distribution, redrawing while |m| or |n| < 1e-6.
BipartiteState random_chessboard(std::uint64_t seed, std::uint64_t index = 0);

// Hilbert-Schmidt random state rho = G G^dag / Tr[G G^dag] with Ginibre G.
// Bit-reproducible per (seed, index).
BipartiteState random_hs(int dim_a, int dim_b, std::uint64_t seed,
                         std::uint64_t index = 0);

// Convex mixture of k Haar-random pure product states with Dirichlet-uniform
// weights; one-sided criteria must never flag these.
BipartiteState random_separable(int dim_a, int dim_b, int k, std::uint64_t seed,
                                std::uint64_t index = 0);

// (1/sqrt(d)) sum_i |ii> as a density matrix.
BipartiteState max_entangled(int d);

// Haar-random pure state of a single d-level system.
ComplexMatrix random_pure(int d, CounterRng& rng);

}  // namespace states
}  // namespace entdetect
