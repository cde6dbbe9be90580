#pragma once

#include <utility>

#include "entdetect/criteria.hpp"
#include "entdetect/observables.hpp"

namespace entdetect {
namespace witness {

// Singular values at or below this do not count toward the witness rank.
inline constexpr double kRankCutoff = 1e-12;

// W = kappa I - sum_{mu <= r} A'_mu x B'_mu with Tr[W rho] = kappa - ||C||_tr
// for the state the correlation matrix came from.
struct Witness {
  ComplexMatrix op;
  double kappa = 0.0;
  MeasurementTuple optimal_a;
  MeasurementTuple optimal_b;
  int rank = 0;
};

// Copy of the tuple extended to m observables by appending zero operators.
MeasurementTuple pad_tuple(const MeasurementTuple& tuple, int m);

// Rotates the tuples by the SVD factors of C (the shorter tuple is
// zero-padded first) so that the rotated correlation matrix is diagonal with
// the singular values on the diagonal. Rotation and padding leave kappa and
// balancedness invariant.
std::pair<MeasurementTuple, MeasurementTuple> optimal_observables(
    const criteria::CorrelationMatrix& c);

Witness build_witness(const BipartiteState& state, const MeasurementTuple& a,
                      const MeasurementTuple& b);

// Real part of Tr[W rho]; the imaginary part must vanish to 1e-10.
double witness_expectation(const ComplexMatrix& w, const BipartiteState& state);

}  // namespace witness
}  // namespace entdetect
