#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <utility>

#include "entdetect/bloch.hpp"
#include "entdetect/errors.hpp"
#include "entdetect/linalg.hpp"
#include "entdetect/rng.hpp"
#include "test_util.hpp"

using namespace entdetect;
using testutil::max_abs;

namespace {

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

}  // namespace

TEST_CASE("generators for d=2 are the Pauli matrices in x,y,z order") {
  const auto& basis = bloch::su_generators(2);
  REQUIRE(basis.generators.size() == 3);
  CHECK(max_abs(basis.generators[0] - pauli_x()) < 1e-15);
  CHECK(max_abs(basis.generators[1] - pauli_y()) < 1e-15);
  CHECK(max_abs(basis.generators[2] - pauli_z()) < 1e-15);
}

TEST_CASE("generators are traceless Hermitian with Gram 2*delta") {
  for (int d = 2; d <= 9; ++d) {
    const auto& gen = bloch::su_generators(d).generators;
    REQUIRE(gen.size() == static_cast<std::size_t>(d * d - 1));
    for (std::size_t i = 0; i < gen.size(); ++i) {
      CHECK(std::abs(gen[i].trace()) < 1e-14);
      CHECK(max_abs(gen[i] - gen[i].adjoint()) < 1e-14);
      for (std::size_t j = i; j < gen.size(); ++j) {
        const double want = i == j ? 2.0 : 0.0;
        const Complex overlap = (gen[i] * gen[j]).trace();
        CHECK(std::abs(overlap - want) < 1e-13);
      }
    }
  }
}

TEST_CASE("generators satisfy the quadratic Casimir identity") {
  // sum_mu pi_mu^2 = 2 (d^2 - 1) / d * identity.
  for (int d : {2, 3, 4, 5}) {
    const auto& gen = bloch::su_generators(d).generators;
    ComplexMatrix sum = ComplexMatrix::Zero(d, d);
    for (const auto& g : gen) sum += g * g;
    const double casimir = 2.0 * (d * d - 1) / d;
    CHECK(max_abs(sum - casimir * ComplexMatrix::Identity(d, d)) < 1e-12);
  }
}

TEST_CASE("Bloch vector of |0><0| is (0,0,1)") {
  ComplexMatrix rho = ComplexMatrix::Zero(2, 2);
  rho(0, 0) = 1.0;
  const auto bs = bloch::state_to_bloch(rho);
  REQUIRE(bs.r.size() == 3);
  CHECK(std::abs(bs.r(0)) < 1e-15);
  CHECK(std::abs(bs.r(1)) < 1e-15);
  CHECK(std::abs(bs.r(2) - 1.0) < 1e-15);
}

TEST_CASE("pure states sit on the sphere of radius sqrt(2(d-1)/d)") {
  CounterRng rng(11, stream::kTest, 0);
  for (int d : {2, 3, 5, 7}) {
    for (int k = 0; k < 5; ++k) {
      Eigen::VectorXcd psi(d);
      for (int i = 0; i < d; ++i) psi(i) = rng.next_complex_gaussian();
      psi.normalize();
      const ComplexMatrix rho = psi * psi.adjoint();
      const double want = std::sqrt(2.0 * (d - 1) / d);
      CHECK(std::abs(bloch::state_to_bloch(rho).r.norm() - want) < 1e-12);
    }
  }
}

TEST_CASE("state round-trips through its Bloch vector") {
  CounterRng rng(12, stream::kTest, 0);
  for (int d : {2, 3, 4, 6}) {
    for (int k = 0; k < 20; ++k) {
      const ComplexMatrix rho = testutil::random_density(d, rng);
      const auto bs = bloch::state_to_bloch(rho);
      CHECK(max_abs(bloch::bloch_to_state(bs.r, d) - rho) < 1e-12);
    }
  }
}

TEST_CASE("observable decomposition round-trips") {
  CounterRng rng(13, stream::kTest, 0);
  for (int d : {2, 3, 5}) {
    for (int k = 0; k < 20; ++k) {
      const ComplexMatrix obs = testutil::random_hermitian(d, rng);
      const auto [t, a] = bloch::observable_to_bloch(obs);
      CHECK(std::abs(t - obs.trace().real()) < 1e-12);
      CHECK(max_abs(bloch::bloch_to_observable(t, a, d) - obs) < 1e-12);
    }
  }
}

TEST_CASE("observable components of identity and sigma_z") {
  const auto [t_id, a_id] =
      bloch::observable_to_bloch(ComplexMatrix::Identity(2, 2));
  CHECK(std::abs(t_id - 2.0) < 1e-15);
  CHECK(a_id.norm() < 1e-15);

  const auto [t_z, a_z] = bloch::observable_to_bloch(pauli_z());
  CHECK(std::abs(t_z) < 1e-15);
  CHECK(std::abs(a_z(0)) < 1e-15);
  CHECK(std::abs(a_z(1)) < 1e-15);
  CHECK(std::abs(a_z(2) - 1.0) < 1e-15);
}

TEST_CASE("product state decomposes with T = rA rB^T") {
  CounterRng rng(14, stream::kTest, 0);
  for (auto [da, db] : {std::pair{2, 2}, {2, 3}, {3, 4}}) {
    const ComplexMatrix rho_a = testutil::random_density(da, rng);
    const ComplexMatrix rho_b = testutil::random_density(db, rng);
    const auto state = make_state(da, db, linalg::kron(rho_a, rho_b));
    const auto dec = bloch::decompose_bipartite(state);
    const RealVector ra = bloch::state_to_bloch(rho_a).r;
    const RealVector rb = bloch::state_to_bloch(rho_b).r;
    CHECK(max_abs(dec.a - ra) < 1e-12);
    CHECK(max_abs(dec.b - rb) < 1e-12);
    CHECK(max_abs(dec.t - ra * rb.transpose()) < 1e-12);
  }
}

TEST_CASE("Bell state has correlation tensor diag(1,-1,1)") {
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(4);
  psi(0) = psi(3) = 1.0 / std::sqrt(2.0);
  const auto state = make_state(2, 2, psi * psi.adjoint());
  const auto dec = bloch::decompose_bipartite(state);
  CHECK(dec.a.norm() < 1e-14);
  CHECK(dec.b.norm() < 1e-14);
  RealMatrix want(3, 3);
  want << 1, 0, 0, 0, -1, 0, 0, 0, 1;
  CHECK(max_abs(dec.t - want) < 1e-13);
}

TEST_CASE("chi carries normalization, marginals, and tensor in its blocks") {
  CounterRng rng(17, stream::kTest, 0);
  for (auto [da, db] : {std::pair{2, 2}, {3, 2}, {3, 3}}) {
    const auto state = make_state(da, db, testutil::random_density(da * db, rng));
    const auto dec = bloch::decompose_bipartite(state);
    REQUIRE(dec.chi.rows() == da * da);
    REQUIRE(dec.chi.cols() == db * db);
    CHECK(std::abs(dec.chi(0, 0) - 2.0 / std::sqrt(double(da * db))) < 1e-13);
    const double scale_a = std::sqrt(2.0 / da);
    const double scale_b = std::sqrt(2.0 / db);
    for (int i = 0; i < da * da - 1; ++i)
      CHECK(std::abs(dec.chi(i + 1, 0) - scale_b * dec.a(i)) < 1e-12);
    for (int j = 0; j < db * db - 1; ++j)
      CHECK(std::abs(dec.chi(0, j + 1) - scale_a * dec.b(j)) < 1e-12);
    for (int i = 0; i < da * da - 1; ++i)
      for (int j = 0; j < db * db - 1; ++j)
        CHECK(std::abs(dec.chi(i + 1, j + 1) - dec.t(i, j)) < 1e-12);
  }
}

TEST_CASE("decompose and compose round-trip") {
  CounterRng rng(16, stream::kTest, 0);
  for (auto [da, db] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    for (int k = 0; k < 25; ++k) {
      const auto state =
          make_state(da, db, testutil::random_density(da * db, rng));
      const auto dec = bloch::decompose_bipartite(state);
      CHECK(max_abs(bloch::compose_bipartite(dec) - state.rho) < 1e-10);
    }
  }
}

TEST_CASE("make_state rejects unphysical inputs") {
  CHECK_THROWS_AS(make_state(1, 3, ComplexMatrix::Identity(3, 3)),
                  InvalidStateError);
  ComplexMatrix not_herm = ComplexMatrix::Zero(2, 2);
  not_herm(0, 0) = 1.0;
  not_herm(0, 1) = 1.0;
  CHECK_THROWS_AS(make_state(1, 2, not_herm), InvalidStateError);
  ComplexMatrix neg(2, 2);
  neg << 1.5, 0, 0, -0.5;
  CHECK_THROWS_AS(make_state(2, 1, neg), InvalidStateError);
  CHECK_THROWS_AS(make_state(4, 2, ComplexMatrix::Identity(6, 6) / 6.0),
                  InvalidStateError);
}
