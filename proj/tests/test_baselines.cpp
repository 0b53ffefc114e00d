#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "hermex/baselines.hpp"
#include "hermex/complex_matrix.hpp"

using namespace hermex;

namespace {

StateVector random_state(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<cplx> amps(std::size_t{1} << n);
  for (cplx& a : amps) a = {g(rng), g(rng)};
  double norm = 0.0;
  for (const cplx& a : amps) norm += std::norm(a);
  norm = std::sqrt(norm);
  for (cplx& a : amps) a /= norm;
  return {n, std::move(amps)};
}

DensityMatrix random_density(int n, std::mt19937_64& rng) {
  const std::size_t dim = std::size_t{1} << n;
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix a(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) a(i, j) = {g(rng), g(rng)};
  ComplexMatrix m = a * a.adjoint();
  const double tr = m.trace().real();
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) /= tr;
  return {n, std::move(m)};
}

double state_infidelity(const StateVector& a, const StateVector& b) {
  return 1.0 - std::norm(overlap(a, b));
}

double fro_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).frobenius_norm();
}

}  // namespace

TEST_CASE("trotter is exact for commuting terms") {
  PauliSum h(2);
  h.add(0.7, PauliString::from_word("ZZ"));
  h.add(-0.4, PauliString::from_word("ZI"));
  h.add(0.2, PauliString::from_word("IZ"));
  std::mt19937_64 rng(1);
  const StateVector input = random_state(2, rng);
  const std::vector<cplx> exact =
      exact_unitary(h.to_dense(), 1.3).apply(input.amplitudes());
  for (int n : {1, 3, 10}) {
    const TrotterResult r = trotter_evolve({h, 1.3, n}, input);
    for (std::size_t i = 0; i < input.dim(); ++i)
      CHECK(std::abs(r.state.amplitude(i) - exact[i]) < 1e-10);
  }
}

TEST_CASE("one step of a single-term plan applies exactly one rotation") {
  PauliSum h(1);
  h.add(0.8, PauliString::from_word("X"));
  const StateVector input(1);
  const TrotterResult r = trotter_evolve({h, 0.5, 1}, input);
  CHECK(r.gate_count == 1);
  StateVector expected = input;
  expected.apply_pauli_rotation(PauliString::from_word("X"), 0.8 * 0.5);
  for (std::size_t i = 0; i < input.dim(); ++i)
    CHECK(std::abs(r.state.amplitude(i) - expected.amplitude(i)) < 1e-15);
}

TEST_CASE("trotter error scaling on a non-commuting Hamiltonian") {
  // First-order product-formula deviation is a coherent unitary rotation of
  // angle O(t^2/n), so the state infidelity scales as 1/n^2: the measured
  // ratio between n and 2n steps sits near 4 (dense-oracle verified).
  PauliSum h(1);
  h.add(0.5, PauliString::from_word("X"));
  h.add(0.5, PauliString::from_word("Z"));
  const StateVector input(1);
  const std::vector<cplx> exact_amp =
      exact_unitary(h.to_dense(), 1.0).apply(input.amplitudes());
  const StateVector exact(1, std::vector<cplx>(exact_amp));

  double prev = -1.0;
  for (int n : {8, 16, 32, 64}) {
    const TrotterResult r = trotter_evolve({h, 1.0, n}, input);
    const double infid = state_infidelity(exact, r.state);
    if (prev > 0.0) {
      const double ratio = prev / infid;
      CHECK(ratio > 3.5);
      CHECK(ratio < 4.5);
    }
    prev = infid;
  }
}

TEST_CASE("trotter infidelity decreases along a doubling ladder") {
  PauliSum h(2);
  h.add(0.5, PauliString::from_word("XI"));
  h.add(0.3, PauliString::from_word("ZZ"));
  h.add(-0.4, PauliString::from_word("IY"));
  std::mt19937_64 rng(2);
  const StateVector input = random_state(2, rng);
  const std::vector<cplx> exact_amp =
      exact_unitary(h.to_dense(), 0.8).apply(input.amplitudes());
  const StateVector exact(2, std::vector<cplx>(exact_amp));
  double prev = 2.0;
  for (int n = 4; n <= 256; n *= 2) {
    const double infid =
        state_infidelity(exact, trotter_evolve({h, 0.8, n}, input).state);
    CHECK(infid <= prev * 1.1);  // monotone up to 10% slack
    prev = infid;
  }
}

TEST_CASE("trotter depth accounting") {
  PauliSum h(2);
  h.add(0.7, PauliString::from_word("ZZ"));
  h.add(0.1, PauliString::from_word("XI"));
  const TrotterResult r = trotter_evolve({h, 0.3, 5}, StateVector(2));
  CHECK(r.gate_count == 10);
  CHECK(r.depth == 5 * 2);  // one pair layer + one local layer per pass
}

TEST_CASE("dme_step leaves commuting diagonal states almost fixed") {
  ComplexMatrix rho_m(2, 2), sigma_m(2, 2);
  rho_m(0, 0) = 0.8;
  rho_m(1, 1) = 0.2;
  sigma_m(0, 0) = 0.3;
  sigma_m(1, 1) = 0.7;
  const DensityMatrix rho(1, rho_m), sigma(1, sigma_m);
  for (double dt : {0.05, 0.01}) {
    const DensityMatrix out = dme_step(rho, sigma, dt);
    CHECK(fro_distance(out.matrix(), sigma.matrix()) <= 2.0 * dt * dt);
  }
}

TEST_CASE("dme_step at dt=0 returns sigma exactly") {
  std::mt19937_64 rng(5);
  const DensityMatrix rho = random_density(1, rng);
  const DensityMatrix sigma = random_density(1, rng);
  const DensityMatrix out = dme_step(rho, sigma, 0.0);
  CHECK(fro_distance(out.matrix(), sigma.matrix()) < 1e-14);
}

TEST_CASE("dme_step matches the first-order commutator law") {
  std::mt19937_64 rng(7);
  const DensityMatrix rho = random_density(1, rng);
  const DensityMatrix sigma = random_density(1, rng);
  const ComplexMatrix comm =
      rho.matrix() * sigma.matrix() - sigma.matrix() * rho.matrix();
  const double dt = 1e-3;
  const DensityMatrix out = dme_step(rho, sigma, dt);
  const ComplexMatrix firstOrder =
      sigma.matrix() - cplx{0.0, dt} * comm;
  CHECK(fro_distance(out.matrix(), firstOrder) <= 10.0 * dt * dt);
}

TEST_CASE("dme_step outputs a valid density matrix") {
  std::mt19937_64 rng(11);
  const DensityMatrix rho = random_density(2, rng);
  const DensityMatrix sigma = random_density(2, rng);
  const DensityMatrix out = dme_step(rho, sigma, 0.2);
  CHECK(std::abs(out.matrix().trace() - cplx{1.0, 0.0}) < 1e-10);
  CHECK(out.matrix().hermiticity_defect() < 1e-10);
  // PSD within -1e-9 is enforced by the DensityMatrix constructor itself.
}

TEST_CASE("dme fixed point") {
  ComplexMatrix zero(2, 2);
  zero(0, 0) = 1.0;
  const DensityMatrix rho(1, zero);
  const DmeResult r = dme_evolve({rho, rho, 0.7, 8});
  CHECK(fro_distance(r.state.matrix(), rho.matrix()) < 1e-10);
  CHECK(r.copies_used == 8);
  CHECK(r.depth == 8);
}

TEST_CASE("dme_evolve with one copy equals a single step") {
  std::mt19937_64 rng(13);
  const DensityMatrix rho = random_density(1, rng);
  const DensityMatrix sigma = random_density(1, rng);
  const DmeResult r = dme_evolve({rho, sigma, 0.31, 1});
  const DensityMatrix step = dme_step(rho, sigma, 0.31);
  CHECK(fro_distance(r.state.matrix(), step.matrix()) < 1e-14);
}

TEST_CASE("dme deviation from the exact conjugation halves as n doubles") {
  PauliSum bell(2);
  bell.add(0.25, PauliString::from_word("II"));
  bell.add(0.25, PauliString::from_word("ZZ"));
  bell.add(0.25, PauliString::from_word("XX"));
  bell.add(-0.25, PauliString::from_word("YY"));
  const DensityMatrix rho(2, bell.to_dense());
  std::mt19937_64 rng(17);
  const DensityMatrix sigma = random_density(2, rng);

  const double t = 0.2;
  const ComplexMatrix u = exact_unitary(rho.matrix(), t);
  const ComplexMatrix exact = u * sigma.matrix() * u.adjoint();

  double prev = -1.0;
  for (int n : {16, 32, 64}) {
    const DmeResult r = dme_evolve({rho, sigma, t, n});
    const double dist = fro_distance(r.state.matrix(), exact);
    if (prev > 0.0) {
      const double ratio = prev / dist;
      CHECK(ratio > 1.5);
      CHECK(ratio < 2.5);
    }
    prev = dist;
  }
}

TEST_CASE("dimension mismatches are rejected") {
  std::mt19937_64 rng(19);
  const DensityMatrix a = random_density(1, rng);
  const DensityMatrix b = random_density(2, rng);
  CHECK_THROWS_AS(dme_step(a, b, 0.1), std::invalid_argument);
  PauliSum h(2);
  h.add(1.0, PauliString::from_word("ZZ"));
  CHECK_THROWS_AS(trotter_evolve({h, 1.0, 0}, StateVector(2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(trotter_evolve({h, 1.0, 4}, StateVector(1)),
                  std::invalid_argument);
}
