#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <set>

#include "hermex/ansatz.hpp"
#include "hermex/circuit.hpp"
#include "hermex/training.hpp"

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

Circuit random_rotation_circuit(int n, int gates, std::mt19937_64& rng) {
  Circuit c(n);
  const char letters[] = {'I', 'X', 'Y', 'Z'};
  for (int g = 0; g < gates; ++g) {
    std::string w;
    for (int q = 0; q < n; ++q) w.push_back(letters[rng() % 4]);
    if (w.find_first_not_of('I') == std::string::npos) w[0] = 'X';
    c.add_rotation(PauliString::from_word(w), 1.0);
  }
  return c;
}

std::vector<double> random_params(int m, std::mt19937_64& rng) {
  std::vector<double> p(static_cast<std::size_t>(m));
  for (double& v : p) v = 2.0 * uniform_unit(rng) - 1.0;
  return p;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      d = std::max(d, std::abs(a(i, j) - b(i, j)));
  return d;
}

}  // namespace

TEST_CASE("invert undoes a mixed circuit on random states") {
  std::mt19937_64 rng(17);
  Circuit c(3);
  c.add_hadamard(0);
  c.add_rotation(PauliString::from_word("ZZI"), 1.0);
  c.add_cz(1, 2);
  c.add_rotation(PauliString::from_word("IXY"), 0.5);
  const std::vector<double> params = random_params(c.n_params(), rng);
  const Circuit inverse = invert(c, params);
  CHECK(inverse.n_params() == 0);
  for (int trial = 0; trial < 5; ++trial) {
    const StateVector s = random_state(3, rng);
    StateVector t = s;
    c.apply_to(t, params);
    inverse.apply_to(t, {});
    for (std::size_t i = 0; i < s.dim(); ++i)
      CHECK(std::abs(t.amplitude(i) - s.amplitude(i)) < 1e-10);
  }
}

TEST_CASE("double inversion equals the frozen circuit") {
  std::mt19937_64 rng(23);
  const Circuit c = random_rotation_circuit(2, 4, rng);
  const std::vector<double> params = random_params(c.n_params(), rng);
  const Circuit twice = invert(invert(c, params), {});
  const Circuit frozen = c.freeze(params);
  const StateVector s = random_state(2, rng);
  StateVector a = s, b = s;
  twice.apply_to(a, {});
  frozen.apply_to(b, {});
  for (std::size_t i = 0; i < s.dim(); ++i)
    CHECK(std::abs(a.amplitude(i) - b.amplitude(i)) < 1e-12);
}

TEST_CASE("inverting an empty circuit yields an empty circuit") {
  const Circuit empty(2);
  const Circuit inverse = invert(empty, {});
  CHECK(inverse.gates().empty());
  CHECK(inverse.n_params() == 0);
}

TEST_CASE("serialization round trip with parameters") {
  std::mt19937_64 rng(31);
  Circuit c(3);
  c.add_hadamard(1);
  c.add_rotation(PauliString::from_word("ZZI"), 0.25);
  c.add_cz(0, 2);
  c.add_frozen_rotation(PauliString::from_word("IXI"), -0.75);
  const std::vector<double> params = random_params(c.n_params(), rng);

  const std::string text = circuit_to_text(c, params);
  const LoadedCircuit loaded = circuit_from_text(text);
  REQUIRE(loaded.params.has_value());
  REQUIRE(loaded.params->size() == params.size());
  for (std::size_t i = 0; i < params.size(); ++i)
    CHECK((*loaded.params)[i] == params[i]);

  const StateVector s = random_state(3, rng);
  StateVector a = s, b = s;
  c.apply_to(a, params);
  loaded.circuit.apply_to(b, *loaded.params);
  for (std::size_t i = 0; i < s.dim(); ++i)
    CHECK(std::abs(a.amplitude(i) - b.amplitude(i)) < 1e-14);

  CHECK(circuit_to_text(loaded.circuit, *loaded.params) == text);
}

TEST_CASE("serialization rejects malformed text") {
  CHECK_THROWS_AS(circuit_from_text(std::string("H 0\n")), std::runtime_error);
  CHECK_THROWS_AS(circuit_from_text(std::string("circuit 2 0\nH\n")),
                  std::runtime_error);
  CHECK_THROWS_AS(circuit_from_text(std::string("circuit 2 0\nROT ZZ\n")),
                  std::runtime_error);
  CHECK_THROWS_AS(circuit_from_text(std::string("circuit 2 0\nWAT 1\n")),
                  std::runtime_error);
  CHECK_THROWS_AS(circuit_from_text(std::string("")), std::runtime_error);
}

TEST_CASE("apqc encode produces Bell pairs and decode inverts it") {
  const ApqcLayout one = build_apqc(1);
  StateVector s(2);
  one.encode.apply_to(s, {});
  CHECK(std::abs(s.amplitude(0) - 1.0 / std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(s.amplitude(3) - 1.0 / std::sqrt(2.0)) < 1e-12);

  const ApqcLayout two = build_apqc(2);
  StateVector t(4);
  two.encode.apply_to(t, {});
  // Overlap with (1/2) sum_i |i>_S |i>_A.
  cplx ov = 0.0;
  for (std::size_t i = 0; i < 4; ++i) ov += 0.5 * t.amplitude(i * 4 + i);
  CHECK(std::abs(ov - cplx{1.0, 0.0}) < 1e-12);

  for (int n = 1; n <= 4; ++n) {
    const ApqcLayout layout = build_apqc(n);
    StateVector u(2 * n);
    layout.encode.apply_to(u, {});
    layout.decode.apply_to(u, {});
    CHECK(std::abs(u.amplitude(0) - cplx{1.0, 0.0}) < 1e-10);
  }
  CHECK_THROWS_AS(build_apqc(0), std::invalid_argument);
  CHECK_THROWS_AS(build_apqc(7), std::invalid_argument);
}

TEST_CASE("apqc input reduces to the maximally mixed system state") {
  for (int n = 1; n <= 3; ++n) {
    const ApqcLayout layout = build_apqc(n);
    const StateVector bell = apqc_bell_input(layout);
    const DensityMatrix rho = DensityMatrix::from_pure(bell);
    std::vector<int> system(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) system[static_cast<std::size_t>(q)] = q;
    const DensityMatrix reduced = partial_trace(rho, system);
    const double dim = static_cast<double>(std::size_t{1} << n);
    CHECK(max_abs_diff(reduced.matrix(),
                       cplx{1.0 / dim, 0.0} *
                           ComplexMatrix::identity(std::size_t{1} << n)) <
          1e-10);
  }
}

TEST_CASE("state-channel duality: Bell overlap equals the normalized trace") {
  std::mt19937_64 rng(41);
  for (int n = 1; n <= 3; ++n) {
    const ApqcLayout layout = build_apqc(n);
    const StateVector bell = apqc_bell_input(layout);
    for (int trial = 0; trial < 6; ++trial) {
      const Circuit u = random_rotation_circuit(n, 4, rng);
      const Circuit v = random_rotation_circuit(n, 4, rng);
      const std::vector<double> pu = random_params(u.n_params(), rng);
      const std::vector<double> pv = random_params(v.n_params(), rng);

      StateVector lhs_state = bell;
      u.apply_to(lhs_state, pu);
      StateVector rhs_state = bell;
      v.apply_to(rhs_state, pv);
      const cplx lhs = overlap(rhs_state, lhs_state);

      const ComplexMatrix product = v.unitary(pv).adjoint() * u.unitary(pu);
      const cplx rhs =
          product.trace() / static_cast<double>(std::size_t{1} << n);
      CHECK(std::abs(lhs - rhs) < 1e-10);
    }
  }
}

TEST_CASE("pair grouping matches the small-size expectations") {
  const auto g2 = group_pauli_pairs(2);
  REQUIRE(g2.size() == 2);
  CHECK(g2[0] == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(g2[1].empty());

  const auto g3 = group_pauli_pairs(3);
  REQUIRE(g3.size() == 3);
  for (const auto& g : g3) CHECK(g.size() == 1);

  const auto g5 = group_pauli_pairs(5);
  REQUIRE(g5.size() == 5);
  for (const auto& g : g5) CHECK(g.size() == 2);
}

TEST_CASE("pair grouping is a disjoint partition for n up to 8") {
  for (int n = 2; n <= 8; ++n) {
    const auto groups = group_pauli_pairs(n);
    CHECK(groups.size() <= static_cast<std::size_t>(n));
    std::set<std::pair<int, int>> seen;
    for (const auto& group : groups) {
      std::set<int> qubits;
      for (const auto& [i, j] : group) {
        CHECK(i < j);
        CHECK(qubits.insert(i).second);
        CHECK(qubits.insert(j).second);
        CHECK(seen.insert({i, j}).second);
      }
    }
    CHECK(seen.size() == static_cast<std::size_t>(n * (n - 1) / 2));
  }
}

TEST_CASE("two-body ansatz counts one slot per term") {
  // Four local Z terms plus all six ZZ couplings, the NMR-style shape.
  PauliSum h(4);
  for (int q = 0; q < 4; ++q)
    h.add(0.5 + q, PauliString::single(4, q, 'Z'));
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      std::string w(4, 'I');
      w[static_cast<std::size_t>(i)] = 'Z';
      w[static_cast<std::size_t>(j)] = 'Z';
      h.add(0.1, PauliString::from_word(w));
    }
  const Circuit c = build_two_body_ansatz(h, 0.05);
  CHECK(c.n_params() == 10);
  CHECK(c.gates().size() == 10);
  CHECK(two_body_layer_count(h) == 4);  // three pair layers plus locals
}

TEST_CASE("single-term ansatz reproduces the exact exponential") {
  PauliSum h(2);
  h.add(1.0, PauliString::from_word("ZZ"));
  const double t = 0.7;
  const Circuit c = build_two_body_ansatz(h, t);
  REQUIRE(c.n_params() == 1);
  const std::vector<double> beta{0.83};
  std::mt19937_64 rng(3);
  const StateVector s = random_state(2, rng);
  StateVector a = s;
  c.apply_to(a, beta);
  const ComplexMatrix u = exact_unitary(
      cplx{beta[0], 0.0} * PauliString::from_word("ZZ").to_dense(), t);
  const std::vector<cplx> expected = u.apply(s.amplitudes());
  for (std::size_t i = 0; i < s.dim(); ++i)
    CHECK(std::abs(a.amplitude(i) - expected[i]) < 1e-10);
}

TEST_CASE("ansatz at t=0 acts as the identity for any parameters") {
  PauliSum h(2);
  h.add(0.25, PauliString::from_word("ZZ"));
  h.add(0.25, PauliString::from_word("XX"));
  const Circuit c = build_two_body_ansatz(h, 0.0);
  std::mt19937_64 rng(13);
  const StateVector s = random_state(2, rng);
  StateVector a = s;
  const std::vector<double> params = random_params(c.n_params(), rng);
  c.apply_to(a, params);
  for (std::size_t i = 0; i < s.dim(); ++i)
    CHECK(std::abs(a.amplitude(i) - s.amplitude(i)) < 1e-14);
}

TEST_CASE("ansatz rejects heavy terms") {
  PauliSum h(3);
  h.add(1.0, PauliString::from_word("XXX"));
  CHECK_THROWS_AS(build_two_body_ansatz(h, 0.1), std::invalid_argument);
}

TEST_CASE("append remaps parameter slots") {
  Circuit a(2);
  a.add_rotation(PauliString::from_word("ZZ"), 1.0);
  Circuit b(2);
  b.add_rotation(PauliString::from_word("XX"), 1.0);
  a.append(b);
  CHECK(a.n_params() == 2);
  REQUIRE(a.gates().size() == 2);
  CHECK(a.gates()[1].param_slot == 1);
}
