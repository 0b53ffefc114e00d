#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <random>

#include "hermex/ansatz.hpp"
#include "hermex/problems.hpp"
#include "hermex/strategy1.hpp"

using namespace hermex;

namespace {

PauliSum bell_sum() { return problems::builtin("bell").pauli(); }

Circuit random_rotation_circuit(int n, int gates, double scale,
                                std::mt19937_64& rng) {
  Circuit c(n);
  const char letters[] = {'I', 'X', 'Y', 'Z'};
  for (int g = 0; g < gates; ++g) {
    std::string w;
    for (int q = 0; q < n; ++q) w.push_back(letters[rng() % 4]);
    if (w.find_first_not_of('I') == std::string::npos) w[0] = 'Z';
    c.add_rotation(PauliString::from_word(w), scale);
  }
  return c;
}

PauliSum random_two_body(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  PauliSum h(n);
  const char letters[] = {'X', 'Y', 'Z'};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::string w(static_cast<std::size_t>(n), 'I');
      w[static_cast<std::size_t>(i)] = letters[rng() % 3];
      w[static_cast<std::size_t>(j)] = letters[rng() % 3];
      h.add(coeff(rng), PauliString::from_word(w));
    }
  return h;
}

}  // namespace

TEST_CASE("objective is one when the ansatz reproduces the target") {
  const PauliSum bell = bell_sum();
  const double t = 0.3;
  const Circuit ansatz = build_two_body_ansatz(truncate_to_weight(bell, 2), t);
  const ApqcLayout layout = build_apqc(2);
  const StateVector sigma = apqc_bell_input(layout);
  // exp(-i t rho) = global phase * exp(-i t (ZZ+XX-YY)/4) for the Bell rho.
  const std::vector<double> exact{0.25, 0.25, -0.25};
  CHECK(strategy1::objective(ansatz, exact, bell, t, sigma) ==
        Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("objective is one at t=0 with zero parameters") {
  const PauliSum bell = bell_sum();
  const Circuit ansatz = build_two_body_ansatz(truncate_to_weight(bell, 2), 0.0);
  const StateVector sigma = apqc_bell_input(build_apqc(2));
  const std::vector<double> zeros(3, 0.0);
  CHECK(strategy1::objective(ansatz, zeros, bell, 0.0, sigma) ==
        Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("single Z-rotation objective follows cos^2 and peaks at alpha=1") {
  PauliSum h(1);
  h.add(1.0, PauliString::from_word("Z"));
  const double t = 0.3;
  Circuit ansatz(1);
  ansatz.add_rotation(PauliString::from_word("Z"), t);
  const StateVector sigma = apqc_bell_input(build_apqc(1));

  double best_f = -1.0, best_alpha = 0.0;
  for (double alpha = -1.0; alpha <= 3.0; alpha += 0.01) {
    const std::vector<double> p{alpha};
    const double f = strategy1::objective(ansatz, p, h, t, sigma);
    const double closed = std::cos(t * (alpha - 1.0)) * std::cos(t * (alpha - 1.0));
    CHECK(f == Catch::Approx(closed).margin(1e-10));
    if (f > best_f) {
      best_f = f;
      best_alpha = alpha;
    }
  }
  CHECK(best_alpha == Catch::Approx(1.0).margin(0.005));
}

TEST_CASE("gradient vanishes at the optimum of the commuting case") {
  PauliSum h(1);
  h.add(1.0, PauliString::from_word("Z"));
  Circuit ansatz(1);
  ansatz.add_rotation(PauliString::from_word("Z"), 0.3);
  const StateVector sigma = apqc_bell_input(build_apqc(1));
  const std::vector<double> opt{1.0};
  const auto grad = strategy1::analytic_gradient(ansatz, opt, h, 0.3, sigma);
  REQUIRE(grad.size() == 1);
  CHECK(std::abs(grad[0]) < 1e-8);
}

TEST_CASE("analytic gradient matches central finite differences") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 8; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 2);
    const PauliSum h = random_two_body(n, rng);
    const double t = 0.4;
    const Circuit ansatz = build_two_body_ansatz(h, t);
    const StateVector sigma = apqc_bell_input(build_apqc(n));
    std::vector<double> params(static_cast<std::size_t>(ansatz.n_params()));
    for (double& p : params) p = unit(rng);

    const auto grad =
        strategy1::analytic_gradient(ansatz, params, h, t, sigma);
    const double step = 1e-5;
    double max_err = 0.0, scale = 1e-12;
    for (std::size_t j = 0; j < params.size(); ++j) {
      std::vector<double> plus = params, minus = params;
      plus[j] += step;
      minus[j] -= step;
      const double fd = (strategy1::objective(ansatz, plus, h, t, sigma) -
                         strategy1::objective(ansatz, minus, h, t, sigma)) /
                        (2.0 * step);
      max_err = std::max(max_err, std::abs(fd - grad[j]));
      scale = std::max(scale, std::abs(fd));
    }
    CHECK(max_err / std::max(scale, 1.0) < 1e-6);
  }
}

TEST_CASE("rotation commuting with everything downstream has zero gradient") {
  // Every operator diagonal and sigma a computationaleigenstate: the
  // commutator in the gradient formula vanishes on every component.
  PauliSum h(2);
  h.add(0.6, PauliString::from_word("ZZ"));
  Circuit ansatz(2);
  ansatz.add_rotation(PauliString::from_word("ZI"), 0.3);
  ansatz.add_rotation(PauliString::from_word("ZZ"), 0.3);
  const std::vector<double> params{0.37, 0.81};
  const StateVector basis = StateVector::basis_state(2, 1);
  const auto grad =
      strategy1::analytic_gradient(ansatz, params, h, 0.3, basis);
  CHECK(std::abs(grad[0]) < 1e-12);
  CHECK(std::abs(grad[1]) < 1e-12);
}

TEST_CASE("gradient requires a rotation-only ansatz") {
  PauliSum h(2);
  h.add(0.6, PauliString::from_word("ZZ"));
  Circuit ansatz(2);
  ansatz.add_hadamard(0);
  ansatz.add_rotation(PauliString::from_word("ZZ"), 0.3);
  const StateVector sigma = apqc_bell_input(build_apqc(2));
  const std::vector<double> params{0.1};
  CHECK_THROWS_AS(
      strategy1::analytic_gradient(ansatz, params, h, 0.3, sigma),
      std::invalid_argument);
  CHECK_NOTHROW(strategy1::objective(ansatz, params, h, 0.3, sigma));
}

TEST_CASE("run converges immediately when seeded at the target") {
  const PauliSum bell = bell_sum();
  Strategy1Config config;
  config.t = 0.3;
  const Circuit ansatz =
      build_two_body_ansatz(truncate_to_weight(bell, 2), config.t);
  const TrainTrace trace = strategy1::run(
      config, ansatz, bell, std::vector<double>{0.25, 0.25, -0.25});
  CHECK(trace.converged);
  CHECK(trace.restarts_used == 0);
  CHECK(trace.iterations.size() == 1);
  CHECK(trace.final_objective >= 0.999999);
}

TEST_CASE("run reaches 0.99 on the Bell problem at t=0.1") {
  const PauliSum bell = bell_sum();
  Strategy1Config config;
  config.t = 0.1;
  config.seed = 3;
  const Circuit ansatz =
      build_two_body_ansatz(truncate_to_weight(bell, 2), config.t);
  const TrainTrace trace = strategy1::run(config, ansatz, bell);
  CHECK(trace.converged);
  CHECK(trace.final_objective >= 0.99);
  for (const IterationRecord& rec : trace.iterations)
    CHECK(rec.objective <= 1.0 + 1e-9);
  // Converged traces end at least as high as they started.
  CHECK(trace.final_objective >= trace.iterations.front().objective);
}

TEST_CASE("infinite delta1 never triggers the restart branch") {
  const PauliSum bell = bell_sum();
  Strategy1Config config;
  config.t = 0.1;
  config.seed = 3;
  config.improvement_window = 1;
  config.delta1 = std::numeric_limits<double>::infinity();
  const Circuit ansatz =
      build_two_body_ansatz(truncate_to_weight(bell, 2), config.t);
  const TrainTrace trace = strategy1::run(config, ansatz, bell);
  CHECK(trace.converged);
  CHECK(trace.restarts_used == 0);

  // A finite huge tolerance fires the window trigger on every iteration,
  // so the same run burns through all of its restarts.
  Strategy1Config strict = config;
  strict.delta1 = 1e100;
  const TrainTrace trace2 = strategy1::run(strict, ansatz, bell);
  CHECK_FALSE(trace2.converged);
  CHECK(trace2.restarts_used == config.max_restarts);
}
