#include "hermex/strategy1.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "hermex/ansatz.hpp"

namespace hermex::strategy1 {

namespace {

std::vector<int> leading_register(int n) {
  std::vector<int> qs(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) qs[static_cast<std::size_t>(q)] = q;
  return qs;
}

struct Evaluator {
  Evaluator(const Circuit& ansatz_in, const PauliSum& target_h, double t,
            const StateVector& sigma_in)
      : ansatz(ansatz_in), sigma(sigma_in) {
    if (target_h.n_qubits() != ansatz.n_qubits())
      throw std::invalid_argument("strategy1: target register mismatch");
    if (ansatz.n_qubits() > sigma.n_qubits())
      throw std::invalid_argument("strategy1: sigma register too small");
    target = sigma;
    target.apply_dense(leading_register(ansatz.n_qubits()),
                       exact_unitary(target_h.to_dense(), t));
  }

  double objective(std::span<const double> params) const {
    StateVector psi = sigma;
    ansatz.apply_to(psi, params);
    return std::norm(overlap(target, psi));
  }

  std::vector<double> gradient(std::span<const double> params) const {
    const auto& gates = ansatz.gates();
    const std::size_t m = gates.size();
    for (const Gate& g : gates)
      if (g.kind != Gate::Kind::pauli_rotation)
        throw std::invalid_argument(
            "strategy1: analytic gradient needs a rotation-only ansatz");

    // Forward states nu_k: rotations 0..k-1 applied to sigma.
    std::vector<StateVector> nu;
    nu.reserve(m + 1);
    nu.push_back(sigma);
    for (std::size_t k = 0; k < m; ++k) {
      StateVector s = nu.back();
      const Gate& g = gates[k];
      const double angle =
          g.param_slot < 0
              ? g.scale
              : g.scale * params[static_cast<std::size_t>(g.param_slot)];
      s.apply_pauli_rotation(*g.word, angle);
      nu.push_back(std::move(s));
    }

    std::vector<double> grad(static_cast<std::size_t>(ansatz.n_params()), 0.0);
    // Backward state mu_k: target evolution then inverse rotations m-1..k+1.
    StateVector mu = target;
    for (std::size_t k = m; k-- > 0;) {
      const Gate& g = gates[k];
      if (g.param_slot >= 0) {
        StateVector w_nu = nu[k + 1];
        w_nu.apply_pauli(*g.word);
        const cplx z = overlap(mu, w_nu) * overlap(nu[k + 1], mu);
        grad[static_cast<std::size_t>(g.param_slot)] +=
            2.0 * g.scale * z.imag();
      }
      const double angle =
          g.param_slot < 0
              ? g.scale
              : g.scale * params[static_cast<std::size_t>(g.param_slot)];
      mu.apply_pauli_rotation(*g.word, -angle);
    }
    return grad;
  }

  const Circuit& ansatz;
  StateVector sigma;
  StateVector target{1};
};

double l2_norm(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

double objective(const Circuit& ansatz, std::span<const double> params,
                 const PauliSum& target_h, double t, const StateVector& sigma) {
  return Evaluator(ansatz, target_h, t, sigma).objective(params);
}

std::vector<double> analytic_gradient(const Circuit& ansatz,
                                      std::span<const double> params,
                                      const PauliSum& target_h, double t,
                                      const StateVector& sigma) {
  return Evaluator(ansatz, target_h, t, sigma).gradient(params);
}

TrainTrace run(const Strategy1Config& config, const Circuit& ansatz,
               const PauliSum& target_h,
               std::optional<std::vector<double>> initial_params) {
  if (config.eps_o <= 0 || config.delta1 <= 0 || config.eta <= 0)
    throw std::invalid_argument("strategy1: config values must be positive");
  const auto layout = build_apqc(ansatz.n_qubits());
  const Evaluator eval(ansatz, target_h, config.t, apqc_bell_input(layout));

  const std::size_t m = static_cast<std::size_t>(ansatz.n_params());
  if (initial_params && initial_params->size() != m)
    throw std::invalid_argument("strategy1: initial parameter count mismatch");

  TrainTrace trace;
  std::vector<double> best_params(m, 0.0);
  double best_f = -1.0;
  int iter_counter = 0;

  for (int chain = 0; chain <= config.max_restarts; ++chain) {
    std::vector<double> params(m);
    if (chain == 0 && initial_params) {
      params = *initial_params;
    } else {
      std::mt19937_64 rng(config.seed + static_cast<std::uint64_t>(chain));
      for (double& p : params) p = uniform_unit(rng);
    }

    double f = eval.objective(params);
    std::vector<double> chain_best_hist{f};
    if (f > best_f) {
      best_f = f;
      best_params = params;
    }
    if (f >= 1.0 - config.eps_o) {
      trace.iterations.push_back({iter_counter, f, 0.0});
      trace.converged = true;
      trace.restarts_used = chain;
      break;
    }

    bool stalled = false;
    for (int it = 0; it < config.max_iters && !stalled; ++it) {
      const std::vector<double> grad = eval.gradient(params);
      trace.iterations.push_back({iter_counter++, f, l2_norm(grad)});
      for (std::size_t j = 0; j < m; ++j)
        params[j] += config.eta * grad[j];
      f = eval.objective(params);
      if (f > best_f) {
        best_f = f;
        best_params = params;
      }
      chain_best_hist.push_back(std::max(chain_best_hist.back(), f));
      if (f >= 1.0 - config.eps_o) {
        trace.iterations.push_back({iter_counter++, f, 0.0});
        trace.converged = true;
        trace.restarts_used = chain;
        break;
      }
      const std::size_t w = static_cast<std::size_t>(config.improvement_window);
      if (std::isfinite(config.delta1) && chain_best_hist.size() > w &&
          chain_best_hist.back() -
                  chain_best_hist[chain_best_hist.size() - 1 - w] <=
              config.delta1)
        stalled = true;  // give up on this chain, re-initialize
    }
    if (trace.converged) break;
    trace.restarts_used = chain;
  }

  trace.final_params = std::move(best_params);
  trace.final_objective = best_f;
  return trace;
}

}  // namespace hermex::strategy1
