#include "hermex/strategy2.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "hermex/state.hpp"

namespace hermex::strategy2 {

std::vector<double> seed_small_dt(const PauliSum& h, double dt,
                                  const Circuit& ansatz) {
  std::vector<double> betas(static_cast<std::size_t>(ansatz.n_params()), 0.0);
  for (const Gate& g : ansatz.gates()) {
    if (g.kind != Gate::Kind::pauli_rotation || g.param_slot < 0)
      throw std::invalid_argument(
          "seed_small_dt: ansatz must be slotted rotations only");
    if (std::abs(g.scale - dt) > 1e-12 * std::max(1.0, std::abs(dt)))
      throw std::invalid_argument("seed_small_dt: ansatz scale is not dt");
    bool found = false;
    for (const PauliSum::Term& term : h.terms()) {
      if (term.string.same_word(*g.word)) {
        betas[static_cast<std::size_t>(g.param_slot)] = term.coeff;
        found = true;
        break;
      }
    }
    if (!found)
      throw std::invalid_argument("seed_small_dt: ansatz term not present in h");
  }
  return betas;
}

double compression_objective(const ApqcLayout& layout, const Circuit& candidate,
                             std::span<const double> params,
                             const Circuit& frozen_prev, int n_c) {
  if (candidate.n_qubits() != layout.n_system ||
      frozen_prev.n_qubits() != layout.n_system)
    throw std::invalid_argument(
        "compression_objective: register size mismatch");
  if (frozen_prev.n_params() != 0)
    throw std::invalid_argument(
        "compression_objective: previous circuit must be frozen");
  if (n_c < 1)
    throw std::invalid_argument("compression_objective: need n_c >= 1");

  StateVector psi(2 * layout.n_system);
  layout.encode.apply_to(psi, {});
  candidate.apply_to(psi, params);
  const Circuit prev_inverse = invert(frozen_prev, {});
  for (int r = 0; r < n_c; ++r) prev_inverse.apply_to(psi, {});
  layout.decode.apply_to(psi, {});
  return std::norm(psi.amplitude(0));
}

std::vector<double> fd_gradient(
    const std::function<double(std::span<const double>)>& objective,
    std::span<const double> params, double fd_step) {
  if (fd_step <= 0) throw std::invalid_argument("fd_gradient: need step > 0");
  std::vector<double> theta(params.begin(), params.end());
  std::vector<double> grad(theta.size(), 0.0);
  for (std::size_t j = 0; j < theta.size(); ++j) {
    const double orig = theta[j];
    theta[j] = orig + fd_step;
    const double fp = objective(theta);
    theta[j] = orig - fd_step;
    const double fm = objective(theta);
    theta[j] = orig;
    grad[j] = (fp - fm) / (2.0 * fd_step);
  }
  return grad;
}

int stage_count(const Strategy2Config& config) {
  if (config.n_c < 2)
    throw std::invalid_argument("strategy2: need n_c >= 2");
  if (config.dt_ratio <= 0 || config.dt_ratio >= 1)
    throw std::invalid_argument("strategy2: dt_ratio must be in (0,1)");
  const double s_real =
      std::log(1.0 / config.dt_ratio) / std::log(static_cast<double>(config.n_c));
  const int s = static_cast<int>(std::lround(s_real));
  if (s < 1 ||
      std::abs(std::pow(static_cast<double>(config.n_c), -s) -
               config.dt_ratio) > 1e-9 * config.dt_ratio)
    throw std::invalid_argument(
        "strategy2: dt_ratio must be an integer power of 1/n_c");
  return s;
}

namespace {

double l2_norm(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

/// Gradient-ascent over one stage; returns the best parameters seen.
StageRecord train_stage(const Strategy2Config& config, const ApqcLayout& layout,
                        const Circuit& ansatz, const Circuit& frozen_prev,
                        int stage, std::vector<double> warm_start) {
  auto objective = [&](std::span<const double> p) {
    return compression_objective(layout, ansatz, p, frozen_prev, config.n_c);
  };

  TrainTrace trace;
  std::vector<double> params = std::move(warm_start);
  std::vector<double> best_params = params;
  double f = objective(params);
  double best_f = f;
  std::vector<double> best_hist{f};
  std::mt19937_64 rng(config.seed + 977u * static_cast<std::uint64_t>(stage));

  int iter = 0;
  if (f >= 1.0 - config.eps_o) {
    trace.iterations.push_back({0, f, 0.0});
    trace.converged = true;
  }
  while (!trace.converged && iter < config.max_iters_per_stage) {
    const std::vector<double> grad = fd_gradient(objective, params, config.fd_step);
    trace.iterations.push_back({iter++, f, l2_norm(grad)});
    for (std::size_t j = 0; j < params.size(); ++j)
      params[j] += config.eta * grad[j];
    f = objective(params);
    if (f > best_f) {
      best_f = f;
      best_params = params;
    }
    best_hist.push_back(std::max(best_hist.back(), f));
    if (f >= 1.0 - config.eps_o) {
      trace.iterations.push_back({iter, f, 0.0});
      trace.converged = true;
      break;
    }
    const std::size_t w = static_cast<std::size_t>(config.improvement_window);
    if (std::isfinite(config.delta2) && best_hist.size() > w &&
        best_hist.back() - best_hist[best_hist.size() - 1 - w] <=
            config.delta2) {
      // Re-initialize and keep going; the best parameters stay recorded.
      ++trace.restarts_used;
      for (double& p : params) p = uniform_unit(rng);
      f = objective(params);
      best_hist.assign(1, best_hist.back());
    }
  }

  trace.final_params = best_params;
  trace.final_objective = best_f;
  return {stage, std::move(best_params), best_f, std::move(trace)};
}

}  // namespace

std::vector<StageRecord> run(
    const Strategy2Config& config, const PauliSum& h, double t,
    std::optional<std::pair<int, std::vector<double>>> resume) {
  const int stages = stage_count(config);
  const double dt = t * config.dt_ratio;
  const Circuit ansatz = build_two_body_ansatz(h, dt);
  const ApqcLayout layout = build_apqc(h.n_qubits());

  std::vector<double> prev_params = seed_small_dt(h, dt, ansatz);
  int first_stage = 1;
  if (resume) {
    if (resume->first < 1 || resume->first > stages)
      throw std::invalid_argument("strategy2: resume stage out of range");
    if (static_cast<int>(resume->second.size()) != ansatz.n_params())
      throw std::invalid_argument("strategy2: resume parameter count mismatch");
    prev_params = resume->second;
    first_stage = resume->first + 1;
  }

  std::vector<StageRecord> records;
  for (int stage = first_stage; stage <= stages; ++stage) {
    const Circuit frozen_prev = ansatz.freeze(prev_params);
    std::vector<double> warm(prev_params.size());
    for (std::size_t j = 0; j < warm.size(); ++j)
      warm[j] = config.n_c * prev_params[j];
    StageRecord record =
        train_stage(config, layout, ansatz, frozen_prev, stage, std::move(warm));
    prev_params = record.params;
    records.push_back(std::move(record));
  }
  return records;
}

double error_budget(double eps_o, double eps_t, double t) {
  if (eps_o < 0 || eps_t <= 0 || t < 0)
    throw std::invalid_argument("error_budget: nonpositive input");
  return (t * t / eps_t) * eps_o + eps_t;
}

double residual_second_order(const PauliSum& h, std::span<const double> betas,
                             double dt, const StateVector& probe) {
  if (betas.size() != h.terms().size())
    throw std::invalid_argument(
        "residual_second_order: one beta per term required");

  // Expectations of the expansion pieces on the probe, with H = -i dt h and
  // M_i = -i dt beta_i W_i. The real part of the quoted expression is the
  // second-order infidelity; imaginary contributions cancel at this order.
  const StateVector h_psi = apply_operator(h, probe);
  const cplx eh = overlap(probe, h_psi);
  const cplx eh2 = overlap(h_psi, h_psi);

  std::vector<StateVector> w_psi;
  w_psi.reserve(betas.size());
  for (const PauliSum::Term& term : h.terms()) {
    StateVector s = probe;
    s.apply_pauli(term.string);
    w_psi.push_back(std::move(s));
  }

  cplx sum_m = 0.0;     // sum beta_i <W_i>
  cplx h_m = 0.0;       // sum beta_i <h W_i>
  double sum_m2 = 0.0;  // sum beta_i^2  (W_i^2 = I)
  cplx cross = 0.0;     // sum_{i>j} beta_i beta_j <W_i W_j>
  for (std::size_t i = 0; i < betas.size(); ++i) {
    sum_m += betas[i] * overlap(probe, w_psi[i]);
    h_m += betas[i] * overlap(h_psi, w_psi[i]);
    sum_m2 += betas[i] * betas[i];
    for (std::size_t j = 0; j < i; ++j)
      cross += betas[i] * betas[j] * overlap(w_psi[i], w_psi[j]);
  }

  const cplx g = eh - sum_m;
  const cplx value = -dt * dt * g * g + dt * dt * eh2 - 2.0 * dt * dt * h_m +
                     dt * dt * sum_m2 + 2.0 * dt * dt * cross;
  return value.real();
}

}  // namespace hermex::strategy2
