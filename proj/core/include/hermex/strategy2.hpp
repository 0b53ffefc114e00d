#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hermex/ansatz.hpp"
#include "hermex/circuit.hpp"
#include "hermex/pauli.hpp"
#include "hermex/training.hpp"

namespace hermex {

struct Strategy2Config {
  double eps_o = 1e-8;    // per-stage stop threshold on the APQC objective
  double delta2 = 1e-6;   // windowed-improvement restart trigger
  double eta = 0.02;
  int max_iters_per_stage = 350;
  int n_c = 2;                      // compression factor
  double dt_ratio = 1.0 / 1024.0;   // dt / t = n_c^{-stages}
  double fd_step = 0.01;
  std::uint64_t seed = 1;
  int improvement_window = 20;
};

namespace strategy2 {

/// First-order Trotter seeding: beta[slot] = coefficient of the slot's word
/// in h, so the seeded circuit is prod_i e^{-i dt beta_i W_i}. The ansatz
/// must come from build_two_body_ansatz(h', dt) with matching scale; a word
/// missing from h is an error.
std::vector<double> seed_small_dt(const PauliSum& h, double dt,
                                  const Circuit& ansatz);

/// |<psi_0| U_D (candidate(params) followed by invert(prev) n_c times) U_E
/// |psi_0>|^2, which equals |Tr(prev^{-n_c} candidate)/2^n|^2. frozen_prev
/// must be parameter-free.
double compression_objective(const ApqcLayout& layout, const Circuit& candidate,
                             std::span<const double> params,
                             const Circuit& frozen_prev, int n_c);

/// Symmetric difference quotient, 2 * params.size() objective evaluations.
std::vector<double> fd_gradient(
    const std::function<double(std::span<const double>)>& objective,
    std::span<const double> params, double fd_step);

struct StageRecord {
  int stage;  // 1-based training stage
  std::vector<double> params;
  double objective;
  TrainTrace trace;
};

/// Trains log_{n_c}(1/dt_ratio) compression stages: stage 0 is the Trotter
/// seed at dt = t * dt_ratio, stage i trains candidate(beta) against the
/// frozen stage-(i-1) circuit applied n_c times, warm-started at n_c times
/// the previous parameters. Non-converged stages are recorded as-is and the
/// run continues. `resume` restarts after an already-trained stage.
std::vector<StageRecord> run(
    const Strategy2Config& config, const PauliSum& h, double t,
    std::optional<std::pair<int, std::vector<double>>> resume = {});

/// Number of training stages implied by the config; throws unless
/// dt_ratio = n_c^{-s} for integer s.
int stage_count(const Strategy2Config& config);

/// A-priori deviation bound (t^2/eps_t) * eps_o + eps_t, constants taken
/// as one. Reporting aid only.
double error_budget(double eps_o, double eps_t, double t);

/// Second-order expansion of 1 - f for the seeded product formula against
/// e^{-i dt h}, evaluated on a probe state. betas follow h.terms() order.
/// Zero when sum_i beta_i W_i = h and all words commute.
double residual_second_order(const PauliSum& h, std::span<const double> betas,
                             double dt, const StateVector& probe);

}  // namespace strategy2

}  // namespace hermex
