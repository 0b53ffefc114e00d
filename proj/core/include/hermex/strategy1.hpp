#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hermex/circuit.hpp"
#include "hermex/pauli.hpp"
#include "hermex/state.hpp"
#include "hermex/training.hpp"

namespace hermex {

struct Strategy1Config {
  double eps_o = 0.01;    // stop once objective >= 1 - eps_o
  double delta1 = 1e-6;   // restart when best-f gains <= delta1 over a
                          // window; a non-finite value disables restarts
  double eta = 0.02;
  int max_iters = 300;    // per restart chain
  double t = 0.0;
  std::uint64_t seed = 1;
  int max_restarts = 5;
  int improvement_window = 20;
};

namespace strategy1 {

/// |<sigma| e^{i rho t} U(params) |sigma>|^2 for pure sigma. The ansatz and
/// the exact target act on the leading register of sigma, so passing the
/// APQC Bell state yields the process fidelity |Tr(U_t^dag U)/2^n|^2.
double objective(const Circuit& ansatz, std::span<const double> params,
                 const PauliSum& target_h, double t, const StateVector& sigma);

/// Exact gradient of the objective. Per rotation k the forward state nu_k
/// (rotations 1..k applied to sigma) meets the backward state mu_k (target
/// evolution, then inverse rotations m..k+1); the commutator overlap
/// reduces to 2 * scale * Im(<mu|W|nu><nu|mu>) for pure states. Requires
/// every gate of the ansatz to be a Pauli rotation.
std::vector<double> analytic_gradient(const Circuit& ansatz,
                                      std::span<const double> params,
                                      const PauliSum& target_h, double t,
                                      const StateVector& sigma);

/// Gradient-ascent driver over the APQC objective (sigma is the Bell input
/// for the ansatz register). Uniform [0,1) initialization; chains restart
/// with a fresh seed derived from config.seed + restart index whenever the
/// windowed best-objective improvement drops to delta1 or below. Returns the
/// best parameters seen across all chains.
TrainTrace run(const Strategy1Config& config, const Circuit& ansatz,
               const PauliSum& target_h,
               std::optional<std::vector<double>> initial_params = {});

}  // namespace strategy1

}  // namespace hermex
