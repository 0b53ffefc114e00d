#include "hermex/baselines.hpp"

#include <cmath>
#include <stdexcept>

#include "hermex/ansatz.hpp"

namespace hermex {

TrotterResult trotter_evolve(const TrotterPlan& plan,
                             const StateVector& input) {
  if (plan.n_steps < 1)
    throw std::invalid_argument("trotter_evolve: need n_steps >= 1");
  if (plan.h.n_qubits() > input.n_qubits())
    throw std::invalid_argument("trotter_evolve: register size mismatch");
  const double dt = plan.t / plan.n_steps;
  StateVector state = input;
  for (int step = 0; step < plan.n_steps; ++step)
    for (const PauliSum::Term& term : plan.h.terms())
      state.apply_pauli_rotation(term.string, term.coeff * dt);
  TrotterResult result{std::move(state)};
  result.gate_count =
      static_cast<long long>(plan.n_steps) * plan.h.terms().size();
  result.depth =
      static_cast<long long>(plan.n_steps) * two_body_layer_count(plan.h);
  return result;
}

DensityMatrix dme_step(const DensityMatrix& rho, const DensityMatrix& sigma,
                       double dt) {
  if (rho.n_qubits() != sigma.n_qubits())
    throw std::invalid_argument("dme_step: register size mismatch");
  const std::size_t d = rho.dim();
  const std::size_t dd = d * d;

  ComplexMatrix swap(dd, dd);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) swap(j * d + i, i * d + j) = 1.0;

  const double c = std::cos(dt);
  const double s = std::sin(dt);
  ComplexMatrix u(dd, dd);
  for (std::size_t i = 0; i < dd; ++i) u(i, i) = c;
  for (std::size_t i = 0; i < dd; ++i)
    for (std::size_t j = 0; j < dd; ++j)
      u(i, j) += cplx{0.0, -s} * swap(i, j);

  const ComplexMatrix joint =
      u * ComplexMatrix::kron(rho.matrix(), sigma.matrix()) * u.adjoint();

  // Partial trace over the first (rho) factor.
  ComplexMatrix out(d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t l = 0; l < d; ++l) {
      cplx acc = 0.0;
      for (std::size_t i = 0; i < d; ++i) acc += joint(i * d + j, i * d + l);
      out(j, l) = acc;
    }
  return {sigma.n_qubits(), std::move(out)};
}

DmeResult dme_evolve(const DmePlan& plan) {
  if (plan.n_copies < 1)
    throw std::invalid_argument("dme_evolve: need n_copies >= 1");
  const double dt = plan.t / plan.n_copies;
  DensityMatrix state = plan.sigma;
  for (int i = 0; i < plan.n_copies; ++i) state = dme_step(plan.rho, state, dt);
  return {std::move(state), plan.n_copies, plan.n_copies};
}

}  // namespace hermex
