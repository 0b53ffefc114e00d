#include "hermex/expressibility.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "hermex/ansatz.hpp"
#include "hermex/training.hpp"

namespace hermex {

CircuitTemplate template_from_name(const std::string& name) {
  if (name == "circuit1") return CircuitTemplate::circuit1;
  if (name == "circuit2") return CircuitTemplate::circuit2;
  if (name == "circuit3") return CircuitTemplate::circuit3;
  if (name == "ours") return CircuitTemplate::ours;
  throw std::invalid_argument("unknown circuit template: " + name);
}

std::string template_name(CircuitTemplate id) {
  switch (id) {
    case CircuitTemplate::circuit1: return "circuit1";
    case CircuitTemplate::circuit2: return "circuit2";
    case CircuitTemplate::circuit3: return "circuit3";
    case CircuitTemplate::ours: return "ours";
  }
  throw std::invalid_argument("unknown circuit template id");
}

namespace expressibility {

namespace {

// R_X(theta) = e^{-i theta X/2} and R_Z alike: slotted rotation, scale 1/2.
void add_rotation_column(Circuit& c, char letter) {
  for (int q = 0; q < c.n_qubits(); ++q)
    c.add_rotation(PauliString::single(c.n_qubits(), q, letter), 0.5);
}

// Controlled-R_X = e^{-i theta/4 X_t} e^{+i theta/4 Z_c X_t}: two rotations
// sharing one slot.
void add_controlled_rx(Circuit& c, int control, int target) {
  const int n = c.n_qubits();
  const int slot =
      c.add_rotation(PauliString::single(n, target, 'X'), 0.25);
  std::string w(static_cast<std::size_t>(n), 'I');
  w[static_cast<std::size_t>(control)] = 'Z';
  w[static_cast<std::size_t>(target)] = 'X';
  c.add_rotation_on_slot(PauliString::from_word(w), slot, -0.25);
}

Circuit one_layer(CircuitTemplate id, int n) {
  Circuit c(n);
  switch (id) {
    case CircuitTemplate::circuit1:
      add_rotation_column(c, 'X');
      add_rotation_column(c, 'Z');
      break;
    case CircuitTemplate::circuit2:
      for (int q = 0; q < n; ++q) c.add_hadamard(q);
      for (int q = n - 2; q >= 0; --q) c.add_cz(q, q + 1);
      add_rotation_column(c, 'X');
      break;
    case CircuitTemplate::circuit3:
      add_rotation_column(c, 'X');
      add_rotation_column(c, 'Z');
      for (int control = n - 1; control >= 0; --control)
        for (int target = n - 1; target >= 0; --target)
          if (target != control) add_controlled_rx(c, control, target);
      add_rotation_column(c, 'X');
      add_rotation_column(c, 'Z');
      break;
    case CircuitTemplate::ours: {
      PauliSum proto(n);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          std::string zz(static_cast<std::size_t>(n), 'I');
          zz[static_cast<std::size_t>(i)] = 'Z';
          zz[static_cast<std::size_t>(j)] = 'Z';
          proto.add(1.0, PauliString::from_word(zz));
          std::string xx(static_cast<std::size_t>(n), 'I');
          xx[static_cast<std::size_t>(i)] = 'X';
          xx[static_cast<std::size_t>(j)] = 'X';
          proto.add(1.0, PauliString::from_word(xx));
        }
      for (int q = 0; q < n; ++q) {
        proto.add(1.0, PauliString::single(n, q, 'Z'));
        proto.add(1.0, PauliString::single(n, q, 'X'));
      }
      return build_two_body_ansatz(proto, 1.0);
    }
  }
  return c;
}

}  // namespace

Circuit template_circuit(CircuitTemplate id, int n_qubits, int layers) {
  if (n_qubits < 2 || n_qubits > 10)
    throw std::invalid_argument("template_circuit: qubit count out of range");
  if (layers < 1)
    throw std::invalid_argument("template_circuit: need layers >= 1");
  Circuit c = one_layer(id, n_qubits);
  const Circuit base = c;
  for (int l = 1; l < layers; ++l) c.append(base);
  return c;
}

std::vector<double> sample_fidelities(const ExprConfig& config) {
  if (config.n_samples < 1)
    throw std::invalid_argument("sample_fidelities: need samples >= 1");
  const Circuit c =
      template_circuit(config.template_id, config.n_qubits, config.layers);
  const std::size_t m = static_cast<std::size_t>(c.n_params());
  std::mt19937_64 rng(config.seed);
  constexpr double two_pi = 2.0 * std::numbers::pi;

  std::vector<double> theta(m), theta_prime(m), fids;
  fids.reserve(static_cast<std::size_t>(config.n_samples));
  for (int s = 0; s < config.n_samples; ++s) {
    for (double& v : theta) v = two_pi * uniform_unit(rng);
    for (double& v : theta_prime) v = two_pi * uniform_unit(rng);
    StateVector a(config.n_qubits);
    c.apply_to(a, theta);
    StateVector b(config.n_qubits);
    c.apply_to(b, theta_prime);
    fids.push_back(std::norm(overlap(a, b)));
  }
  return fids;
}

cplx ancilla_overlap(const Circuit& u_theta, const Circuit& u_theta_prime,
                     std::span<const double> params,
                     std::span<const double> params_prime) {
  if (u_theta.n_qubits() != u_theta_prime.n_qubits())
    throw std::invalid_argument("ancilla_overlap: register size mismatch");
  const int n = u_theta.n_qubits();
  if (n > 5)
    throw std::invalid_argument("ancilla_overlap: register too large");

  StateVector psi(1 + n);  // ancilla is qubit 0
  psi.apply_hadamard(0);
  u_theta.apply_to(psi, params, /*qubit_offset=*/1);
  const ComplexMatrix u =
      u_theta_prime.unitary(params_prime) * u_theta.unitary(params).adjoint();
  std::vector<int> system(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) system[static_cast<std::size_t>(q)] = q + 1;
  psi.apply_controlled_dense(0, system, u);

  const double re =
      expectation(PauliString::single(1 + n, 0, 'X'), psi).real();
  const double im =
      expectation(PauliString::single(1 + n, 0, 'Y'), psi).real();
  return {re, im};
}

double kl_vs_haar(std::span<const double> fidelities, int n_bins, int dim) {
  if (fidelities.empty())
    throw std::invalid_argument("kl_vs_haar: no samples");
  if (n_bins < 1 || dim < 2)
    throw std::invalid_argument("kl_vs_haar: bad bin count or dimension");

  std::vector<long> counts(static_cast<std::size_t>(n_bins), 0);
  for (double f : fidelities) {
    int bin = static_cast<int>(f * n_bins);
    bin = std::max(0, std::min(n_bins - 1, bin));
    ++counts[static_cast<std::size_t>(bin)];
  }

  const double total = static_cast<double>(fidelities.size());
  double kl = 0.0;
  for (int i = 0; i < n_bins; ++i) {
    const long c = counts[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const double a = static_cast<double>(i) / n_bins;
    const double b = static_cast<double>(i + 1) / n_bins;
    const double q = std::pow(1.0 - a, dim - 1) - std::pow(1.0 - b, dim - 1);
    const double p = static_cast<double>(c) / total;
    kl += p * std::log(p / q);
  }
  return kl;
}

ExprResult estimate(const ExprConfig& config) {
  if (config.n_samples < config.n_bins)
    throw std::invalid_argument("estimate: need n_samples >= n_bins");
  const std::vector<double> fids = sample_fidelities(config);
  ExprResult result;
  result.histogram.assign(static_cast<std::size_t>(config.n_bins), 0);
  for (double f : fids) {
    int bin = static_cast<int>(f * config.n_bins);
    bin = std::max(0, std::min(config.n_bins - 1, bin));
    ++result.histogram[static_cast<std::size_t>(bin)];
  }
  result.kl =
      kl_vs_haar(fids, config.n_bins, 1 << config.n_qubits);
  return result;
}

}  // namespace expressibility

}  // namespace hermex
