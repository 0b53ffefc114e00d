#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hermex/circuit.hpp"
#include "hermex/state.hpp"

namespace hermex {

enum class CircuitTemplate { circuit1, circuit2, circuit3, ours };

CircuitTemplate template_from_name(const std::string& name);
std::string template_name(CircuitTemplate id);

struct ExprConfig {
  int n_samples = 5000;
  int n_bins = 75;
  int n_qubits = 4;
  CircuitTemplate template_id = CircuitTemplate::circuit1;
  int layers = 1;
  std::uint64_t seed = 1;
};

struct ExprResult {
  std::vector<long> histogram;  // counts sum to n_samples
  double kl = 0.0;
};

namespace expressibility {

/// The four 4-qubit study templates, generalized to n qubits. One layer:
///   circuit1: R_X then R_Z on every qubit (no entanglement)
///   circuit2: H on every qubit, descending nearest-neighbour CZ ladder,
///             R_X on every qubit
///   circuit3: R_X,R_Z columns, all n(n-1) ordered controlled-R_X pairs,
///             R_X,R_Z columns
///   ours:     two-body ansatz over ZZ and XX on every pair plus Z and X on
///             every qubit, unit scale
/// Every layer instance takes fresh parameter slots.
Circuit template_circuit(CircuitTemplate id, int n_qubits, int layers);

/// n_samples draws of |<psi_theta|psi_theta'>|^2 with theta, theta' i.i.d.
/// uniform on [0, 2pi) per parameter, both runs starting from |0...0>.
std::vector<double> sample_fidelities(const ExprConfig& config);

/// Overlap <psi_theta|psi_theta'> read off the one-ancilla circuit: H on the
/// ancilla, u_theta on the system, controlled u_theta' u_theta^dag, then
/// Re = <X (x) I> and Im = <Y (x) I>.
cplx ancilla_overlap(const Circuit& u_theta, const Circuit& u_theta_prime,
                     std::span<const double> params,
                     std::span<const double> params_prime);

/// KL divergence of the empirical fidelity histogram against the analytic
/// Haar bin masses (1-a)^{N-1} - (1-b)^{N-1}. Empty bins contribute zero.
double kl_vs_haar(std::span<const double> fidelities, int n_bins, int dim);

ExprResult estimate(const ExprConfig& config);

}  // namespace expressibility

}  // namespace hermex
