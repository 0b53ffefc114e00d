#pragma once

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "hermex/complex_matrix.hpp"
#include "hermex/pauli.hpp"

namespace hermex {

/// A named Hermitian operator to exponentiate, with default evolution times.
struct ProblemInstance {
  std::string name;
  int n_qubits = 0;
  std::variant<ComplexMatrix, PauliSum> op;  // dense or Pauli form
  std::vector<double> times;

  bool is_pauli() const { return std::holds_alternative<PauliSum>(op); }
  const PauliSum& pauli() const;
  /// Dense realization of the operator (n_qubits <= 12).
  ComplexMatrix dense() const;
  /// Pauli form, decomposing dense operators when needed (n_qubits <= 6).
  PauliSum as_pauli_sum() const;
};

namespace problems {

/// NMR-style parameters for the four-spin crotonic-acid Hamiltonian
///   H = sum_j (nu_j / 2) Z_j + sum_{j<k} (pi J_jk / 2) Z_j Z_k,
/// frequencies in Hz.
struct CrotonicParams {
  std::vector<double> nu;                               // nu[j], j = 0..3
  std::vector<std::pair<std::pair<int, int>, double>> j_couplings;  // ((j,k), J)
};

/// File format: `nu <j> <value>` and `J <j> <k> <value>` lines, 1-based
/// spin indices, '#' comments.
CrotonicParams parse_crotonic_params(std::istream& in);
PauliSum crotonic_hamiltonian(const CrotonicParams& params);

/// Resolution order for the crotonic parameter file: the explicit argument,
/// the HERMEX_CROTONIC_PARAMS environment variable, then the bundled
/// data/crotonic_params.txt.
std::filesystem::path crotonic_params_path(
    const std::filesystem::path& override_path = {});

/// Built-in instances: "bell" (2 qubits), "ghz" (3), "crotonic" (4, read
/// from the parameter file). Default times 0.05, 0.1, 0.2.
ProblemInstance builtin(const std::string& name);

/// Loads either the Pauli-sum text format or a dense Hermitian matrix file
/// (header `dense <n_qubits>`, then 2^n rows of 2^n re/im pairs).
ProblemInstance load(const std::filesystem::path& path);
void save(const ProblemInstance& instance, const std::filesystem::path& path);

std::vector<std::string> builtin_names();

}  // namespace problems

}  // namespace hermex
