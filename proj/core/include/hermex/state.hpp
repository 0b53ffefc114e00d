#pragma once

#include <span>
#include <vector>

#include "hermex/complex_matrix.hpp"
#include "hermex/pauli.hpp"

namespace hermex {

/// Dense n-qubit state, amplitudes indexed big-endian: qubit 0 is the most
/// significant bit of the index. Value-semantic; unitary mutators preserve
/// the norm but the type itself also carries unnormalized vectors (operator
/// images) where noted.
class StateVector {
 public:
  explicit StateVector(int n_qubits);  // |0...0>
  StateVector(int n_qubits, std::vector<cplx> amplitudes);

  static StateVector zero_state(int n_qubits) { return StateVector(n_qubits); }
  static StateVector basis_state(int n_qubits, std::size_t index);

  int n_qubits() const { return n_; }
  std::size_t dim() const { return a_.size(); }
  std::span<const cplx> amplitudes() const { return a_; }
  cplx amplitude(std::size_t i) const { return a_[i]; }

  double norm() const;

  void apply_hadamard(int qubit);
  void apply_cz(int q1, int q2);

  /// Multiplies by the Pauli word in place. Words on fewer qubits than the
  /// state act on the leading register (qubits 0..p.n_qubits()-1).
  void apply_pauli(const PauliString& p);

  /// e^{-i angle P} |psi> = cos(angle)|psi> - i sin(angle) P|psi>.
  void apply_pauli_rotation(const PauliString& p, double angle);

  /// Applies a dense 2^k x 2^k unitary to the listed qubits; the first
  /// listed qubit is the most significant bit of the gate's local index.
  void apply_dense(std::span<const int> qubits, const ComplexMatrix& u);

  /// Same, gated on `control` being |1>.
  void apply_controlled_dense(int control, std::span<const int> qubits,
                              const ComplexMatrix& u);

 private:
  int n_;
  std::vector<cplx> a_;
};

/// <a|b>.
cplx overlap(const StateVector& a, const StateVector& b);

/// h|psi> (not normalized). The sum may act on a leading sub-register.
StateVector apply_operator(const PauliSum& h, const StateVector& psi);

/// <psi|h|psi> for a Pauli word on the leading register.
cplx expectation(const PauliString& p, const StateVector& psi);

/// Dense n-qubit mixed state. Construction validates Hermiticity, unit
/// trace and positive semidefiniteness (eigenvalues >= -1e-9).
class DensityMatrix {
 public:
  DensityMatrix(int n_qubits, ComplexMatrix entries);

  static DensityMatrix from_pure(const StateVector& psi);

  int n_qubits() const { return n_; }
  std::size_t dim() const { return m_.rows(); }
  const ComplexMatrix& matrix() const { return m_; }

 private:
  int n_;
  ComplexMatrix m_;
};

/// Reduced state on the `keep` qubits (ascending order expected); the
/// remaining qubits are traced out.
DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<int>& keep);

}  // namespace hermex
