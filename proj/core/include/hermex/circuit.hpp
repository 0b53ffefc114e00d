#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hermex/complex_matrix.hpp"
#include "hermex/pauli.hpp"
#include "hermex/state.hpp"

namespace hermex {

/// One circuit element. PauliRotation applies e^{-i angle W} with
/// angle = scale * params[param_slot], or angle = scale alone when the
/// rotation is frozen (param_slot < 0). Several gates may share a slot.
struct Gate {
  enum class Kind { hadamard, cz, pauli_rotation };

  Kind kind = Kind::hadamard;
  int q1 = -1;
  int q2 = -1;
  std::optional<PauliString> word;  // pauli_rotation only
  int param_slot = -1;
  double scale = 1.0;
};

/// Ordered gate list with parameter slots. Immutable once built (builders
/// aside); safe to share across threads.
class Circuit {
 public:
  explicit Circuit(int n_qubits);

  int n_qubits() const { return n_; }
  int n_params() const { return n_params_; }
  const std::vector<Gate>& gates() const { return gates_; }

  void add_hadamard(int qubit);
  void add_cz(int q1, int q2);
  /// Rotation on a fresh slot; returns the slot index.
  int add_rotation(const PauliString& word, double scale);
  /// Rotation on a given slot; extends the parameter count if needed.
  void add_rotation_on_slot(const PauliString& word, int slot, double scale);
  void add_frozen_rotation(const PauliString& word, double angle);

  /// Appends a copy of `other`, remapping its slots to fresh ones.
  void append(const Circuit& other);

  /// Applies the circuit to `state`; the circuit may act on the leading
  /// sub-register of a larger state. Requires params.size() == n_params().
  void apply_to(StateVector& state, std::span<const double> params,
                int qubit_offset = 0) const;

  /// Dense unitary of the circuit (n_qubits <= 10).
  ComplexMatrix unitary(std::span<const double> params) const;

  /// Parameter-free copy with every slot resolved at `params`.
  Circuit freeze(std::span<const double> params) const;

 private:
  double gate_angle(const Gate& g, std::span<const double> params) const;

  int n_;
  int n_params_ = 0;
  std::vector<Gate> gates_;
};

/// Reverses the gate order, freezing rotations at the negated angles.
/// Hadamard and CZ are self-inverse. The result is parameter-free.
Circuit invert(const Circuit& c, std::span<const double> params);

/// Line-oriented text format:
///   circuit <n_qubits> <n_params>
///   H <q> | CZ <q1> <q2> | ROT <word> <slot> <scale> | ROTF <word> <angle>
///   PARAM <slot> <value>        (optional trailing parameter values)
std::string circuit_to_text(const Circuit& c,
                            std::span<const double> params = {});
struct LoadedCircuit {
  Circuit circuit;
  std::optional<std::vector<double>> params;
};
LoadedCircuit circuit_from_text(std::istream& in);
LoadedCircuit circuit_from_text(const std::string& text);

}  // namespace hermex
