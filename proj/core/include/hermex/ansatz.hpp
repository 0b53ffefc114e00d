#pragma once

#include <utility>
#include <vector>

#include "hermex/circuit.hpp"
#include "hermex/pauli.hpp"
#include "hermex/state.hpp"

namespace hermex {

/// Partitions all C(n,2) qubit pairs into at most n groups such that no
/// qubit appears twice within a group (round-robin one-factorization).
/// Odd n yields n groups of (n-1)/2 pairs; even n yields n-1 full matchings
/// and one trailing empty group. Pairs are (i, j) with i < j, 0-based.
std::vector<std::vector<std::pair<int, int>>> group_pauli_pairs(int n);

/// Ancilla-assisted register: system qubits 0..n-1, ancilla qubits n..2n-1.
/// encode maps |0..0> to (1/sqrt(d)) sum_i |i>_S |i>_A; decode is its
/// inverse.
struct ApqcLayout {
  int n_system;
  int n_ancilla;
  Circuit encode;
  Circuit decode;
};

/// Hadamard on every qubit, CZ between system qubit q and ancilla qubit q,
/// Hadamard on every ancilla qubit; decode reverses. Supports 1..6 system
/// qubits.
ApqcLayout build_apqc(int n_system);

/// encode applied to |0...0> on the 2n-qubit register.
StateVector apqc_bell_input(const ApqcLayout& layout);

/// Layered rotation ansatz for a Hamiltonian with weight-1 and weight-2
/// terms only. Two-body terms occupy the qubit-disjoint pair layers from
/// group_pauli_pairs; each term is one rotation e^{-i t alpha_k W_k} on its
/// own slot. Single-qubit terms are inserted after the first two-body layer
/// touching their qubit (at the end if none does). Slot order equals gate
/// order. Throws on terms of weight 3 or more.
Circuit build_two_body_ansatz(const PauliSum& h, double t);

/// Layer count of one ansatz pass: occupied pair layers plus one interleaved
/// local layer when single-qubit terms are present. Used for circuit-depth
/// accounting.
int two_body_layer_count(const PauliSum& h);

}  // namespace hermex
