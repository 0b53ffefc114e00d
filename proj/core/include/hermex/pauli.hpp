#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hermex/complex_matrix.hpp"

namespace hermex {

// Qubit 0 is the leftmost tensor factor throughout this project, i.e. the
// most significant bit of a computational-basis index.

/// An n-qubit Pauli word i^phase_exp * (P_0 (x) P_1 (x) ... (x) P_{n-1}),
/// stored as X/Z bit masks (bit q describes qubit q) plus a power of i.
/// Products track the phase exactly in integer arithmetic.
class PauliString {
 public:
  /// Identity word on n qubits.
  explicit PauliString(int n_qubits);
  PauliString(int n_qubits, std::uint32_t x_mask, std::uint32_t z_mask,
              int phase_exp = 0);

  /// Parses a word over {I,X,Y,Z}; leftmost letter acts on qubit 0.
  static PauliString from_word(std::string_view word, int phase_exp = 0);
  /// Single-letter word: `letter` on `qubit`, identity elsewhere.
  static PauliString single(int n_qubits, int qubit, char letter);

  int n_qubits() const { return n_; }
  std::uint32_t x_mask() const { return x_; }
  std::uint32_t z_mask() const { return z_; }
  int phase_exp() const { return phase_; }

  bool is_identity() const { return x_ == 0 && z_ == 0; }
  int weight() const;

  char letter(int qubit) const;
  std::string word() const;

  /// Same masks with phase_exp forced to 0.
  PauliString canonical() const { return {n_, x_, z_, 0}; }

  bool same_word(const PauliString& other) const {
    return n_ == other.n_ && x_ == other.x_ && z_ == other.z_;
  }
  bool operator==(const PauliString& other) const {
    return same_word(other) && phase_ == other.phase_;
  }

  /// Pauli words either commute or anticommute; this tests the symplectic
  /// product of the masks.
  bool commutes_with(const PauliString& other) const;

  /// Exact product with accumulated phase.
  friend PauliString operator*(const PauliString& a, const PauliString& b);

  ComplexMatrix to_dense() const;

 private:
  int n_;
  std::uint32_t x_;
  std::uint32_t z_;
  int phase_;  // value is i^phase_, phase_ in {0,1,2,3}
};

/// [a, b]. Returns nullopt when the words commute, otherwise the pair
/// (coefficient, word) with [a, b] = coefficient * word and the word in
/// canonical (phase 0) form. Anticommuting words satisfy [a, b] = 2ab.
std::optional<std::pair<cplx, PauliString>> commutator(const PauliString& a,
                                                       const PauliString& b);

/// Real-weighted sum of Pauli words; represents a Hermitian operator.
/// Duplicate words are merged on insertion and coefficients below 1e-12 in
/// magnitude are dropped, so the term list stays canonical.
class PauliSum {
 public:
  struct Term {
    double coeff;
    PauliString string;  // phase_exp 0
  };

  explicit PauliSum(int n_qubits);

  /// Folds an even phase_exp of `s` into the sign of the coefficient; an odd
  /// phase would make the operator non-Hermitian and is rejected.
  void add(double coeff, const PauliString& s);

  int n_qubits() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// Largest term weight, 0 for the empty sum.
  int max_weight() const;

  ComplexMatrix to_dense() const;  // guarded at n <= 12

  /// Text format: one `coefficient WORD` pair per line, e.g. `0.5 ZZII`.
  /// Blank lines and lines starting with '#' are ignored.
  static PauliSum parse(std::istream& in);
  static PauliSum parse_text(const std::string& text);
  std::string to_text() const;

 private:
  int n_;
  std::vector<Term> terms_;
};

/// Terms of `h` with 1 <= weight <= max_weight. Drops the identity component
/// (a global phase under exponentiation) along with heavier terms.
PauliSum truncate_to_weight(const PauliSum& h, int max_weight);

/// Expands a Hermitian matrix of dimension 2^n in the Pauli-word basis.
/// Imaginary parts of the projections (at most the hermiticity defect) are
/// discarded.
PauliSum pauli_decompose(const ComplexMatrix& hermitian, int n_qubits);

}  // namespace hermex
