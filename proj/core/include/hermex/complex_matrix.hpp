#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace hermex {

using cplx = std::complex<double>;

/// Dense row-major complex matrix. Sized for quantum registers of at most
/// 12 qubits (4096 x 4096), which is all this project ever needs.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, cplx{0.0, 0.0}) {}

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  std::span<cplx> data() { return a_; }
  std::span<const cplx> data() const { return a_; }

  ComplexMatrix adjoint() const;
  cplx trace() const;
  double frobenius_norm() const;

  /// Largest |A_ij - conj(A_ji)| over all entries.
  double hermiticity_defect() const;

  static ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

  friend ComplexMatrix operator*(const ComplexMatrix& a,
                                 const ComplexMatrix& b);
  friend ComplexMatrix operator+(const ComplexMatrix& a,
                                 const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a,
                                 const ComplexMatrix& b);
  friend ComplexMatrix operator*(cplx s, const ComplexMatrix& a);

  std::vector<cplx> apply(std::span<const cplx> v) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> a_;
};

struct EigenSystem {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column k is the eigenvector of values[k]
};

/// Hermitian eigendecomposition by cyclic Jacobi rotations. Sweeps run until
/// the off-diagonal Frobenius norm drops below max(off_target, eps * |A|_F).
/// Throws std::runtime_error if that does not happen within max_sweeps.
EigenSystem jacobi_eigh(ComplexMatrix a, double off_target = 1e-12,
                        int max_sweeps = 64);

/// U = V e^{-i diag(lambda) t} V^dagger for Hermitian input. Inputs with a
/// hermiticity defect beyond 1e-9 are rejected.
ComplexMatrix exact_unitary(const ComplexMatrix& hermitian, double t);

}  // namespace hermex
