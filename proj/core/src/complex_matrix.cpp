#include "hermex/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hermex {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

cplx ComplexMatrix::trace() const {
  cplx t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const cplx& v : a_) s += std::norm(v);
  return std::sqrt(s);
}

double ComplexMatrix::hermiticity_defect() const {
  double d = 0.0;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return d;
}

ComplexMatrix ComplexMatrix::kron(const ComplexMatrix& a,
                                  const ComplexMatrix& b) {
  ComplexMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cplx s = a(i, j);
      if (s == cplx{0.0, 0.0}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          m(i * b.rows() + k, j * b.cols() + l) = s * b(k, l);
    }
  return m;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix product: dimension mismatch");
  ComplexMatrix m(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx s = a(i, k);
      if (s == cplx{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) m(i, j) += s * b(k, j);
    }
  return m;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix sum: dimension mismatch");
  ComplexMatrix m = a;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) += b(i, j);
  return m;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix difference: dimension mismatch");
  ComplexMatrix m = a;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= b(i, j);
  return m;
}

ComplexMatrix operator*(cplx s, const ComplexMatrix& a) {
  ComplexMatrix m = a;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= s;
  return m;
}

std::vector<cplx> ComplexMatrix::apply(std::span<const cplx> v) const {
  if (v.size() != cols_)
    throw std::invalid_argument("matrix apply: dimension mismatch");
  std::vector<cplx> out(rows_, cplx{0.0, 0.0});
  for (std::size_t i = 0; i < rows_; ++i) {
    cplx s = 0.0;
    const cplx* row = a_.data() + i * cols_;
    for (std::size_t j = 0; j < cols_; ++j) s += row[j] * v[j];
    out[i] = s;
  }
  return out;
}

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

}  // namespace

EigenSystem jacobi_eigh(ComplexMatrix a, double off_target, int max_sweeps) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("jacobi_eigh: matrix must be square");
  const std::size_t n = a.rows();
  ComplexMatrix v = ComplexMatrix::identity(n);

  // Absolute target can be unreachable for large-norm inputs; cap the
  // request at what double precision supports.
  const double target =
      std::max(off_target, 1e-15 * std::max(1.0, a.frobenius_norm()));

  int sweep = 0;
  while (off_diagonal_norm(a) > target) {
    if (++sweep > max_sweeps)
      throw std::runtime_error("jacobi_eigh: no convergence");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double r = std::abs(apq);
        if (r < 1e-300) continue;
        // Unitary plane rotation J (columns p,q):
        //   J_pp = c, J_pq = -s e^{i phi}, J_qp = s e^{-i phi}, J_qq = c
        // with phi = arg(A_pq), chosen so (J^dag A J)_pq = 0.
        const cplx phase = apq / r;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * r);
        // Stable small root of t^2 - 2 tau t - 1 = 0 for this J convention.
        const double t = (tau >= 0.0 ? -1.0 : 1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {  // A <- A J
          const cplx akp = a(k, p);
          const cplx akq = a(k, q);
          a(k, p) = c * akp + s * std::conj(phase) * akq;
          a(k, q) = -s * phase * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {  // A <- J^dag A
          const cplx apk = a(p, k);
          const cplx aqk = a(q, k);
          a(p, k) = c * apk + s * phase * aqk;
          a(q, k) = -s * std::conj(phase) * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {  // V <- V J
          const cplx vkp = v(k, p);
          const cplx vkq = v(k, q);
          v(k, p) = c * vkp + s * std::conj(phase) * vkq;
          v(k, q) = -s * phase * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  EigenSystem sys;
  sys.values.resize(n);
  sys.vectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    sys.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) sys.vectors(i, k) = v(i, order[k]);
  }
  return sys;
}

ComplexMatrix exact_unitary(const ComplexMatrix& hermitian, double t) {
  if (hermitian.rows() != hermitian.cols())
    throw std::invalid_argument("exact_unitary: matrix must be square");
  if (hermitian.rows() > 4096)
    throw std::invalid_argument("exact_unitary: dimension exceeds 2^12");
  if (hermitian.hermiticity_defect() > 1e-9)
    throw std::invalid_argument("exact_unitary: input is not Hermitian");

  const EigenSystem sys = jacobi_eigh(hermitian);
  const std::size_t n = hermitian.rows();
  ComplexMatrix u(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      cplx s = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        const cplx phase = std::polar(1.0, -sys.values[k] * t);
        s += sys.vectors(i, k) * phase * std::conj(sys.vectors(j, k));
      }
      u(i, j) = s;
    }
  return u;
}

}  // namespace hermex
